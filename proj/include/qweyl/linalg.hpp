// Small exact linear algebra helpers: rational vectors/matrices, Gaussian
// inversion, and Smith-style diagonalization over the integers.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qweyl/bigint.hpp"

namespace qweyl {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline RatVec scale(const RatVec& a, const Rat& c) {
    RatVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

// Gauss-Jordan inverse; throws on singular input.
RatMat invert(const RatMat& m);

// Diagonalization U*A*V = D over Z with U, V unimodular (only U returned,
// with its inverse).  Columns of A generate the subgroup being quotiented.
struct IntDiag {
    std::vector<long long> diag;  // size = rows; |d_i|, 0 where no pivot
    IntMat U;                     // rows x rows
    IntMat Uinv;
};
IntDiag int_diagonalize(IntMat a);

}  // namespace qweyl
