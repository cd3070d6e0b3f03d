#include "qweyl/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace qweyl {

RatMat invert(const RatMat& m) {
    size_t n = m.size();
    RatMat a = m;
    RatMat inv(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("invert: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = a[col][col].inv();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rat f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

void row_swap(IntMat& a, IntMat& u, size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

void row_addmul(IntMat& a, IntMat& u, size_t dst, size_t src, long long f) {
    for (size_t c = 0; c < a[dst].size(); ++c) a[dst][c] += f * a[src][c];
    for (size_t c = 0; c < u[dst].size(); ++c) u[dst][c] += f * u[src][c];
}

void col_swap(IntMat& a, size_t i, size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

void col_addmul(IntMat& a, size_t dst, size_t src, long long f) {
    for (auto& row : a) row[dst] += f * row[src];
}

}  // namespace

IntDiag int_diagonalize(IntMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    IntMat u(rows, IntVec(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t k = 0;
    while (k < rows && k < cols) {
        // find nonzero pivot in the remaining block
        size_t pi = rows, pj = cols;
        for (size_t i = k; i < rows && pi == rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == rows) break;
        row_swap(a, u, k, pi);
        col_swap(a, k, pj);
        // clear row and column k by gcd steps
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = k + 1; i < rows; ++i) {
                while (a[i][k] != 0) {
                    long long q = a[i][k] / a[k][k];
                    row_addmul(a, u, i, k, -q);
                    if (a[i][k] != 0) { row_swap(a, u, i, k); again = true; }
                }
            }
            for (size_t j = k + 1; j < cols; ++j) {
                while (a[k][j] != 0) {
                    long long q = a[k][j] / a[k][k];
                    col_addmul(a, j, k, -q);
                    if (a[k][j] != 0) { col_swap(a, j, k); again = true; }
                }
            }
        }
        ++k;
    }

    IntDiag out;
    out.diag.assign(rows, 0);
    for (size_t i = 0; i < rows && i < cols; ++i) out.diag[i] = std::llabs(a[i][i]);
    out.U = u;

    // invert the unimodular U over the rationals, then round
    RatMat ur(rows, RatVec(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) ur[i][j] = Rat(u[i][j]);
    RatMat uinv = invert(ur);
    out.Uinv.assign(rows, IntVec(rows, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) {
            if (!uinv[i][j].is_integer()) throw std::logic_error("int_diagonalize: U not unimodular");
            out.Uinv[i][j] = uinv[i][j].num().to_ll();
        }
    return out;
}

}  // namespace qweyl
