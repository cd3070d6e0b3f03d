// Novikov Laurent polynomials over a finitely generated abelian exponent
// group, plus fractions with pure-q denominators.
//
// Exponent groups are quotients of the cocharacter lattice: the lattice
// itself on the cotangent-bundle side, the W_P-coinvariants on the flag
// side.  Exponents are stored in canonical (free, torsion) coordinates
// obtained from an integer diagonalization of the relation matrix.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qweyl/linalg.hpp"
#include "qweyl/poly.hpp"

namespace qweyl {

class ExponentGroup {
public:
    // ambient Z^n modulo the column span of `relations` (n x k)
    ExponentGroup(int ambient, const IntMat& relations);

    int ambient() const { return ambient_; }
    int free_rank() const { return static_cast<int>(free_rows_.size()); }
    const std::vector<long long>& torsion_moduli() const { return tors_mod_; }

    struct Exp {
        IntVec free;
        IntVec tors;
        bool operator==(const Exp& o) const { return free == o.free && tors == o.tors; }
        bool operator!=(const Exp& o) const { return !(*this == o); }
        bool operator<(const Exp& o) const {
            if (free != o.free) return free < o.free;
            return tors < o.tors;
        }
        bool is_zero() const;
    };

    Exp project(const IntVec& ambient_vec) const;
    Exp zero() const;
    Exp add(const Exp& a, const Exp& b) const;
    Exp neg(const Exp& a) const;
    // a canonical ambient lift (torsion coordinates lifted into [0, d))
    IntVec lift(const Exp& e) const;

    std::string to_string(const Exp& e) const;

private:
    int ambient_;
    std::vector<long long> tors_mod_;   // moduli > 1
    std::vector<int> free_rows_, tors_rows_;
    IntMat u_, uinv_;
};

using QExp = ExponentGroup::Exp;

// finite sum of q^mu * RatFn
class NovikovPoly {
public:
    NovikovPoly() = default;
    NovikovPoly(std::shared_ptr<const ExponentGroup> grp, int nv) : grp_(std::move(grp)), nv_(nv) {}
    static NovikovPoly scalar(std::shared_ptr<const ExponentGroup> grp, const RatFn& f);
    static NovikovPoly monomial(std::shared_ptr<const ExponentGroup> grp, const QExp& e, const RatFn& f);

    const std::shared_ptr<const ExponentGroup>& group() const { return grp_; }
    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<QExp, RatFn>& terms() const { return terms_; }

    // the coefficient of q^0
    RatFn constant_part() const;
    bool is_scalar() const;  // supported on q^0 only (or zero)

    NovikovPoly operator-() const;
    NovikovPoly operator+(const NovikovPoly& o) const;
    NovikovPoly operator-(const NovikovPoly& o) const;
    NovikovPoly operator*(const NovikovPoly& o) const;
    NovikovPoly& operator+=(const NovikovPoly& o) { *this = *this + o; return *this; }
    NovikovPoly& operator-=(const NovikovPoly& o) { *this = *this - o; return *this; }
    NovikovPoly& operator*=(const NovikovPoly& o) { *this = *this * o; return *this; }

    NovikovPoly scaled(const RatFn& f) const;
    NovikovPoly shifted(const QExp& e) const;  // multiply by q^e

    bool operator==(const NovikovPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NovikovPoly& o) const { return !(*this == o); }

    // apply a map to every coefficient
    NovikovPoly map_coeffs(const std::function<RatFn(const RatFn&)>& fn) const;
    // apply a group endomorphism to every exponent
    NovikovPoly map_exponents(const std::function<QExp(const QExp&)>& fn) const;

    bool all_polynomial() const;  // every cell a polynomial

    // homogeneity: cells homogeneous and coh_degree + qdeg(e) all equal;
    // qdeg(e) = 2 * <deg_form, lift(e)> for a given integer functional
    bool is_homogeneous(const IntVec& deg_form, int* degree_out = nullptr) const;

    std::string to_string(const std::vector<std::string>& names) const;

    void set_term(const QExp& e, const RatFn& f);  // overwrite/erase-if-zero

private:
    std::shared_ptr<const ExponentGroup> grp_;
    int nv_ = 0;
    std::map<QExp, RatFn> terms_;
};

// fraction num/den with den a pure-q Laurent polynomial (rational
// coefficients); equality via cross multiplication
class QFrac {
public:
    QFrac() = default;
    explicit QFrac(const NovikovPoly& num);
    QFrac(const NovikovPoly& num, const NovikovPoly& den);

    const NovikovPoly& num() const { return num_; }
    const NovikovPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QFrac operator-() const;
    QFrac operator+(const QFrac& o) const;
    QFrac operator-(const QFrac& o) const;
    QFrac operator*(const QFrac& o) const;
    QFrac operator/(const QFrac& o) const;
    QFrac& operator+=(const QFrac& o) { *this = *this + o; return *this; }

    bool equals(const QFrac& o) const;  // cross multiplication

    QFrac map_coeffs(const std::function<RatFn(const RatFn&)>& fn) const;
    QFrac map_exponents(const std::function<QExp(const QExp&)>& fn) const;

    // value of the radial limit q^mu -> t^{<omega, lift(mu)>} at t -> 0.
    // omega must be positive on the support of the true power series; throws
    // if the limit diverges (numerator order below denominator order).
    RatFn radial_limit_q0(const IntVec& omega) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    NovikovPoly num_, den_;
    void normalize();
};

}  // namespace qweyl
