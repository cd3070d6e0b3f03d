// Sparse multivariate polynomials over Q and reduced rational functions.
//
// Generators are the fundamental weights w1..wr of a fixed rank, followed by
// the loop-rotation parameter h and the dilation parameter kk.  Every
// generator has cohomological degree 2.  Canonical form is graded
// lexicographic (w1 > ... > wr > h > kk), terms descending, no zero terms;
// a rational function keeps gcd(num, den) = 1 with monic denominator.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/bigint.hpp"

namespace qweyl {

using Mono = std::vector<int32_t>;

// graded lex, true if a < b
bool mono_less(const Mono& a, const Mono& b);

class Poly {
public:
    Poly() : nv_(0) {}
    explicit Poly(int nv) : nv_(nv) {}
    Poly(int nv, const Rat& c);

    static Poly var(int nv, int idx, int exp = 1);
    static Poly constant(int nv, const Rat& c) { return Poly(nv, c); }

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rat constant_value() const;  // valid when constant

    const std::vector<std::pair<Mono, Rat>>& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // arbitrary total order for maps

    // total exponent degree of the leading term; -1 for zero
    int total_degree() const;
    bool is_homogeneous() const;
    // cohomological degree (= 2 * exponent degree); requires homogeneous
    int coh_degree() const { return 2 * total_degree(); }

    int degree_in(int var) const;  // -1 for zero
    // coefficient of var^d, as a polynomial in the same ring
    Poly coeff_of(int var, int d) const;

    // substitute each variable by the given image polynomial
    Poly subst(const std::vector<Poly>& images) const;
    // substitute a single variable by a constant
    Poly eval_var(int var, const Rat& c) const;

    // leading term under graded lex
    const Mono& lead_mono() const;
    const Rat& lead_coeff() const;

    // exact division; nullopt if not divisible
    std::optional<Poly> divide_exact(const Poly& d) const;
    bool divisible_by(const Poly& d) const { return divide_exact(d).has_value(); }

    static Poly gcd(const Poly& a, const Poly& b);  // monic

    // register monic linear forms that may appear as factors of structured
    // polynomials of this arity; gcd peels registered factors by trial
    // division before falling back to the subresultant remainder sequence
    static void register_linear_candidates(int nvars, const std::vector<Poly>& atoms);

    // make leading coefficient 1; zero stays zero
    Poly monic() const;
    // integer-primitive associate (integer coefficients, content 1, positive lead)
    Poly primitive_rat() const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string_default(int rank) const;  // names w1..wr,h,kk

    size_t hash() const;

private:
    int nv_;
    std::vector<std::pair<Mono, Rat>> terms_;  // descending graded lex

    void add_term(const Mono& m, const Rat& c);
    void normalize_from_map(std::map<Mono, Rat>& acc);

    friend class PolyBuilder;
};

std::vector<std::string> default_names(int rank);

// Reduced rational function.  The denominator is stored as a multiset of
// monic factors (linear atoms in every flow of this library), so products,
// sums, and substitutions never expand or re-factor denominators; the
// numerator is kept coprime to every factor by trial division.
class RatFn {
public:
    using DenFactors = std::map<Poly, int>;

    RatFn() = default;
    explicit RatFn(const Poly& num);
    RatFn(const Poly& num, const Poly& den);
    static RatFn constant(int nv, const Rat& c) { return RatFn(Poly(nv, c)); }
    // caller guarantees gcd(num, den) = 1; skips the cancellation pass
    static RatFn from_coprime(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    Poly den() const;  // expanded product of the factors
    const DenFactors& den_factors() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }

    RatFn inv() const;
    RatFn scaled(const Rat& c) const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }
    bool operator<(const RatFn& o) const;

    int den_degree() const;
    // degree of a homogeneous fraction (num deg - den deg), cohomological
    int coh_degree() const { return 2 * (num_.total_degree() - den_degree()); }
    bool is_homogeneous() const;

    RatFn subst(const std::vector<Poly>& images) const;
    // substitution along a ring automorphism (invertible variable images):
    // factors map to factors and coprimality is preserved
    RatFn subst_auto(const std::vector<Poly>& images) const;
    // substitute one variable by a rational constant; throws if den vanishes
    RatFn eval_var(int var, const Rat& c) const;

    std::string to_string(const std::vector<std::string>& names) const;

    size_t hash() const;

private:
    Poly num_;
    DenFactors den_;

    static RatFn make(Poly num, DenFactors den, bool cancel);
    void cancel_factors();
};

// degree of f in `var` as a rational function (num degree - den degree)
int degree_in_var(const RatFn& f, int var);

// coefficient of var^d in the expansion of f at var = infinity together
// with the remainder f - c*var^d, for d >= 0.  Computed by dividing num by
// den as univariate polynomials in `var` over the field of rational
// functions in the remaining variables; the proper part has negative
// var-degree and never contributes at d >= 0.  Throws if f has var-degree
// greater than d (pole at infinity beyond the requested order).
struct KExpansion {
    RatFn coeff;
    RatFn remainder;
};
KExpansion leading_coeff_at(const RatFn& f, int var, int d);

}  // namespace qweyl
