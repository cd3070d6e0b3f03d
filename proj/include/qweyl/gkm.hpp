// GKM-model equivariant cohomology of T*(G/P) and G/P: classes as
// restriction tuples over the fixed points W/W_P with Novikov coefficients,
// Euler classes, the localization pairing, Schubert classes built by
// divided-difference descent, and stable envelopes built by the finite
// Demazure-Lusztig action with an independent axiomatic verifier.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qweyl/hecke.hpp"
#include "qweyl/novikov.hpp"

namespace qweyl {

enum class Ambient { Cotangent, Flag };

struct GkmClass {
    Ambient ambient = Ambient::Cotangent;
    std::vector<NovikovPoly> restr;  // indexed like ParabolicData::min_reps()
};

struct StabAxioms {
    bool support = true;
    bool diagonal = true;
    bool offdiag = true;
    bool gkm = true;
    bool homogeneous = true;
    bool ok() const { return support && diagonal && offdiag && gkm && homogeneous; }
};

class GkmContext {
public:
    GkmContext(std::shared_ptr<const HeckeAlg> hecke, std::shared_ptr<const ParabolicData> par);

    const HeckeAlg& hecke() const { return *hecke_; }
    const ParabolicData& par() const { return *par_; }
    const RootSystem& rs() const { return hecke_->rs(); }
    const std::shared_ptr<const ExponentGroup>& qgroup() const { return qgrp_; }
    int npts() const { return par_->num_reps(); }
    int dim_p() const { return par_->dim_p(); }
    int nvars() const { return rs().nvars(); }

    // q-exponent of a coweight's image in the coinvariant lattice
    QExp qexp(const RatVec& cowt) const;
    // strictly positive degree functional on effective classes: <2rho_P, ->
    const IntVec& effective_form() const { return eff_form_; }
    // Novikov degree form for homogeneity (zero on the cotangent side)
    IntVec degree_form(Ambient a) const;

    // tangent/fiber weights at the fixed point indexed by rep position
    Poly euler_tangent(int pos) const;   // e^T(T_u P), product over u(R^- \ R_P^-)
    Poly euler_fiber(int pos) const;     // product over u(alpha) + k, alpha in R^+ \ R_P^+
    Poly euler_full(int pos) const { return euler_tangent(pos) * euler_fiber(pos); }
    Poly polarization(int pos) const { return euler_tangent(pos); }

    // class constructors
    GkmClass zero_class(Ambient a) const;
    GkmClass unit_class(Ambient a) const;  // all restrictions 1
    GkmClass delta_class(Ambient a, int pos, const NovikovPoly& value) const;
    NovikovPoly scalar(const RatFn& f) const;
    NovikovPoly qmono(const QExp& e, const RatFn& f) const;

    GkmClass add(const GkmClass& a, const GkmClass& b) const;
    GkmClass sub(const GkmClass& a, const GkmClass& b) const;
    GkmClass neg(const GkmClass& a) const;
    GkmClass scale(const GkmClass& a, const NovikovPoly& c) const;
    GkmClass mul_pointwise(const GkmClass& a, const GkmClass& b) const;  // cup product
    bool equal(const GkmClass& a, const GkmClass& b) const;
    bool is_zero(const GkmClass& a) const;
    GkmClass map_coeffs(const GkmClass& a, const std::function<RatFn(const RatFn&)>& fn) const;

    // localization pairing sum_u a_u b_u / e(T_u X)
    NovikovPoly pairing(const GkmClass& a, const GkmClass& b) const;

    // distinguished classes (cached)
    GkmClass conormal_point(int pos) const;         // [T*_{uP} P]
    const GkmClass& stab_minus(int pos) const;
    const GkmClass& stab_plus(int pos) const;
    const GkmClass& schubert(int pos) const;        // sigma(u) on the flag side
    GkmClass schubert_on(Ambient a, int pos) const;
    GkmClass euler_total_class() const;             // e(T*P), pointwise fiber Euler

    // finite geometric action: group elements act by (w.g)|_v = w(g|_{w^-1 v}),
    // coefficients of the algebra element multiply restrictions
    GkmClass finite_hecke_action(const HeckeAlg::Elt& a, const GkmClass& g) const;

    // basis expansions (triangular solves over the localized field)
    std::vector<NovikovPoly> expand_in_stable(const GkmClass& g) const;
    std::vector<NovikovPoly> expand_in_schubert(const GkmClass& g) const;
    GkmClass combine_stable(const std::vector<NovikovPoly>& coeffs) const;
    GkmClass combine_schubert(Ambient a, const std::vector<NovikovPoly>& coeffs) const;

    // independent axiomatic verifier for a stable family (one class per point)
    std::vector<StabAxioms> verify_stab_axioms(const std::vector<GkmClass>& family, int sign) const;

    bool gkm_member(const GkmClass& g) const;
    bool is_homogeneous(const GkmClass& g, int* degree_out = nullptr) const;

    std::string to_string(const GkmClass& g) const;

private:
    std::shared_ptr<const HeckeAlg> hecke_;
    std::shared_ptr<const ParabolicData> par_;
    std::shared_ptr<const ExponentGroup> qgrp_;
    IntVec eff_form_;
    mutable std::vector<GkmClass> stab_minus_, stab_plus_, schubert_;

    void build_stab_minus() const;
    void build_stab_plus() const;
    void build_schubert() const;
};

}  // namespace qweyl
