// Quantum products on the cotangent side at the commutative specialization
// (loop and dilation parameters both zero), where translation classes act
// diagonally on fixed-point components with signed Novikov monomials.  A
// Weyl-invariant class is rewritten in the span of translation images of 1
// by a Vandermonde solve at a generic cocharacter; products are then
// computed by convolution on the Grassmannian side and re-application.

#pragma once

#include <memory>
#include <optional>

#include "qweyl/action.hpp"

namespace qweyl {

// restriction tuple with coefficients in the fraction field over the
// Novikov ring; the t-variables stay exact, h and kk are specialized away
struct QClass {
    std::vector<QFrac> restr;
};

class QuantumEngine {
public:
    explicit QuantumEngine(std::shared_ptr<const ActionContext> act);

    const GkmContext& gkm() const { return act_->gkm(); }
    const RootSystem& rs() const { return gkm().rs(); }
    int npts() const { return gkm().npts(); }

    // specialize a polynomial class at h = kk = 0
    QClass from_gkm(const GkmClass& g) const;
    QClass unit() const;
    QClass zero() const;

    QClass add(const QClass& a, const QClass& b) const;
    QClass sub(const QClass& a, const QClass& b) const;
    QClass scale(const QClass& a, const QFrac& c) const;
    QClass cup(const QClass& a, const QClass& b) const;  // pointwise product
    bool equal(const QClass& a, const QClass& b) const;
    bool is_zero(const QClass& a) const;

    // diagonal action of a translation class
    QClass act_translation(const RatVec& lam, const QClass& g) const;
    // geometric action of a Weyl group element
    QClass act_weyl(int w, const QClass& g) const;
    bool w_invariant(const QClass& g) const;

    // z_lam = [t_lam] . 1 = sum_v (-1)^{d_{v,lam}} q^{v^{-1} lam} b_v
    QClass z_class(const RatVec& lam) const;

    // the quantum product on Weyl-invariant classes; deterministic generic
    // cocharacter drawn from the seed, retried on collisions
    QClass qh_product(const QClass& a, const QClass& b, unsigned seed = 1) const;

    // Namikawa-Weyl action at this specialization
    QClass namikawa(int w_rep, const QClass& g) const;

    // the q -> 0 limit of every restriction (radial, along the effective
    // grading); throws if a component diverges
    std::vector<RatFn> q0_limit(const QClass& g) const;

private:
    std::shared_ptr<const ActionContext> act_;

    // Grassmannian-side element at the commutative specialization
    using GrElt = std::map<IntVec, QFrac>;
    GrElt gr_mul(const GrElt& a, const GrElt& b) const;
    QClass act_gr(const GrElt& a, const QClass& g) const;
    GrElt invariant_witness(const QClass& g, const RatVec& lam,
                            const std::vector<std::vector<QFrac>>& cinv) const;
    std::optional<RatVec> generic_cocharacter(unsigned seed) const;

    RatFn specialize(const RatFn& f) const;
    QFrac qfrac_scalar(const RatFn& f) const;
};

}  // namespace qweyl
