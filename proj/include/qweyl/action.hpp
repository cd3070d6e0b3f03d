// The action of the twisted algebra on the stable basis of T*(G/P):
// on basis pairs A_x . Stab^-(u) = (-1)^{d_{u,lam}} q^{u^{-1}(lam)}
// Stab^-(wu), extended by linearity through the Demazure-Lusztig expansion.
// On top of it: the exact confluent limit to the nil-Hecke action on
// QH(G/P), the Peterson map, the Namikawa-Weyl action, the dilation-shift
// cross-check, and the spherical-subalgebra checks.

#pragma once

#include <memory>
#include <optional>

#include "qweyl/gkm.hpp"

namespace qweyl {

struct SphericalReport {
    bool polynomial = true;     // all restrictions polynomial with Laurent q-support
    bool equivariant = true;    // W-invariance and polynomial restriction at eP
    bool namikawa_invariant = true;
    bool ok() const { return polynomial && equivariant && namikawa_invariant; }
};

class ActionContext {
public:
    explicit ActionContext(std::shared_ptr<const GkmContext> gkm);

    const GkmContext& gkm() const { return *gkm_; }
    const HeckeAlg& hecke() const { return gkm_->hecke(); }
    const AffineWeyl& aw() const { return hecke().aw(); }
    const RootSystem& rs() const { return gkm_->rs(); }
    const ParabolicData& par() const { return gkm_->par(); }

    // sign exponent d_{u,lam} = <u(2 rho_P), lam>
    long long sign_exponent(int u_rep, const RatVec& lam) const;

    // Theorem-B action on a basis pair; returns the class
    GkmClass act_dl(const AffElt& x, int pos) const;
    // and its combinatorial shape (sign, q-exponent, target point)
    struct StableImage {
        Rat sign;
        QExp q;
        int pos;
    };
    StableImage act_dl_data(const AffElt& x, int pos) const;

    // full action through the DL expansion and the stable expansion
    GkmClass act(const HeckeAlg::Elt& a, const GkmClass& g) const;

    // [t_lam]-action with the dilation parameter set to zero (closed form)
    GkmClass act_translation_k0(const RatVec& lam, const GkmClass& g) const;

    // localization factor of the abelian shift operator at a fixed point:
    // product over the tangent weights of T*(G/P) of the finite ratios
    // prod_{c=0}^{<beta,lam>-1} (beta + c h), as a rational function, times
    // q^{u^{-1}(lam)}
    struct DeltaFactor {
        RatFn factor;
        QExp q;
    };
    DeltaFactor delta_factor(const RatVec& lam, int pos) const;

    // exact confluent limit: the nil-Hecke action on QH(G/P) computed by
    // rescaling Novikov variables and extracting the top dilation degree
    GkmClass confluent_action(const AffElt& x, int pos) const;
    // the combinatorial gate it must equal
    GkmClass confluent_gate(const AffElt& x, int pos) const;

    // Peterson map on the affine Grassmannian class indexed by lam
    GkmClass peterson(const RatVec& lam) const;
    GkmClass peterson_gate(const RatVec& lam) const;

    // Namikawa-Weyl action of a normalizer representative
    GkmClass namikawa_act(int w_rep, const GkmClass& g) const;

    // pushforward composed with the action on the Grassmannian unit
    HeckeAlg::Elt psi_spherical(const HeckeAlg::Elt& a) const;

    // membership checks for act(a, 1) on the cotangent side (Borel only)
    SphericalReport spherical_image_check(const HeckeAlg::Elt& a) const;

    bool w_invariant(const GkmClass& g) const;

private:
    std::shared_ptr<const GkmContext> gkm_;
};

}  // namespace qweyl
