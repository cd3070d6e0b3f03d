// The localized twisted group algebra Q(t)(h,kk) x W~ in the fixed-point
// basis [x], with the Demazure-Lusztig basis A_x, the nil-Hecke basis
// D_x, spherical idempotents, the dilation twist, and the affine
// Grassmannian side (translation-supported elements, pushforward, module
// structure).
//
// Multiplication passes coefficients through group elements by the loop
// twist: [w t_lam] f = (w f^lam) [w t_lam], where f^lam shifts every
// t*-generator mu by <mu, lam> h.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qweyl/affine.hpp"
#include "qweyl/poly.hpp"

namespace qweyl {

class HeckeAlg {
public:
    explicit HeckeAlg(std::shared_ptr<const AffineWeyl> aw);

    const AffineWeyl& aw() const { return *aw_; }
    const RootSystem& rs() const { return aw_->rs(); }
    std::shared_ptr<const AffineWeyl> aw_ptr() const { return aw_; }
    int nvars() const { return rs().nvars(); }

    using Coeffs = std::map<AffElt, RatFn, AffLess>;

    struct Elt {
        Coeffs terms;
        bool is_zero() const { return terms.empty(); }
    };

    Elt zero() const { return Elt{Coeffs(AffLess{aw_.get()})}; }
    Elt one() const { return basis(aw_->identity()); }
    Elt basis(const AffElt& x) const;                    // [x]
    Elt scalar(const RatFn& f) const;                    // f [e]
    Elt scaled_basis(const AffElt& x, const RatFn& f) const;

    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt scale(const Elt& a, const RatFn& f) const;
    Elt mul(const Elt& a, const Elt& b) const;
    bool equal(const Elt& a, const Elt& b) const;

    // coefficient passing [x] f = pass(f, x) [x]
    RatFn pass(const RatFn& f, const AffElt& x) const;
    RatFn hbar_shift(const RatFn& f, const RatVec& lam) const;
    RatFn weyl_subst(const RatFn& f, int w) const;
    RatFn theta_coeff(const RatFn& f) const;       // kk -> kk - h
    RatFn theta_inv_coeff(const RatFn& f) const;   // kk -> kk + h

    // linear forms
    Poly root_poly(int root_idx) const;
    Poly affine_root_poly(int i) const;  // alpha_i for i >= 1, -h - theta for i = 0
    Poly fundamental_weight(int i) const { return Poly::var(nvars(), i); }

    // Demazure-Lusztig and nil-Hecke structure
    Elt dl_generator(int i) const;            // A_{s_i}
    Elt dl_omega(int omega_idx) const;        // A_pi = [pi]
    const Elt& dl_element(const AffElt& x) const;   // A_x, cached
    Elt nil_generator(int i) const;           // D_i = (1/alpha_i)(1 - [s_i])
    const Elt& nil_element(const AffElt& x) const;  // D_x, cached

    // expansion a = sum c_x A_x over the localized field
    std::map<AffElt, RatFn, AffLess> expand_in_dl(const Elt& a) const;
    bool in_integral_form(const Elt& a) const;  // all DL coefficients polynomial

    // difference-rational polynomial representation
    RatFn polynomial_rep(const Elt& a, const RatFn& f) const;

    std::pair<Elt, Elt> spherical_idempotents() const;  // (e, e_-)

    Elt theta_twist(const Elt& a) const;
    Elt theta_twist_inv(const Elt& a) const;
    Elt map_coeffs(const Elt& a, const std::function<RatFn(const RatFn&)>& fn) const;

    // affine Grassmannian side
    bool lambda_supported(const Elt& a) const;
    bool w_supported(const Elt& a) const;  // finite Weyl support
    Elt gr_pushforward(const Elt& a) const;
    Elt gr_module_action(const Elt& a, const Elt& v) const;  // v translation-supported
    bool gr_w_invariant(const Elt& v) const;

    // grading
    bool is_homogeneous(const Elt& a, int* degree_out = nullptr) const;

private:
    std::shared_ptr<const AffineWeyl> aw_;
    mutable std::map<AffElt, Elt, AffLess> dl_cache_;
    mutable std::map<AffElt, Elt, AffLess> nil_cache_;

    void accumulate(Coeffs& into, const AffElt& x, const RatFn& f) const;
};

}  // namespace qweyl
