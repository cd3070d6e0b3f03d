#include "qweyl/action.hpp"

#include <stdexcept>

namespace qweyl {

ActionContext::ActionContext(std::shared_ptr<const GkmContext> gkm) : gkm_(std::move(gkm)) {}

long long ActionContext::sign_exponent(int u_rep, const RatVec& lam) const {
    return par().pair_two_rho_p(rs().w_act_coweight(rs().w_inv(u_rep), lam));
}

ActionContext::StableImage ActionContext::act_dl_data(const AffElt& x, int pos) const {
    const RootSystem& R = rs();
    int u = par().min_reps()[pos];
    long long d = sign_exponent(u, x.lam);
    RatVec beta = R.w_act_coweight(R.w_inv(u), x.lam);
    StableImage out;
    out.sign = (d % 2) ? Rat(-1) : Rat(1);
    out.q = gkm_->qexp(beta);
    out.pos = par().rep_pos(par().rep_of(R.w_mul(x.w, u)));
    return out;
}

GkmClass ActionContext::act_dl(const AffElt& x, int pos) const {
    StableImage im = act_dl_data(x, pos);
    return gkm_->scale(gkm_->stab_minus(im.pos), gkm_->qmono(im.q, RatFn(Poly(gkm_->nvars(), im.sign))));
}

GkmClass ActionContext::act(const HeckeAlg::Elt& a, const GkmClass& g) const {
    const HeckeAlg& H = hecke();
    std::vector<NovikovPoly> coeffs = gkm_->expand_in_stable(g);
    GkmClass out = gkm_->zero_class(Ambient::Cotangent);
    for (int pos = 0; pos < gkm_->npts(); ++pos) {
        if (coeffs[pos].is_zero()) continue;
        for (const auto& [qe, f] : coeffs[pos].terms()) {
            // a * (f [e]) expanded in the DL basis, then Theorem B termwise
            HeckeAlg::Elt m = H.mul(a, H.scalar(f));
            for (const auto& [x, c] : H.expand_in_dl(m)) {
                StableImage im = act_dl_data(x, pos);
                QExp qtot = gkm_->qgroup()->add(qe, im.q);
                NovikovPoly factor = gkm_->qmono(qtot, c.scaled(im.sign));
                out = gkm_->add(out, gkm_->scale(gkm_->stab_minus(im.pos), factor));
            }
        }
    }
    return out;
}

GkmClass ActionContext::act_translation_k0(const RatVec& lam, const GkmClass& g) const {
    // at k = 0 the stable basis degenerates to conormal classes and the
    // translation acts diagonally: f * conormal(u) goes to
    // (-1)^{d_{u,lam}} q^{u^{-1} lam} f^{lam} * conormal(u)
    const HeckeAlg& H = hecke();
    int kk = rs().var_k();
    AffElt tl = aw().translation(lam);
    GkmClass out = gkm_->zero_class(g.ambient);
    for (int pos = 0; pos < gkm_->npts(); ++pos) {
        if (g.restr[pos].is_zero()) continue;
        int u = par().min_reps()[pos];
        long long d = sign_exponent(u, lam);
        Rat sign = (d % 2) ? Rat(-1) : Rat(1);
        QExp q = gkm_->qexp(rs().w_act_coweight(rs().w_inv(u), lam));
        RatFn eps(gkm_->polarization(pos));
        NovikovPoly cell = g.restr[pos].map_coeffs([&](const RatFn& f) {
            RatFn shifted = H.hbar_shift(f / eps, lam);
            return (shifted * eps).eval_var(kk, Rat(0)).scaled(sign);
        });
        out.restr[pos] = cell.shifted(q);
    }
    return out;
}

ActionContext::DeltaFactor ActionContext::delta_factor(const RatVec& lam, int pos) const {
    const RootSystem& R = rs();
    const HeckeAlg& H = hecke();
    int nv = gkm_->nvars();
    int u = par().min_reps()[pos];
    Poly h = Poly::var(nv, R.var_h());
    Poly k = Poly::var(nv, R.var_k());
    // collect linear factors of numerator and denominator, cancel matches,
    // and assemble a fraction that is coprime by construction
    std::vector<Poly> numf, denf;
    auto contribute = [&](const Poly& beta, long long pairing) {
        if (pairing > 0) {
            for (long long c = 0; c < pairing; ++c) numf.push_back(beta + h.scaled(Rat(c)));
        } else if (pairing < 0) {
            for (long long c = pairing; c < 0; ++c) denf.push_back(beta + h.scaled(Rat(c)));
        }
    };
    for (int p : R.positive_roots()) {
        if (par().root_in_levi(p)) continue;
        // tangent weight u(-alpha) and fiber weight u(alpha) + k
        int tangent = R.w_act_root(u, R.negate_root(p));
        int fiber = R.w_act_root(u, p);
        contribute(H.root_poly(tangent), R.pair_root(tangent, lam).num().to_ll());
        contribute(H.root_poly(fiber) + k, R.pair_root(fiber, lam).num().to_ll());
    }
    Rat scalar(1);
    for (auto& d : denf) {
        bool cancelled = false;
        for (size_t i = 0; i < numf.size() && !cancelled; ++i) {
            // proportional linear forms cancel up to a rational scalar
            Poly nm = numf[i].monic(), dm = d.monic();
            if (nm == dm) {
                scalar = scalar * (numf[i].lead_coeff() / d.lead_coeff());
                numf.erase(numf.begin() + static_cast<long>(i));
                cancelled = true;
            }
        }
        if (cancelled) d = Poly(nv, Rat(1));
    }
    Poly num(nv, scalar), den(nv, Rat(1));
    for (const auto& f : numf) num *= f;
    for (const auto& f : denf) den *= f;
    DeltaFactor out;
    out.factor = RatFn::from_coprime(num, den);
    out.q = gkm_->qexp(rs().w_act_coweight(rs().w_inv(u), lam));
    return out;
}

GkmClass ActionContext::confluent_gate(const AffElt& x, int pos) const {
    int u = par().min_reps()[pos];
    GkmClass out = gkm_->zero_class(Ambient::Flag);
    if (!aw().p_allowed_pair(x, u, par())) return out;
    QExp q = gkm_->qexp(rs().w_act_coweight(rs().w_inv(u), x.lam));
    int target = par().rep_pos(par().rep_of(rs().w_mul(x.w, u)));
    return gkm_->scale(gkm_->schubert_on(Ambient::Flag, target),
                       gkm_->qmono(q, RatFn(Poly(gkm_->nvars(), Rat(1)))));
}

GkmClass ActionContext::confluent_action(const AffElt& x, int pos) const {
    // apply the Novikov rescaling q^beta -> k^{-<c_1, beta>} q^beta to the
    // Theorem-B image and extract the leading dilation coefficient
    const RootSystem& R = rs();
    int kk = R.var_k();
    int u = par().min_reps()[pos];
    StableImage im = act_dl_data(x, pos);
    long long d = sign_exponent(u, x.lam);
    long long shift = x.len + gkm_->dim_p() - par().len_p(u);
    long long order = d + shift;
    Rat outer_sign = (shift % 2) ? Rat(-1) : Rat(1);

    std::vector<NovikovPoly> sigma = gkm_->expand_in_schubert(gkm_->stab_minus(im.pos));
    GkmClass out = gkm_->zero_class(Ambient::Flag);
    for (int v = 0; v < gkm_->npts(); ++v) {
        if (sigma[v].is_zero()) continue;
        RatFn c = sigma[v].constant_part();  // coefficients carry no q
        if (order < 0) {
            // negative extraction order means a pole at k = infinity
            if (!c.is_zero()) throw std::domain_error("confluent limit: pole at k = infinity");
            continue;
        }
        KExpansion e = leading_coeff_at(c, kk, static_cast<int>(order));
        RatFn lim = e.coeff.scaled(outer_sign * im.sign);
        if (lim.is_zero()) continue;
        out = gkm_->add(out, gkm_->scale(gkm_->schubert_on(Ambient::Flag, v), gkm_->qmono(im.q, lim)));
    }
    return out;
}

GkmClass ActionContext::peterson(const RatVec& lam) const {
    auto ad = aw().antidominant_data(lam);
    AffElt x = aw().mul(aw().from_weyl(ad.w_min), aw().translation(ad.lam_minus));
    return confluent_action(x, 0);
}

GkmClass ActionContext::peterson_gate(const RatVec& lam) const {
    auto ad = aw().antidominant_data(lam);
    GkmClass out = gkm_->zero_class(Ambient::Flag);
    if (!aw().p_allowed_coweight(lam, par())) return out;
    QExp q = gkm_->qexp(ad.lam_minus);
    int target = par().rep_pos(par().rep_of(ad.w_min));
    return gkm_->scale(gkm_->schubert_on(Ambient::Flag, target),
                       gkm_->qmono(q, RatFn(Poly(gkm_->nvars(), Rat(1)))));
}

GkmClass ActionContext::namikawa_act(int w_rep, const GkmClass& g) const {
    const RootSystem& R = rs();
    bool found = false;
    for (int v : par().normalizer_reps())
        if (v == w_rep) found = true;
    if (!found) throw std::invalid_argument("namikawa_act: element does not normalize W_P");
    int lp = par().len_p(par().rep_of(w_rep));
    Rat sign = (lp % 2) ? Rat(-1) : Rat(1);
    int winv = R.w_inv(w_rep);
    auto twist = [&](const QExp& e) {
        IntVec lift = gkm_->qgroup()->lift(e);
        RatVec lam = R.coweight_from_lattice(lift);
        return gkm_->qexp(R.w_act_coweight(w_rep, lam));
    };
    std::vector<NovikovPoly> coeffs = gkm_->expand_in_stable(g);
    GkmClass out = gkm_->zero_class(Ambient::Cotangent);
    for (int pos = 0; pos < gkm_->npts(); ++pos) {
        if (coeffs[pos].is_zero()) continue;
        int u = par().min_reps()[pos];
        int target = par().rep_pos(par().rep_of(R.w_mul(u, winv)));
        NovikovPoly moved = coeffs[pos].map_exponents(twist).scaled(RatFn(Poly(gkm_->nvars(), sign)));
        out = gkm_->add(out, gkm_->scale(gkm_->stab_minus(target), moved));
    }
    return out;
}

HeckeAlg::Elt ActionContext::psi_spherical(const HeckeAlg::Elt& a) const {
    const HeckeAlg& H = hecke();
    return H.gr_module_action(a, H.basis(aw().translation(RatVec(rs().rank(), Rat(0)))));
}

bool ActionContext::w_invariant(const GkmClass& g) const {
    for (int i = 0; i < rs().rank(); ++i) {
        HeckeAlg::Elt s = hecke().basis(aw().from_weyl(rs().w_simple(i)));
        if (!gkm_->equal(gkm_->finite_hecke_action(s, g), g)) return false;
    }
    return true;
}

SphericalReport ActionContext::spherical_image_check(const HeckeAlg::Elt& a) const {
    if (!par().subset().empty())
        throw std::invalid_argument("spherical_image_check: requires the Borel parabolic");
    SphericalReport rep;
    GkmClass img = act(a, gkm_->unit_class(Ambient::Cotangent));
    for (const auto& cell : img.restr)
        if (!cell.all_polynomial()) rep.polynomial = false;
    // equivariance: W-invariance plus polynomial restriction at eP (the
    // latter is subsumed by polynomiality of all restrictions)
    if (!w_invariant(img)) rep.equivariant = false;
    if (!img.restr[0].all_polynomial()) rep.equivariant = false;
    for (int w : par().normalizer_reps()) {
        if (w == rs().w_identity()) continue;
        if (!gkm_->equal(namikawa_act(w, img), img)) rep.namikawa_invariant = false;
    }
    return rep;
}

}  // namespace qweyl
