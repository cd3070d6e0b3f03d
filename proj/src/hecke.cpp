#include "qweyl/hecke.hpp"

#include <stdexcept>

namespace qweyl {

HeckeAlg::HeckeAlg(std::shared_ptr<const AffineWeyl> aw)
    : aw_(std::move(aw)),
      dl_cache_(AffLess{aw_.get()}),
      nil_cache_(AffLess{aw_.get()}) {
    // linear atoms that occur as denominator factors: loop-shifted roots,
    // optionally offset by the dilation parameter
    int nv = nvars();
    Poly h = Poly::var(nv, rs().var_h());
    Poly k = Poly::var(nv, rs().var_k());
    std::vector<Poly> atoms;
    // small loop shifts come first: they are by far the most common factors
    for (int a = 0; a <= 48; ++a) {
        int c = (a % 2) ? (a + 1) / 2 : -(a / 2);
        Poly ch = h.scaled(Rat(c));
        atoms.push_back(k + ch);
        for (int p : rs().positive_roots()) {
            Poly rp = root_poly(p);
            atoms.push_back(rp + ch);
            atoms.push_back(rp + ch + k);
            atoms.push_back(rp + ch - k);
        }
    }
    Poly::register_linear_candidates(nv, atoms);
}

HeckeAlg::Elt HeckeAlg::basis(const AffElt& x) const {
    Elt e = zero();
    e.terms.emplace(x, RatFn(Poly(nvars(), Rat(1))));
    return e;
}

HeckeAlg::Elt HeckeAlg::scalar(const RatFn& f) const {
    Elt e = zero();
    if (!f.is_zero()) e.terms.emplace(aw_->identity(), f);
    return e;
}

HeckeAlg::Elt HeckeAlg::scaled_basis(const AffElt& x, const RatFn& f) const {
    Elt e = zero();
    if (!f.is_zero()) e.terms.emplace(x, f);
    return e;
}

void HeckeAlg::accumulate(Coeffs& into, const AffElt& x, const RatFn& f) const {
    if (f.is_zero()) return;
    auto it = into.find(x);
    if (it == into.end()) into.emplace(x, f);
    else {
        it->second += f;
        if (it->second.is_zero()) into.erase(it);
    }
}

HeckeAlg::Elt HeckeAlg::add(const Elt& a, const Elt& b) const {
    Elt r = a;
    for (const auto& [x, f] : b.terms) accumulate(r.terms, x, f);
    return r;
}

HeckeAlg::Elt HeckeAlg::sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }

HeckeAlg::Elt HeckeAlg::neg(const Elt& a) const {
    Elt r = a;
    for (auto& [x, f] : r.terms) f = -f;
    return r;
}

HeckeAlg::Elt HeckeAlg::scale(const Elt& a, const RatFn& f) const {
    Elt r = zero();
    if (f.is_zero()) return r;
    for (const auto& [x, g] : a.terms) r.terms.emplace(x, f * g);
    return r;
}

RatFn HeckeAlg::hbar_shift(const RatFn& f, const RatVec& lam) const {
    const RootSystem& R = rs();
    int nv = nvars();
    std::vector<Poly> images;
    for (int i = 0; i < R.rank(); ++i) {
        Poly im = Poly::var(nv, i);
        if (!lam[i].is_zero()) im += Poly::var(nv, R.var_h()).scaled(lam[i]);
        images.push_back(im);
    }
    images.push_back(Poly::var(nv, R.var_h()));
    images.push_back(Poly::var(nv, R.var_k()));
    return f.subst_auto(images);
}

RatFn HeckeAlg::weyl_subst(const RatFn& f, int w) const {
    const RootSystem& R = rs();
    int nv = nvars();
    std::vector<Poly> images;
    for (int i = 0; i < R.rank(); ++i) {
        std::vector<Rat> e(R.rank(), Rat(0));
        e[i] = Rat(1);
        std::vector<Rat> img = R.w_act_weight(w, e);
        Poly im(nv);
        for (int m = 0; m < R.rank(); ++m)
            if (!img[m].is_zero()) im += Poly::var(nv, m).scaled(img[m]);
        images.push_back(im);
    }
    images.push_back(Poly::var(nv, R.var_h()));
    images.push_back(Poly::var(nv, R.var_k()));
    return f.subst_auto(images);
}

RatFn HeckeAlg::pass(const RatFn& f, const AffElt& x) const {
    const RootSystem& R = rs();
    int nv = nvars();
    std::vector<Poly> images;
    for (int i = 0; i < R.rank(); ++i) {
        std::vector<Rat> e(R.rank(), Rat(0));
        e[i] = Rat(1);
        std::vector<Rat> img = R.w_act_weight(x.w, e);
        Poly im(nv);
        for (int m = 0; m < R.rank(); ++m)
            if (!img[m].is_zero()) im += Poly::var(nv, m).scaled(img[m]);
        if (!x.lam[i].is_zero()) im += Poly::var(nv, R.var_h()).scaled(x.lam[i]);
        images.push_back(im);
    }
    images.push_back(Poly::var(nv, R.var_h()));
    images.push_back(Poly::var(nv, R.var_k()));
    return f.subst_auto(images);
}

RatFn HeckeAlg::theta_coeff(const RatFn& f) const {
    int nv = nvars();
    std::vector<Poly> images;
    for (int i = 0; i < rs().rank(); ++i) images.push_back(Poly::var(nv, i));
    images.push_back(Poly::var(nv, rs().var_h()));
    images.push_back(Poly::var(nv, rs().var_k()) - Poly::var(nv, rs().var_h()));
    return f.subst_auto(images);
}

RatFn HeckeAlg::theta_inv_coeff(const RatFn& f) const {
    int nv = nvars();
    std::vector<Poly> images;
    for (int i = 0; i < rs().rank(); ++i) images.push_back(Poly::var(nv, i));
    images.push_back(Poly::var(nv, rs().var_h()));
    images.push_back(Poly::var(nv, rs().var_k()) + Poly::var(nv, rs().var_h()));
    return f.subst_auto(images);
}

HeckeAlg::Elt HeckeAlg::mul(const Elt& a, const Elt& b) const {
    Elt r = zero();
    for (const auto& [x, f] : a.terms)
        for (const auto& [y, g] : b.terms)
            accumulate(r.terms, aw_->mul(x, y), f * pass(g, x));
    return r;
}

bool HeckeAlg::equal(const Elt& a, const Elt& b) const { return sub(a, b).is_zero(); }

Poly HeckeAlg::root_poly(int root_idx) const {
    const RootSystem& R = rs();
    Poly p(nvars());
    for (int m = 0; m < R.rank(); ++m) {
        int c = R.roots()[root_idx].wt[m];
        if (c) p += Poly::var(nvars(), m).scaled(Rat(c));
    }
    return p;
}

Poly HeckeAlg::affine_root_poly(int i) const {
    if (i == 0) return -Poly::var(nvars(), rs().var_h()) - root_poly(rs().theta_index());
    return root_poly(rs().root_index(rs().simple_root_wt(i - 1)));
}

HeckeAlg::Elt HeckeAlg::dl_generator(int i) const {
    // A_{s_i} = [s_i] + (kk/alpha_i)([s_i] - 1)
    RatFn ratio(Poly::var(nvars(), rs().var_k()), affine_root_poly(i));
    AffElt s = aw_->simple(i);
    Elt r = zero();
    r.terms.emplace(s, RatFn(Poly(nvars(), Rat(1))) + ratio);
    accumulate(r.terms, aw_->identity(), -ratio);
    return r;
}

HeckeAlg::Elt HeckeAlg::dl_omega(int omega_idx) const { return basis(aw_->omega_element(omega_idx)); }

const HeckeAlg::Elt& HeckeAlg::dl_element(const AffElt& x) const {
    auto it = dl_cache_.find(x);
    if (it != dl_cache_.end()) return it->second;
    auto rw = aw_->reduced_word(x);
    Elt cur = dl_omega(rw.omega);
    for (int i : rw.word) cur = mul(cur, dl_generator(i));
    return dl_cache_.emplace(x, std::move(cur)).first->second;
}

HeckeAlg::Elt HeckeAlg::nil_generator(int i) const {
    // D_i = (1/alpha_i)(1 - [s_i]); the tangent weight of C_{<= s_i} at s_i
    // is -alpha_i, pinned by D_i^2 = 0 and the tDAHA relations
    RatFn inv_alpha(Poly(nvars(), Rat(1)), affine_root_poly(i));
    Elt r = zero();
    r.terms.emplace(aw_->identity(), inv_alpha);
    accumulate(r.terms, aw_->simple(i), -inv_alpha);
    return r;
}

const HeckeAlg::Elt& HeckeAlg::nil_element(const AffElt& x) const {
    auto it = nil_cache_.find(x);
    if (it != nil_cache_.end()) return it->second;
    auto rw = aw_->reduced_word(x);
    Elt cur = dl_omega(rw.omega);
    for (int i : rw.word) cur = mul(cur, nil_generator(i));
    return nil_cache_.emplace(x, std::move(cur)).first->second;
}

std::map<AffElt, RatFn, AffLess> HeckeAlg::expand_in_dl(const Elt& a) const {
    std::map<AffElt, RatFn, AffLess> out(AffLess{aw_.get()});
    Elt rem = a;
    while (!rem.is_zero()) {
        // a maximal-length support element; the DL element indexed by it is
        // the unique basis vector reaching it
        auto it = std::prev(rem.terms.end());
        AffElt x = it->first;
        RatFn c = it->second;
        const Elt& ax = dl_element(x);
        RatFn coef = c / ax.terms.at(x);
        out.emplace(x, coef);
        rem = sub(rem, scale(ax, coef));
        if (rem.terms.count(x)) throw std::logic_error("expand_in_dl: elimination failed");
    }
    return out;
}

bool HeckeAlg::in_integral_form(const Elt& a) const {
    for (const auto& [x, c] : expand_in_dl(a))
        if (!c.is_polynomial()) return false;
    return true;
}

RatFn HeckeAlg::polynomial_rep(const Elt& a, const RatFn& f) const {
    RatFn out = RatFn(Poly(nvars()));
    for (const auto& [x, c] : a.terms) out += c * pass(f, x);
    return out;
}

std::pair<HeckeAlg::Elt, HeckeAlg::Elt> HeckeAlg::spherical_idempotents() const {
    const RootSystem& R = rs();
    Elt sym = zero(), alt = zero();
    Rat inv_order(1, R.weyl_order());
    for (int w = 0; w < R.weyl_order(); ++w) {
        const Elt& awelt = dl_element(aw_->from_weyl(w));
        Rat sign = (R.w_len(w) % 2) ? -inv_order : inv_order;
        sym = add(sym, scale(awelt, RatFn(Poly(nvars(), inv_order))));
        alt = add(alt, scale(awelt, RatFn(Poly(nvars(), sign))));
    }
    return {sym, alt};
}

HeckeAlg::Elt HeckeAlg::map_coeffs(const Elt& a, const std::function<RatFn(const RatFn&)>& fn) const {
    Elt r = zero();
    for (const auto& [x, f] : a.terms) {
        RatFn v = fn(f);
        if (!v.is_zero()) r.terms.emplace(x, v);
    }
    return r;
}

HeckeAlg::Elt HeckeAlg::theta_twist(const Elt& a) const {
    return map_coeffs(a, [this](const RatFn& f) { return theta_coeff(f); });
}

HeckeAlg::Elt HeckeAlg::theta_twist_inv(const Elt& a) const {
    return map_coeffs(a, [this](const RatFn& f) { return theta_inv_coeff(f); });
}

bool HeckeAlg::lambda_supported(const Elt& a) const {
    for (const auto& [x, f] : a.terms)
        if (x.w != rs().w_identity()) return false;
    return true;
}

bool HeckeAlg::w_supported(const Elt& a) const {
    for (const auto& [x, f] : a.terms)
        if (!is_zero(x.lam)) return false;
    return true;
}

HeckeAlg::Elt HeckeAlg::gr_pushforward(const Elt& a) const {
    // the fixed point w t_lam of the affine flag variety projects to the
    // point t_{w(lam)} of the affine Grassmannian
    Elt r = zero();
    for (const auto& [x, f] : a.terms) {
        RatVec mu = rs().w_act_coweight(x.w, x.lam);
        accumulate(r.terms, aw_->translation(mu), f);
    }
    return r;
}

HeckeAlg::Elt HeckeAlg::gr_module_action(const Elt& a, const Elt& v) const {
    if (!lambda_supported(v))
        throw std::invalid_argument("gr_module_action: right factor must be translation-supported");
    Elt r = zero();
    for (const auto& [x, f] : a.terms)
        for (const auto& [t, g] : v.terms) {
            RatVec mu = rs().w_act_coweight(x.w, qweyl::add(x.lam, t.lam));
            accumulate(r.terms, aw_->translation(mu), f * pass(g, x));
        }
    return r;
}

bool HeckeAlg::gr_w_invariant(const Elt& v) const {
    if (!lambda_supported(v)) return false;
    for (int i = 0; i < rs().rank(); ++i) {
        int s = rs().w_simple(i);
        for (const auto& [t, f] : v.terms) {
            AffElt ts = aw_->translation(rs().w_act_coweight(s, t.lam));
            auto it = v.terms.find(ts);
            RatFn expect = weyl_subst(f, s);
            if (it == v.terms.end() || !(it->second == expect)) return false;
        }
    }
    return true;
}

bool HeckeAlg::is_homogeneous(const Elt& a, int* degree_out) const {
    bool have = false;
    int deg = 0;
    for (const auto& [x, f] : a.terms) {
        if (!f.is_homogeneous()) return false;
        int d = f.coh_degree();
        if (!have) { deg = d; have = true; }
        else if (d != deg) return false;
    }
    if (degree_out && have) *degree_out = deg;
    return true;
}

}  // namespace qweyl
