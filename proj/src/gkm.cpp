#include "qweyl/gkm.hpp"

#include <stdexcept>

namespace qweyl {

GkmContext::GkmContext(std::shared_ptr<const HeckeAlg> hecke, std::shared_ptr<const ParabolicData> par)
    : hecke_(std::move(hecke)), par_(std::move(par)) {
    const RootSystem& R = rs();
    int r = R.rank();
    // coinvariant lattice: quotient by the span of b_j - s_i(b_j), i in S_P
    IntMat rel(r);
    for (int i = 0; i < r; ++i) rel[i] = IntVec{};
    bool any = false;
    for (int i : par_->subset()) {
        for (int j = 0; j < r; ++j) {
            IntVec e(r, 0);
            e[j] = 1;
            RatVec bj = R.coweight_from_lattice(e);
            RatVec diff = qweyl::sub(bj, R.w_act_coweight(R.w_simple(i), bj));
            IntVec coords = R.lattice_coords(diff);
            for (int m = 0; m < r; ++m) rel[m].push_back(coords[m]);
            any = true;
        }
    }
    if (!any) rel.clear();
    qgrp_ = std::make_shared<ExponentGroup>(r, rel);

    eff_form_.assign(r, 0);
    for (int j = 0; j < r; ++j) {
        IntVec e(r, 0);
        e[j] = 1;
        eff_form_[j] = par_->pair_two_rho_p(R.coweight_from_lattice(e));
    }
}

QExp GkmContext::qexp(const RatVec& cowt) const { return qgrp_->project(rs().lattice_coords(cowt)); }

IntVec GkmContext::degree_form(Ambient a) const {
    if (a == Ambient::Cotangent) return IntVec(rs().rank(), 0);
    return eff_form_;
}

Poly GkmContext::euler_tangent(int pos) const {
    const RootSystem& R = rs();
    int u = par_->min_reps()[pos];
    Poly out(nvars(), Rat(1));
    for (int p : R.positive_roots()) {
        if (par_->root_in_levi(p)) continue;
        out *= hecke_->root_poly(R.w_act_root(u, R.negate_root(p)));
    }
    return out;
}

Poly GkmContext::euler_fiber(int pos) const {
    const RootSystem& R = rs();
    int u = par_->min_reps()[pos];
    Poly out(nvars(), Rat(1));
    Poly k = Poly::var(nvars(), R.var_k());
    for (int p : R.positive_roots()) {
        if (par_->root_in_levi(p)) continue;
        out *= hecke_->root_poly(R.w_act_root(u, p)) + k;
    }
    return out;
}

GkmClass GkmContext::zero_class(Ambient a) const {
    GkmClass g;
    g.ambient = a;
    g.restr.assign(npts(), NovikovPoly(qgrp_, nvars()));
    return g;
}

GkmClass GkmContext::unit_class(Ambient a) const {
    GkmClass g = zero_class(a);
    for (auto& c : g.restr) c = scalar(RatFn(Poly(nvars(), Rat(1))));
    return g;
}

GkmClass GkmContext::delta_class(Ambient a, int pos, const NovikovPoly& value) const {
    GkmClass g = zero_class(a);
    g.restr[pos] = value;
    return g;
}

NovikovPoly GkmContext::scalar(const RatFn& f) const { return NovikovPoly::scalar(qgrp_, f); }

NovikovPoly GkmContext::qmono(const QExp& e, const RatFn& f) const {
    return NovikovPoly::monomial(qgrp_, e, f);
}

GkmClass GkmContext::add(const GkmClass& a, const GkmClass& b) const {
    if (a.ambient != b.ambient) throw std::invalid_argument("gkm: ambient mismatch");
    GkmClass g = a;
    for (int i = 0; i < npts(); ++i) g.restr[i] += b.restr[i];
    return g;
}

GkmClass GkmContext::sub(const GkmClass& a, const GkmClass& b) const { return add(a, neg(b)); }

GkmClass GkmContext::neg(const GkmClass& a) const {
    GkmClass g = a;
    for (auto& c : g.restr) c = -c;
    return g;
}

GkmClass GkmContext::scale(const GkmClass& a, const NovikovPoly& c) const {
    GkmClass g = a;
    for (auto& x : g.restr) x *= c;
    return g;
}

GkmClass GkmContext::mul_pointwise(const GkmClass& a, const GkmClass& b) const {
    if (a.ambient != b.ambient) throw std::invalid_argument("gkm: ambient mismatch");
    GkmClass g = a;
    for (int i = 0; i < npts(); ++i) g.restr[i] *= b.restr[i];
    return g;
}

bool GkmContext::equal(const GkmClass& a, const GkmClass& b) const {
    if (a.ambient != b.ambient) return false;
    for (int i = 0; i < npts(); ++i)
        if (!(a.restr[i] == b.restr[i])) return false;
    return true;
}

bool GkmContext::is_zero(const GkmClass& a) const {
    for (const auto& c : a.restr)
        if (!c.is_zero()) return false;
    return true;
}

GkmClass GkmContext::map_coeffs(const GkmClass& a, const std::function<RatFn(const RatFn&)>& fn) const {
    GkmClass g = a;
    for (auto& c : g.restr) c = c.map_coeffs(fn);
    return g;
}

NovikovPoly GkmContext::pairing(const GkmClass& a, const GkmClass& b) const {
    if (a.ambient != b.ambient) throw std::invalid_argument("pairing: ambient mismatch");
    NovikovPoly out(qgrp_, nvars());
    for (int i = 0; i < npts(); ++i) {
        Poly e = a.ambient == Ambient::Cotangent ? euler_full(i) : euler_tangent(i);
        out += (a.restr[i] * b.restr[i]).scaled(RatFn(Poly(nvars(), Rat(1)), e));
    }
    return out;
}

GkmClass GkmContext::conormal_point(int pos) const {
    GkmClass g = zero_class(Ambient::Cotangent);
    g.restr[pos] = scalar(RatFn(euler_tangent(pos)));
    return g;
}

GkmClass GkmContext::finite_hecke_action(const HeckeAlg::Elt& a, const GkmClass& g) const {
    if (!hecke_->w_supported(a))
        throw std::invalid_argument("finite_hecke_action: element has translation part");
    const RootSystem& R = rs();
    GkmClass out = zero_class(g.ambient);
    for (const auto& [x, c] : a.terms) {
        int w = x.w;
        int winv = R.w_inv(w);
        // (w . g)|_v = w(g|_{w^{-1} v})
        for (int pos = 0; pos < npts(); ++pos) {
            int v = par_->min_reps()[pos];
            int src = par_->rep_of(R.w_mul(winv, v));
            const NovikovPoly& cell = g.restr[par_->rep_pos(src)];
            if (cell.is_zero()) continue;
            NovikovPoly moved = cell.map_coeffs([&](const RatFn& f) { return hecke_->weyl_subst(f, w); });
            out.restr[pos] += moved.scaled(c);
        }
    }
    return out;
}

void GkmContext::build_schubert() const {
    if (!schubert_.empty()) return;
    const RootSystem& R = rs();
    int n = npts();
    schubert_.assign(n, zero_class(Ambient::Flag));
    int top = n - 1;
    schubert_[top] = delta_class(Ambient::Flag, top, scalar(RatFn(euler_tangent(top))));
    std::vector<bool> done(n, false);
    done[top] = true;
    for (int pos = n - 2; pos >= 0; --pos) {
        int u = par_->min_reps()[pos];
        bool built = false;
        for (int i = 0; i < R.rank() && !built; ++i) {
            int siu = R.w_mul(R.w_simple(i), u);
            int up = par_->rep_of(siu);
            int up_pos = par_->rep_pos(up);
            if (par_->len_p(up) != par_->len_p(u) + 1 || !done[up_pos]) continue;
            schubert_[pos] = finite_hecke_action(hecke_->nil_generator(i + 1), schubert_[up_pos]);
            done[pos] = true;
            built = true;
        }
        if (!built) throw std::logic_error("schubert descent: no covering coset found");
    }
}

const GkmClass& GkmContext::schubert(int pos) const {
    build_schubert();
    return schubert_[pos];
}

GkmClass GkmContext::schubert_on(Ambient a, int pos) const {
    GkmClass g = schubert(pos);
    g.ambient = a;
    return g;
}

void GkmContext::build_stab_minus() const {
    if (!stab_minus_.empty()) return;
    const RootSystem& R = rs();
    int n = npts();
    stab_minus_.assign(n, zero_class(Ambient::Cotangent));
    GkmClass base = conormal_point(n - 1);  // [T*_{w_0 P} P]
    int w0 = R.w_longest();
    for (int pos = 0; pos < n; ++pos) {
        int u = par_->min_reps()[pos];
        int uw0 = R.w_mul(u, w0);
        stab_minus_[pos] = finite_hecke_action(hecke_->dl_element(hecke_->aw().from_weyl(uw0)), base);
    }
}

const GkmClass& GkmContext::stab_minus(int pos) const {
    build_stab_minus();
    return stab_minus_[pos];
}

void GkmContext::build_stab_plus() const {
    if (!stab_plus_.empty()) return;
    int n = npts();
    // duality against the pairing: pairing(Stab^-(p), (-1)^{dim P} Stab^+(q))
    // = delta_{pq}; Stab^+(q) is supported on {v <= q}, and the system is
    // triangular in restriction coordinates
    Rat sgn = dim_p() % 2 ? Rat(-1) : Rat(1);
    stab_plus_.assign(n, zero_class(Ambient::Cotangent));
    for (int q = 0; q < n; ++q) {
        GkmClass sp = zero_class(Ambient::Cotangent);
        for (int p = q; p >= 0; --p) {
            NovikovPoly acc(qgrp_, nvars());
            for (int v = 0; v < n; ++v) {
                if (sp.restr[v].is_zero()) continue;
                acc += (stab_minus(p).restr[v] * sp.restr[v])
                           .scaled(RatFn(Poly(nvars(), Rat(1)), euler_full(v)));
            }
            NovikovPoly target =
                (p == q) ? scalar(RatFn(Poly(nvars(), sgn))) : NovikovPoly(qgrp_, nvars());
            NovikovPoly deficit = target - acc;
            if (deficit.is_zero()) continue;
            RatFn diag = stab_minus(p).restr[p].constant_part();
            sp.restr[p] = deficit.scaled(RatFn(euler_full(p)) / diag);
        }
        stab_plus_[q] = sp;
    }
}

const GkmClass& GkmContext::stab_plus(int pos) const {
    build_stab_plus();
    return stab_plus_[pos];
}

GkmClass GkmContext::euler_total_class() const {
    GkmClass g = zero_class(Ambient::Cotangent);
    for (int pos = 0; pos < npts(); ++pos) g.restr[pos] = scalar(RatFn(euler_fiber(pos)));
    return g;
}

std::vector<NovikovPoly> GkmContext::expand_in_stable(const GkmClass& g) const {
    int n = npts();
    std::vector<NovikovPoly> coeffs(n, NovikovPoly(qgrp_, nvars()));
    GkmClass rem = g;
    rem.ambient = Ambient::Cotangent;
    for (int pos = 0; pos < n; ++pos) {
        // Stab^-(u)|_v = 0 unless v >= u: process points in increasing order
        if (rem.restr[pos].is_zero()) continue;
        RatFn diag = stab_minus(pos).restr[pos].constant_part();
        NovikovPoly c = rem.restr[pos].scaled(diag.inv());
        coeffs[pos] = c;
        const GkmClass& piece = stab_minus(pos);
        for (int v = 0; v < n; ++v) rem.restr[v] -= piece.restr[v] * c;
    }
    if (!is_zero(rem)) throw std::logic_error("expand_in_stable: solve failed");
    return coeffs;
}

std::vector<NovikovPoly> GkmContext::expand_in_schubert(const GkmClass& g) const {
    int n = npts();
    std::vector<NovikovPoly> coeffs(n, NovikovPoly(qgrp_, nvars()));
    GkmClass rem = g;
    for (int pos = 0; pos < n; ++pos) {
        if (rem.restr[pos].is_zero()) continue;
        RatFn diag = schubert(pos).restr[pos].constant_part();
        NovikovPoly c = rem.restr[pos].scaled(diag.inv());
        coeffs[pos] = c;
        const GkmClass& piece = schubert(pos);
        for (int v = 0; v < n; ++v) rem.restr[v] -= piece.restr[v] * c;
    }
    if (!is_zero(rem)) throw std::logic_error("expand_in_schubert: solve failed");
    return coeffs;
}

GkmClass GkmContext::combine_stable(const std::vector<NovikovPoly>& coeffs) const {
    GkmClass out = zero_class(Ambient::Cotangent);
    for (int pos = 0; pos < npts(); ++pos) {
        if (coeffs[pos].is_zero()) continue;
        out = add(out, scale(stab_minus(pos), coeffs[pos]));
    }
    return out;
}

GkmClass GkmContext::combine_schubert(Ambient a, const std::vector<NovikovPoly>& coeffs) const {
    GkmClass out = zero_class(a);
    for (int pos = 0; pos < npts(); ++pos) {
        if (coeffs[pos].is_zero()) continue;
        out = add(out, scale(schubert_on(a, pos), coeffs[pos]));
    }
    return out;
}

std::vector<StabAxioms> GkmContext::verify_stab_axioms(const std::vector<GkmClass>& family,
                                                       int sign) const {
    const RootSystem& R = rs();
    int n = npts();
    std::vector<StabAxioms> out(n);
    int kk = R.var_k();
    // tau = sum of the fundamental coweights, a dominant regular cocharacter
    RatVec tau(R.rank(), Rat(0));
    {
        RatMat ct(R.rank(), RatVec(R.rank()));
        for (int i = 0; i < R.rank(); ++i)
            for (int j = 0; j < R.rank(); ++j) ct[i][j] = Rat(R.cartan(j, i));
        RatMat fw = invert(ct);  // columns are the fundamental coweights
        for (int i = 0; i < R.rank(); ++i)
            for (int j = 0; j < R.rank(); ++j) tau[i] += fw[i][j];
    }
    for (int u = 0; u < n; ++u) {
        const GkmClass& g = family[u];
        for (int v = 0; v < n; ++v) {
            bool allowed = sign < 0 ? R.bruhat_leq(par_->min_reps()[u], par_->min_reps()[v])
                                    : R.bruhat_leq(par_->min_reps()[v], par_->min_reps()[u]);
            if (!allowed && !g.restr[v].is_zero()) out[u].support = false;
        }
        {
            int urep = par_->min_reps()[u];
            Poly en(nvars(), Rat(1));
            Poly k = Poly::var(nvars(), kk);
            for (int p : R.positive_roots()) {
                if (par_->root_in_levi(p)) continue;
                int tangent = R.w_act_root(urep, R.negate_root(p));  // weight of T_u P
                int fiber = R.w_act_root(urep, p);                   // t*-part of the fiber weight
                Rat tval = R.pair_root(tangent, tau);
                Rat fval = R.pair_root(fiber, tau);
                bool attract_t = sign < 0 ? tval.sign() > 0 : tval.sign() < 0;
                bool attract_f = sign < 0 ? fval.sign() > 0 : fval.sign() < 0;
                if (attract_t) en *= hecke_->root_poly(tangent);
                if (attract_f) en *= hecke_->root_poly(fiber) + k;
            }
            const NovikovPoly& diag = g.restr[u];
            bool plus = diag == scalar(RatFn(en));
            bool minus = diag == scalar(RatFn(-en));
            if (!plus && !minus) {
                out[u].diagonal = false;
            } else {
                RatFn at0 = diag.constant_part().eval_var(kk, Rat(0));
                if (!(at0 == RatFn(polarization(u)))) out[u].diagonal = false;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            for (const auto& [e, f] : g.restr[v].terms()) {
                if (!f.is_polynomial()) { out[u].offdiag = false; continue; }
                if (!f.eval_var(kk, Rat(0)).is_zero()) out[u].offdiag = false;
            }
        }
        if (!gkm_member(g)) out[u].gkm = false;
        int deg = -1;
        if (!is_homogeneous(g, &deg) || deg != 2 * dim_p()) out[u].homogeneous = false;
    }
    return out;
}

bool GkmContext::gkm_member(const GkmClass& g) const {
    const RootSystem& R = rs();
    for (int pos = 0; pos < npts(); ++pos) {
        if (!g.restr[pos].all_polynomial()) return false;
        int u = par_->min_reps()[pos];
        int uinv = R.w_inv(u);
        for (int p : R.positive_roots()) {
            // edges: positive roots outside u(R_P)
            if (par_->root_in_levi(R.w_act_root(uinv, p))) continue;
            int other = par_->rep_pos(par_->rep_of(R.w_mul(R.reflection(p), u)));
            NovikovPoly diff = g.restr[pos] - g.restr[other];
            Poly alpha = hecke_->root_poly(p);
            for (const auto& [e, f] : diff.terms()) {
                if (!f.is_polynomial()) return false;
                if (!f.num().divisible_by(alpha)) return false;
            }
        }
    }
    return true;
}

bool GkmContext::is_homogeneous(const GkmClass& g, int* degree_out) const {
    IntVec form = degree_form(g.ambient);
    bool have = false;
    int deg = 0;
    for (const auto& cell : g.restr) {
        if (cell.is_zero()) continue;
        int d = 0;
        if (!cell.is_homogeneous(form, &d)) return false;
        if (!have) { deg = d; have = true; }
        else if (d != deg) return false;
    }
    if (degree_out && have) *degree_out = deg;
    return true;
}

std::string GkmContext::to_string(const GkmClass& g) const {
    std::string s;
    auto names = default_names(rs().rank());
    for (int pos = 0; pos < npts(); ++pos) {
        if (pos) s += "; ";
        s += rs().w_to_string(par_->min_reps()[pos]) + ": " + g.restr[pos].to_string(names);
    }
    return s;
}

}  // namespace qweyl
