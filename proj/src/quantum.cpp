#include "qweyl/quantum.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace qweyl {

QuantumEngine::QuantumEngine(std::shared_ptr<const ActionContext> act) : act_(std::move(act)) {}

RatFn QuantumEngine::specialize(const RatFn& f) const {
    return f.eval_var(rs().var_h(), Rat(0)).eval_var(rs().var_k(), Rat(0));
}

QFrac QuantumEngine::qfrac_scalar(const RatFn& f) const {
    return QFrac(NovikovPoly::scalar(gkm().qgroup(), f));
}

QClass QuantumEngine::from_gkm(const GkmClass& g) const {
    QClass out;
    for (const auto& cell : g.restr)
        out.restr.push_back(QFrac(cell.map_coeffs([this](const RatFn& f) { return specialize(f); })));
    return out;
}

QClass QuantumEngine::unit() const { return from_gkm(gkm().unit_class(Ambient::Cotangent)); }

QClass QuantumEngine::zero() const {
    QClass out;
    NovikovPoly z(gkm().qgroup(), gkm().nvars());
    out.restr.assign(npts(), QFrac(z));
    return out;
}

QClass QuantumEngine::add(const QClass& a, const QClass& b) const {
    QClass out = a;
    for (int i = 0; i < npts(); ++i) out.restr[i] += b.restr[i];
    return out;
}

QClass QuantumEngine::sub(const QClass& a, const QClass& b) const {
    QClass out = a;
    for (int i = 0; i < npts(); ++i) out.restr[i] = out.restr[i] - b.restr[i];
    return out;
}

QClass QuantumEngine::scale(const QClass& a, const QFrac& c) const {
    QClass out = a;
    for (auto& x : out.restr) x = x * c;
    return out;
}

QClass QuantumEngine::cup(const QClass& a, const QClass& b) const {
    QClass out = a;
    for (int i = 0; i < npts(); ++i) out.restr[i] = out.restr[i] * b.restr[i];
    return out;
}

bool QuantumEngine::equal(const QClass& a, const QClass& b) const {
    for (int i = 0; i < npts(); ++i)
        if (!a.restr[i].equals(b.restr[i])) return false;
    return true;
}

bool QuantumEngine::is_zero(const QClass& a) const {
    for (const auto& c : a.restr)
        if (!c.is_zero()) return false;
    return true;
}

QClass QuantumEngine::act_translation(const RatVec& lam, const QClass& g) const {
    const RootSystem& R = rs();
    QClass out = g;
    for (int pos = 0; pos < npts(); ++pos) {
        int u = gkm().par().min_reps()[pos];
        long long d = act_->sign_exponent(u, lam);
        Rat sign = (d % 2) ? Rat(-1) : Rat(1);
        QExp q = gkm().qexp(R.w_act_coweight(R.w_inv(u), lam));
        QFrac factor(NovikovPoly::monomial(gkm().qgroup(), q, RatFn(Poly(gkm().nvars(), sign))));
        out.restr[pos] = out.restr[pos] * factor;
    }
    return out;
}

QClass QuantumEngine::act_weyl(int w, const QClass& g) const {
    const RootSystem& R = rs();
    const ParabolicData& par = gkm().par();
    int winv = R.w_inv(w);
    QClass out = zero();
    for (int pos = 0; pos < npts(); ++pos) {
        int v = par.min_reps()[pos];
        int src = par.rep_pos(par.rep_of(R.w_mul(winv, v)));
        out.restr[pos] = g.restr[src].map_coeffs(
            [&](const RatFn& f) { return gkm().hecke().weyl_subst(f, w); });
    }
    return out;
}

bool QuantumEngine::w_invariant(const QClass& g) const {
    for (int i = 0; i < rs().rank(); ++i)
        if (!equal(act_weyl(rs().w_simple(i), g), g)) return false;
    return true;
}

QClass QuantumEngine::z_class(const RatVec& lam) const { return act_translation(lam, unit()); }

QuantumEngine::GrElt QuantumEngine::gr_mul(const GrElt& a, const GrElt& b) const {
    GrElt out;
    for (const auto& [mu, f] : a)
        for (const auto& [nu, g] : b) {
            IntVec sum = mu;
            for (size_t i = 0; i < sum.size(); ++i) sum[i] += nu[i];
            QFrac prod = f * g;
            auto it = out.find(sum);
            if (it == out.end()) out.emplace(sum, prod);
            else it->second += prod;
        }
    return out;
}

QClass QuantumEngine::act_gr(const GrElt& a, const QClass& g) const {
    QClass out = zero();
    const RootSystem& R = rs();
    for (const auto& [mu, f] : a) {
        RatVec lam = R.coweight_from_lattice(mu);
        QClass piece = act_translation(lam, g);
        for (int pos = 0; pos < npts(); ++pos) out.restr[pos] += piece.restr[pos] * f;
    }
    return out;
}

std::optional<RatVec> QuantumEngine::generic_cocharacter(unsigned seed) const {
    const RootSystem& R = rs();
    std::mt19937_64 rng(seed * 7919u + 13u);
    for (int attempt = 0; attempt < 64; ++attempt) {
        IntVec coords(R.rank());
        for (int i = 0; i < R.rank(); ++i)
            coords[i] = static_cast<long long>(rng() % 7) - 3;
        RatVec lam = R.coweight_from_lattice(coords);
        // the signed monomials y_v = +-q^{v^{-1} lam} must be pairwise distinct
        std::set<QExp> seen;
        bool ok = true;
        for (int u : gkm().par().min_reps()) {
            QExp e = gkm().qexp(R.w_act_coweight(R.w_inv(u), lam));
            if (!seen.insert(e).second) { ok = false; break; }
        }
        if (ok) return lam;
    }
    return std::nullopt;
}

QuantumEngine::GrElt QuantumEngine::invariant_witness(
    const QClass& g, const RatVec& lam, const std::vector<std::vector<QFrac>>& cinv) const {
    const RootSystem& R = rs();
    int n = npts();
    // f_l = sum_k g|_{v_k} cinv[k][l];  witness = (1/|W|) sum_w w(f_l) [t_{w(l lam)}]
    GrElt out;
    Rat inv_order(1, R.weyl_order());
    for (int l = 0; l < n; ++l) {
        QFrac fl = qfrac_scalar(RatFn(Poly(gkm().nvars())));
        for (int k = 0; k < n; ++k) fl += g.restr[k] * cinv[k][l];
        for (int w = 0; w < R.weyl_order(); ++w) {
            QFrac moved = fl.map_coeffs([&](const RatFn& f) { return gkm().hecke().weyl_subst(f, w); })
                              .map_coeffs([&](const RatFn& f) { return f.scaled(inv_order); });
            RatVec target = R.w_act_coweight(w, lam);
            for (auto& c : target) c = c * Rat(l + 1);
            IntVec key = R.lattice_coords(target);
            auto it = out.find(key);
            if (it == out.end()) out.emplace(key, moved);
            else it->second += moved;
        }
    }
    return out;
}

QClass QuantumEngine::qh_product(const QClass& a, const QClass& b, unsigned seed) const {
    const RootSystem& R = rs();
    int n = npts();
    for (unsigned attempt = 0; attempt < 16; ++attempt) {
        auto lam_opt = generic_cocharacter(seed + attempt);
        if (!lam_opt) continue;
        RatVec lam = *lam_opt;
        // signed monomials y_k
        std::vector<QFrac> y;
        for (int u : gkm().par().min_reps()) {
            long long d = act_->sign_exponent(u, lam);
            Rat sign = (d % 2) ? Rat(-1) : Rat(1);
            QExp e = gkm().qexp(R.w_act_coweight(R.w_inv(u), lam));
            y.push_back(QFrac(NovikovPoly::monomial(gkm().qgroup(), e, RatFn(Poly(gkm().nvars(), sign)))));
        }
        // Vandermonde matrix Y[l][k] = y_k^{l+1}; invert over the q-fraction field
        std::vector<std::vector<QFrac>> m(n, std::vector<QFrac>(2 * n, qfrac_scalar(RatFn(Poly(gkm().nvars())))));
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                QFrac p = qfrac_scalar(RatFn(Poly(gkm().nvars(), Rat(1))));
                for (int rep = 0; rep <= l; ++rep) p = p * y[k];
                m[l][k] = p;
            }
            m[l][n + l] = qfrac_scalar(RatFn(Poly(gkm().nvars(), Rat(1))));
        }
        // Gauss-Jordan
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = col;
            while (piv < n && m[piv][col].is_zero()) ++piv;
            if (piv == n) { singular = true; break; }
            std::swap(m[piv], m[col]);
            QFrac p = m[col][col];
            for (int j = 0; j < 2 * n; ++j) m[col][j] = m[col][j] / p;
            for (int row = 0; row < n; ++row) {
                if (row == col || m[row][col].is_zero()) continue;
                QFrac f = m[row][col];
                for (int j = 0; j < 2 * n; ++j) m[row][j] = m[row][j] - f * m[col][j];
            }
        }
        if (singular) continue;
        // cinv[k][l]: coefficients with delta_{v_k} = sum_l cinv[k][l] z_{(l+1)lam};
        // the system delta_k = sum_l c_{kl} z_l with z_l = sum_k y_k^l delta_k
        // means C = Y^{-1} with Y[l][k] as above, and c_{kl} = (Y^{-1})[k][l]
        std::vector<std::vector<QFrac>> cinv(n, std::vector<QFrac>(n, qfrac_scalar(RatFn(Poly(gkm().nvars())))));
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) cinv[k][l] = m[k][n + l];

        GrElt wa = invariant_witness(a, lam, cinv);
        GrElt wb = invariant_witness(b, lam, cinv);
        // consistency of the rewriting; a rare collision in the q-fraction
        // arithmetic would surface here, so verify and retry if needed
        if (!equal(act_gr(wa, unit()), a) || !equal(act_gr(wb, unit()), b)) continue;
        return act_gr(gr_mul(wa, wb), unit());
    }
    throw std::domain_error("qh_product: no generic cocharacter found");
}

QClass QuantumEngine::namikawa(int w_rep, const QClass& g) const {
    const RootSystem& R = rs();
    const ParabolicData& par = gkm().par();
    int lp = par.len_p(par.rep_of(w_rep));
    Rat sign = (lp % 2) ? Rat(-1) : Rat(1);
    int winv = R.w_inv(w_rep);
    auto twist = [&](const QExp& e) {
        IntVec lift = gkm().qgroup()->lift(e);
        RatVec lam = R.coweight_from_lattice(lift);
        return gkm().qexp(R.w_act_coweight(w_rep, lam));
    };
    // at this specialization the stable basis is the conormal basis:
    // coefficients are restrictions divided by the polarization
    QClass out = zero();
    for (int pos = 0; pos < npts(); ++pos) {
        if (g.restr[pos].is_zero()) continue;
        int u = par.min_reps()[pos];
        int target = par.rep_pos(par.rep_of(R.w_mul(u, winv)));
        RatFn eps_src = specialize(RatFn(gkm().polarization(pos)));
        RatFn eps_dst = specialize(RatFn(gkm().polarization(target)));
        QFrac coeff = g.restr[pos].map_coeffs([&](const RatFn& f) { return f / eps_src; });
        QFrac twisted = coeff.map_exponents(twist);
        out.restr[target] += twisted.map_coeffs([&](const RatFn& f) { return (f * eps_dst).scaled(sign); });
    }
    return out;
}

std::vector<RatFn> QuantumEngine::q0_limit(const QClass& g) const {
    std::vector<RatFn> out;
    for (const auto& c : g.restr) out.push_back(c.radial_limit_q0(gkm().effective_form()));
    return out;
}

}  // namespace qweyl
