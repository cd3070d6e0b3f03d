#include "qweyl/affine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qweyl {

AffineWeyl::AffineWeyl(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
    build_simples();
    build_omega();
}

void AffineWeyl::build_simples() {
    const RootSystem& R = *rs_;
    // s_0 = s_theta t_{-theta^vee}; s_theta(w_j) = w_j - theta^vee_j * theta
    const Root& th = R.roots()[R.theta_index()];
    int s_theta = -1;
    for (int w = 0; w < R.weyl_order(); ++w) {
        bool match = true;
        for (int j = 0; j < R.rank() && match; ++j) {
            std::vector<Rat> e(R.rank(), Rat(0));
            e[j] = Rat(1);
            std::vector<Rat> img = R.w_act_weight(w, e);
            for (int m = 0; m < R.rank(); ++m) {
                Rat expect = (j == m ? Rat(1) : Rat(0)) - Rat(th.cowt[j]) * Rat(th.wt[m]);
                if (img[m] != expect) { match = false; break; }
            }
        }
        if (match) { s_theta = w; break; }
    }
    if (s_theta < 0) throw std::logic_error("reflection in the highest root not found");
    RatVec lam0(R.rank(), Rat(0));
    for (int m = 0; m < R.rank(); ++m) lam0[m] = Rat(-th.cowt[m]);
    simples_.push_back(make(s_theta, lam0));
    for (int i = 0; i < R.rank(); ++i) simples_.push_back(from_weyl(R.w_simple(i)));
}

AffElt AffineWeyl::make(int w, const RatVec& lam) const {
    AffElt x;
    x.w = w;
    x.lam = lam;
    x.len = length(w, lam);
    return x;
}

AffElt AffineWeyl::identity() const { return make(rs_->w_identity(), RatVec(rs_->rank(), Rat(0))); }

AffElt AffineWeyl::mul(const AffElt& a, const AffElt& b) const {
    // (w t_lam)(u t_mu) = (wu) t_{u^{-1}(lam) + mu}
    int w = rs_->w_mul(a.w, b.w);
    RatVec lam = add(rs_->w_act_coweight(rs_->w_inv(b.w), a.lam), b.lam);
    return make(w, lam);
}

AffElt AffineWeyl::inv(const AffElt& a) const {
    int w = rs_->w_inv(a.w);
    RatVec lam = scale(rs_->w_act_coweight(a.w, a.lam), Rat(-1));
    return make(w, lam);
}

int AffineWeyl::length(int w, const RatVec& lam) const {
    const RootSystem& R = *rs_;
    long long total = 0;
    int winv = R.w_inv(w);
    for (int p : R.positive_roots()) {
        Rat pr = R.pair_root(p, lam);
        if (!pr.is_integer()) throw std::invalid_argument("length: coweight pairs non-integrally");
        long long c = pr.num().to_ll();
        total += std::llabs(c);
        // alpha in R^+ with w(alpha) < 0  <=>  alpha in R^+ cap w^{-1}(R^-)
        if (!R.roots()[R.w_act_root(w, p)].positive) total += (c >= 0) ? 1 : -1;
    }
    if (total < 0) throw std::logic_error("negative affine length");
    return static_cast<int>(total);
}

AffElt AffineWeyl::simple(int i) const { return simples_[i]; }

bool AffineWeyl::has_right_descent(const AffElt& x, int i) const {
    return mul(x, simple(i)).len < x.len;
}

void AffineWeyl::build_omega() {
    const RootSystem& R = *rs_;
    int r = R.rank();
    // quotient Lambda / Q^vee in lattice-basis coordinates
    IntMat rel(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) {
        RatVec e(r, Rat(0));
        e[i] = Rat(1);
        IntVec coords = R.lattice_coords(e);  // coroot basis vector in Lambda basis
        for (int m = 0; m < r; ++m) rel[m][i] = coords[m];
    }
    ExponentGroup quo(r, rel);
    if (quo.free_rank() != 0) throw std::logic_error("Lambda/Q^vee not finite");

    // enumerate the quotient
    std::vector<QExp> classes;
    const auto& mods = quo.torsion_moduli();
    std::vector<IntVec> tuples{IntVec{}};
    for (long long m : mods) {
        std::vector<IntVec> next;
        for (const auto& t : tuples)
            for (long long v = 0; v < m; ++v) {
                IntVec t2 = t;
                t2.push_back(v);
                next.push_back(t2);
            }
        tuples = next;
    }
    for (const auto& t : tuples) {
        QExp e = quo.zero();
        e.tors = t;
        classes.push_back(e);
    }

    for (const QExp& cls : classes) {
        bool found = false;
        // search small lattice boxes for the length-zero representative
        for (int radius = 0; radius <= 2 && !found; ++radius) {
            std::vector<IntVec> pts{IntVec{}};
            for (int d = 0; d < r; ++d) {
                std::vector<IntVec> next;
                for (const auto& p : pts)
                    for (long long v = -radius; v <= radius; ++v) {
                        IntVec p2 = p;
                        p2.push_back(v);
                        next.push_back(p2);
                    }
                pts = next;
            }
            for (const auto& coords : pts) {
                if (quo.project(coords) != cls) continue;
                RatVec lam = R.coweight_from_lattice(coords);
                for (int w = 0; w < R.weyl_order() && !found; ++w) {
                    if (length(w, lam) == 0) {
                        omega_.push_back(make(w, lam));
                        found = true;
                    }
                }
                if (found) break;
            }
        }
        if (!found) throw std::logic_error("no length-zero representative found");
    }
    // identity first, then deterministic
    std::sort(omega_.begin(), omega_.end(), [&](const AffElt& a, const AffElt& b) { return less(a, b); });
}

int AffineWeyl::omega_index(const AffElt& x) const {
    for (size_t i = 0; i < omega_.size(); ++i)
        if (omega_[i] == x) return static_cast<int>(i);
    return -1;
}

AffineWeyl::ReducedWord AffineWeyl::reduced_word(const AffElt& x) const {
    ReducedWord out;
    AffElt cur = x;
    std::vector<int> rev;
    while (cur.len > 0) {
        int pick = -1;
        for (int i = 0; i < num_simples(); ++i)
            if (has_right_descent(cur, i)) { pick = i; break; }
        if (pick < 0) throw std::logic_error("no descent for positive-length element");
        rev.push_back(pick);
        cur = mul(cur, simple(pick));
    }
    int om = omega_index(cur);
    if (om < 0) throw std::logic_error("length-zero remainder not in Omega table");
    out.omega = om;
    out.word.assign(rev.rbegin(), rev.rend());
    return out;
}

AffElt AffineWeyl::assemble(int omega_idx, const std::vector<int>& word) const {
    AffElt cur = omega_[omega_idx];
    for (int i : word) cur = mul(cur, simple(i));
    return cur;
}

std::vector<std::vector<int>> AffineWeyl::all_reduced_words(const AffElt& x) const {
    std::vector<std::vector<int>> out;
    if (x.len == 0) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i < num_simples(); ++i) {
        if (!has_right_descent(x, i)) continue;
        for (auto w : all_reduced_words(mul(x, simple(i)))) {
            w.push_back(i);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<AffElt> AffineWeyl::bruhat_lower(const AffElt& x) const {
    ReducedWord rw = reduced_word(x);
    std::set<AffElt, AffLess> cur(AffLess{this});
    cur.insert(omega_[rw.omega]);
    for (int i : rw.word) {
        std::set<AffElt, AffLess> next = cur;
        for (const AffElt& y : cur) next.insert(mul(y, simple(i)));
        cur = next;
    }
    return std::vector<AffElt>(cur.begin(), cur.end());
}

bool AffineWeyl::bruhat_leq(const AffElt& y, const AffElt& x) const {
    for (const AffElt& z : bruhat_lower(x))
        if (z == y) return true;
    return false;
}

std::vector<AffElt> AffineWeyl::ball(int max_len) const {
    std::set<AffElt, AffLess> seen(AffLess{this});
    std::deque<AffElt> queue;
    AffElt e = identity();
    seen.insert(e);
    queue.push_back(e);
    while (!queue.empty()) {
        AffElt cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < num_simples(); ++i) {
            AffElt nxt = mul(cur, simple(i));
            if (nxt.len > max_len || nxt.len <= cur.len) continue;
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    std::set<AffElt, AffLess> out(AffLess{this});
    for (int om = 0; om < omega_order(); ++om)
        for (const AffElt& y : seen) out.insert(mul(omega_[om], y));
    return std::vector<AffElt>(out.begin(), out.end());
}

AffineWeyl::Antidominant AffineWeyl::antidominant_data(const RatVec& lam) const {
    const RootSystem& R = *rs_;
    // drive lam to the antidominant chamber by simple reflections
    RatVec cur = lam;
    int w = R.w_identity();  // built so that w(cur) = lam
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < R.rank(); ++i) {
            Rat p = R.pair_root(R.root_index(R.simple_root_wt(i)), cur);
            if (p.sign() > 0) {
                cur = R.w_act_coweight(R.w_simple(i), cur);
                w = R.w_mul(w, R.w_simple(i));
                moved = true;
            }
        }
    }
    // minimize w over the stabilizer of lam^- (a parabolic subgroup)
    std::set<int> stab_gens;
    for (int i = 0; i < R.rank(); ++i)
        if (R.pair_root(R.root_index(R.simple_root_wt(i)), cur).is_zero()) stab_gens.insert(i);
    std::set<int> stab{R.w_identity()};
    std::deque<int> queue{R.w_identity()};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i : stab_gens) {
            int nv = R.w_mul(v, R.w_simple(i));
            if (stab.insert(nv).second) queue.push_back(nv);
        }
    }
    int best = -1;
    for (int v : stab) {
        int cand = R.w_mul(w, v);
        if (best < 0 || R.w_order_rank(cand) < R.w_order_rank(best)) best = cand;
    }
    return {cur, best};
}

bool AffineWeyl::p_allowed_pair(const AffElt& x, int u_rep, const ParabolicData& par) const {
    const RootSystem& R = *rs_;
    int w = x.w;
    for (int p : R.positive_roots()) {
        int ua = R.w_act_root(u_rep, p);
        bool ua_pos = R.roots()[ua].positive;
        int wua = R.w_act_root(w, ua);
        bool wua_pos = R.roots()[wua].positive;
        Rat prq = R.pair_root(ua, x.lam);
        long long pr = prq.num().to_ll();  // integral by lattice assumption
        if (!par.root_in_levi(p)) {
            if (ua_pos == wua_pos) {
                if (pr > 0) return false;
            } else if (!ua_pos && wua_pos) {
                if (pr > 1) return false;
            } else {  // ua > 0, wua < 0
                if (pr > -1) return false;
            }
        } else {
            // alpha in R_P^+; the positive root alpha' in {+-u(alpha)} lies in
            // R^+ cap u(R_P)
            int ap = ua_pos ? ua : R.negate_root(ua);
            bool wap_pos = R.roots()[R.w_act_root(w, ap)].positive;
            long long prp = R.pair_root(ap, x.lam).num().to_ll();
            if (wap_pos) {
                if (prp != 0) return false;
            } else {
                if (prp != -1) return false;
            }
        }
    }
    return true;
}

bool AffineWeyl::p_allowed_coweight(const RatVec& lam, const ParabolicData& par) const {
    const RootSystem& R = *rs_;
    Antidominant ad = antidominant_data(lam);
    for (int p : R.positive_roots()) {
        if (!par.root_in_levi(p)) continue;
        long long pr = R.pair_root(p, ad.lam_minus).num().to_ll();
        bool w_pos = R.roots()[R.w_act_root(ad.w_min, p)].positive;
        if (w_pos) {
            if (pr != 0) return false;
        } else {
            if (pr != -1) return false;
        }
    }
    return true;
}

long long AffineWeyl::degree_defect(const AffElt& x, int u_rep, const ParabolicData& par) const {
    const RootSystem& R = *rs_;
    int wu = R.w_mul(x.w, u_rep);
    int wu_rep = par.rep_of(wu);
    RatVec ui_lam = R.w_act_coweight(R.w_inv(u_rep), x.lam);
    return x.len - par.len_p(u_rep) + par.len_p(wu_rep) + par.pair_two_rho_p(ui_lam);
}

std::string AffineWeyl::to_string(const AffElt& x) const {
    std::string s = "w=" + rs_->w_to_string(x.w) + ";lam=(";
    IntVec coords = rs_->lattice_coords(x.lam);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

AffElt AffineWeyl::parse(const std::string& text) const {
    const RootSystem& R = *rs_;
    auto wpos = text.find("w=");
    auto lpos = text.find("lam=(");
    if (wpos == std::string::npos || lpos == std::string::npos)
        throw std::invalid_argument("affine element: expected w=...;lam=(...)");
    std::string wpart = text.substr(wpos + 2, text.find(';', wpos) - wpos - 2);
    int w = R.w_identity();
    if (wpart != "e" && !wpart.empty()) {
        size_t pos = 0;
        while (pos < wpart.size()) {
            if (wpart[pos] == '.') { ++pos; continue; }
            if (wpart[pos] != 's') throw std::invalid_argument("affine element: bad word");
            size_t end = pos + 1;
            while (end < wpart.size() && isdigit(wpart[end])) ++end;
            int idx = std::stoi(wpart.substr(pos + 1, end - pos - 1));
            if (idx < 1 || idx > R.rank()) throw std::invalid_argument("affine element: bad generator");
            w = R.w_mul(w, R.w_simple(idx - 1));
            pos = end;
        }
    }
    std::string lpart = text.substr(lpos + 5);
    auto close = lpart.find(')');
    if (close == std::string::npos) throw std::invalid_argument("affine element: bad coweight");
    lpart = lpart.substr(0, close);
    IntVec coords;
    size_t pos = 0;
    while (pos <= lpart.size() && !lpart.empty()) {
        auto comma = lpart.find(',', pos);
        std::string tok = lpart.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        coords.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(coords.size()) != R.rank())
        throw std::invalid_argument("affine element: coweight has wrong rank");
    return make(w, R.coweight_from_lattice(coords));
}

bool AffineWeyl::less(const AffElt& a, const AffElt& b) const {
    if (a.len != b.len) return a.len < b.len;
    int ra = rs_->w_order_rank(a.w), rb = rs_->w_order_rank(b.w);
    if (ra != rb) return ra < rb;
    for (size_t i = 0; i < a.lam.size(); ++i) {
        if (a.lam[i] != b.lam[i]) return a.lam[i] < b.lam[i];
    }
    return false;
}

}  // namespace qweyl
