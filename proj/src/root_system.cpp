#include "qweyl/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qweyl {

RootSystem::RootSystem(char letter, int rank, LatticeMode mode)
    : letter_(letter), rank_(rank), mode_(mode) {
    if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of supported range");
    switch (letter) {
        case 'A': break;
        case 'B':
        case 'C':
            if (rank < 2) throw std::invalid_argument("types B/C need rank >= 2");
            break;
        case 'D':
            if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
            break;
        case 'G':
            if (rank != 2) throw std::invalid_argument("type G needs rank 2");
            break;
        case 'F':
            if (rank != 4) throw std::invalid_argument("type F needs rank 4");
            break;
        case 'E':
            throw std::invalid_argument("rank out of supported range");
        default:
            throw std::invalid_argument("unknown Cartan type");
    }
    build_cartan();
    build_roots();
    build_group();
    build_lattice();
}

// cartan_[i][j] = <alpha_j, alpha_i^vee>
void RootSystem::build_cartan() {
    int r = rank_;
    cartan_.assign(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
    auto link = [&](int i, int j, long long aij, long long aji) {
        cartan_[i][j] = aij;
        cartan_[j][i] = aji;
    };
    switch (letter_) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // alpha_r short
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
            link(r - 2, r - 1, -1, -2);
            break;
        case 'C':  // alpha_r long
            for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
            link(r - 2, r - 1, -2, -1);
            break;
        case 'D':
            for (int i = 0; i + 2 < r - 1; ++i) link(i, i + 1, -1, -1);
            link(r - 3, r - 2, -1, -1);
            link(r - 3, r - 1, -1, -1);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
            break;
        case 'F':
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            break;
        default:
            break;
    }
}

void RootSystem::build_roots() {
    int r = rank_;
    RatMat c(r, RatVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c[i][j] = Rat(cartan_[i][j]);
    RatMat cinv = invert(c);

    std::map<std::vector<int>, int> seen;
    std::deque<int> queue;
    auto add_root = [&](const std::vector<int>& wt, const std::vector<int>& cowt) {
        if (seen.count(wt)) return;
        Root root;
        root.wt = wt;
        root.cowt = cowt;
        RatVec wtr(wt.begin(), wt.end());
        RatVec a = mat_vec(cinv, wtr);
        bool pos = true, neg = true;
        Rat h(0);
        for (const auto& x : a) {
            if (x.sign() < 0) pos = false;
            if (x.sign() > 0) neg = false;
            h += x;
        }
        if (!pos && !neg) throw std::logic_error("root neither positive nor negative");
        root.positive = pos;
        if (!h.is_integer()) throw std::logic_error("non-integral root height");
        root.height = static_cast<int>(h.num().to_ll());
        seen[wt] = static_cast<int>(roots_.size());
        roots_.push_back(root);
        queue.push_back(seen[wt]);
    };

    for (int i = 0; i < r; ++i) {
        std::vector<int> wt(r), cowt(r, 0);
        for (int m = 0; m < r; ++m) wt[m] = static_cast<int>(cartan_[m][i]);
        cowt[i] = 1;
        add_root(wt, cowt);
    }
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        for (int j = 0; j < r; ++j) {
            Root cur = roots_[idx];
            // s_j on weight coords: wt -= wt[j] * alpha_j
            std::vector<int> wt = cur.wt;
            int cj = wt[j];
            for (int m = 0; m < r; ++m) wt[m] -= cj * static_cast<int>(cartan_[m][j]);
            // s_j on coroot coords: cowt -= <alpha_j, cowt> e_j
            std::vector<int> cowt = cur.cowt;
            long long p = 0;
            for (int m = 0; m < r; ++m) p += cartan_[m][j] * cur.cowt[m];
            cowt[j] -= static_cast<int>(p);
            add_root(wt, cowt);
        }
    }

    neg_of_.assign(roots_.size(), -1);
    for (size_t i = 0; i < roots_.size(); ++i) {
        std::vector<int> neg = roots_[i].wt;
        for (auto& x : neg) x = -x;
        neg_of_[i] = seen.at(neg);
        if (roots_[i].positive) positive_.push_back(static_cast<int>(i));
    }
    std::sort(positive_.begin(), positive_.end(), [&](int a, int b) {
        if (roots_[a].height != roots_[b].height) return roots_[a].height < roots_[b].height;
        return roots_[a].wt < roots_[b].wt;
    });
    theta_ = positive_.back();

    two_rho_.assign(r, 0);
    for (int p : positive_)
        for (int m = 0; m < r; ++m) two_rho_[m] += roots_[p].wt[m];
}

int RootSystem::root_index(const std::vector<int>& wt) const {
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i].wt == wt) return static_cast<int>(i);
    return -1;
}

RootSystem::Mat RootSystem::mat_mul(const Mat& a, const Mat& b) const {
    int r = rank_;
    Mat m(r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            int aik = a[i * r + k];
            if (!aik) continue;
            for (int j = 0; j < r; ++j) m[i * r + j] += aik * b[k * r + j];
        }
    return m;
}

RootSystem::Mat RootSystem::simple_mat(int i) const {
    int r = rank_;
    Mat m(r * r, 0);
    // s_i(w_j) = w_j - delta_ij alpha_i
    for (int j = 0; j < r; ++j) m[j * r + j] = 1;
    for (int m2 = 0; m2 < r; ++m2) m[m2 * r + i] -= static_cast<int>(cartan_[m2][i]);
    return m;
}

void RootSystem::build_group() {
    int r = rank_;
    Mat id(r * r, 0);
    for (int i = 0; i < r; ++i) id[i * r + i] = 1;
    mats_.push_back(id);
    index_[id] = 0;
    std::vector<Mat> simples;
    simple_idx_.resize(r);
    for (int i = 0; i < r; ++i) simples.push_back(simple_mat(i));

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            Mat m = mat_mul(mats_[cur], simples[i]);
            auto it = index_.find(m);
            if (it == index_.end()) {
                int idx = static_cast<int>(mats_.size());
                index_[m] = idx;
                mats_.push_back(m);
                queue.push_back(idx);
                if (mats_.size() > 4000) throw std::logic_error("Weyl group too large");
            }
        }
    }
    for (int i = 0; i < r; ++i) simple_idx_[i] = index_.at(simples[i]);

    int n = static_cast<int>(mats_.size());
    root_act_.assign(n, std::vector<int>(roots_.size(), -1));
    for (int w = 0; w < n; ++w) {
        for (size_t a = 0; a < roots_.size(); ++a) {
            std::vector<int> img(r, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) img[i] += mats_[w][i * r + j] * roots_[a].wt[j];
            root_act_[w][a] = root_index(img);
        }
    }

    len_.assign(n, 0);
    for (int w = 0; w < n; ++w) {
        int inv = 0;
        for (int p : positive_)
            if (!roots_[root_act_[w][p]].positive) ++inv;
        len_[w] = inv;
    }

    inv_.assign(n, -1);
    for (int w = 0; w < n; ++w) {
        RatMat m(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m[i][j] = Rat(mats_[w][i * r + j]);
        RatMat mi = invert(m);
        Mat im(r * r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) im[i * r + j] = static_cast<int>(mi[i][j].num().to_ll());
        inv_[w] = index_.at(im);
    }

    word_.assign(n, {});
    for (int w = 0; w < n; ++w) {
        std::vector<int> rev;
        int cur = w;
        while (len_[cur] > 0) {
            int pick = -1;
            for (int i = 0; i < r; ++i) {
                int img = root_act_[cur][root_index(simple_root_wt(i))];
                if (!roots_[img].positive) { pick = i; break; }
            }
            if (pick < 0) throw std::logic_error("no descent for nontrivial element");
            rev.push_back(pick);
            cur = index_.at(mat_mul(mats_[cur], simple_mat(pick)));
        }
        std::reverse(rev.begin(), rev.end());
        word_[w] = rev;
        if (len_[w] == num_positive()) w0_ = w;
    }

    refl_.assign(roots_.size(), -1);
    for (size_t a = 0; a < roots_.size(); ++a) {
        // s_alpha(w_j) = w_j - <w_j, alpha^vee> alpha
        Mat m(r * r, 0);
        for (int j = 0; j < r; ++j) {
            for (int i2 = 0; i2 < r; ++i2)
                m[i2 * r + j] = (i2 == j ? 1 : 0) - roots_[a].cowt[j] * roots_[a].wt[i2];
        }
        refl_[a] = index_.at(m);
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (len_[a] != len_[b]) return len_[a] < len_[b];
        return word_[a] < word_[b];
    });
    order_rank_.assign(n, 0);
    for (int i = 0; i < n; ++i) order_rank_[order[i]] = i;
}

void RootSystem::build_lattice() {
    int r = rank_;
    if (mode_ == LatticeMode::Coroot) {
        lat_basis_.assign(r, RatVec(r, Rat(0)));
        for (int i = 0; i < r; ++i) lat_basis_[i][i] = Rat(1);
        lat_basis_inv_ = lat_basis_;
        return;
    }
    // fundamental coweights: columns of (C^T)^{-1}
    RatMat ct(r, RatVec(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ct[i][j] = Rat(cartan_[j][i]);
    lat_basis_ = invert(ct);
    lat_basis_inv_ = ct;
}

Rat RootSystem::pair(const std::vector<Rat>& wt, const RatVec& cowt) {
    Rat s(0);
    for (size_t i = 0; i < wt.size(); ++i) s += wt[i] * cowt[i];
    return s;
}

Rat RootSystem::pair_root(int root_idx, const RatVec& cowt) const {
    Rat s(0);
    for (int i = 0; i < rank_; ++i) s += Rat(roots_[root_idx].wt[i]) * cowt[i];
    return s;
}

RatVec RootSystem::simple_coroot(int i) const {
    RatVec v(rank_, Rat(0));
    v[i] = Rat(1);
    return v;
}

std::vector<int> RootSystem::simple_root_wt(int i) const {
    std::vector<int> wt(rank_);
    for (int m = 0; m < rank_; ++m) wt[m] = static_cast<int>(cartan_[m][i]);
    return wt;
}

bool RootSystem::in_lattice(const RatVec& cowt) const {
    RatVec coords = mat_vec(lat_basis_inv_, cowt);
    for (const auto& c : coords)
        if (!c.is_integer()) return false;
    return true;
}

IntVec RootSystem::lattice_coords(const RatVec& cowt) const {
    RatVec coords = mat_vec(lat_basis_inv_, cowt);
    IntVec out;
    for (const auto& c : coords) {
        if (!c.is_integer()) throw std::invalid_argument("coweight not in the configured lattice");
        out.push_back(c.num().to_ll());
    }
    return out;
}

RatVec RootSystem::coweight_from_lattice(const IntVec& coords) const {
    RatVec v(rank_, Rat(0));
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) v[i] += lat_basis_[i][j] * Rat(coords[j]);
    return v;
}

int RootSystem::w_mul(int a, int b) const { return index_.at(mat_mul(mats_[a], mats_[b])); }

std::vector<Rat> RootSystem::w_act_weight(int w, const std::vector<Rat>& wt) const {
    int r = rank_;
    std::vector<Rat> out(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (mats_[w][i * r + j]) out[i] += Rat(mats_[w][i * r + j]) * wt[j];
    return out;
}

RatVec RootSystem::w_act_coweight(int w, const RatVec& cowt) const {
    // contragredient action: matrix of w^{-1} transposed
    int r = rank_;
    const Mat& m = mats_[inv_[w]];
    RatVec out(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (m[j * r + i]) out[i] += Rat(m[j * r + i]) * cowt[j];
    return out;
}

bool RootSystem::bruhat_leq(int u, int v) const {
    if (len_[u] > len_[v]) return false;
    int cu = u, cv = v;
    while (len_[cv] > 0) {
        if (cu == w_identity()) return true;
        int s = w_simple(word_[cv][0]);
        int su = w_mul(s, cu);
        if (len_[su] < len_[cu]) cu = su;
        cv = w_mul(s, cv);
    }
    return cu == w_identity();
}

std::string RootSystem::w_to_string(int a) const {
    if (len_[a] == 0) return "e";
    std::string s;
    for (size_t i = 0; i < word_[a].size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(word_[a][i] + 1);
    }
    return s;
}

ParabolicData::ParabolicData(std::shared_ptr<const RootSystem> rs, const std::set<int>& subset)
    : rs_(std::move(rs)), subset_(subset) {
    const RootSystem& R = *rs_;
    for (int i : subset_)
        if (i < 0 || i >= R.rank()) throw std::invalid_argument("parabolic index out of range");

    // Levi roots: alpha-support contained in the subset
    RatMat c(R.rank(), RatVec(R.rank()));
    for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j) c[i][j] = Rat(R.cartan(i, j));
    RatMat cinv = invert(c);
    in_levi_.assign(R.roots().size(), false);
    for (size_t a = 0; a < R.roots().size(); ++a) {
        RatVec wt(R.roots()[a].wt.begin(), R.roots()[a].wt.end());
        RatVec coords = mat_vec(cinv, wt);
        bool ok = true;
        for (int i = 0; i < R.rank(); ++i)
            if (!coords[i].is_zero() && !subset_.count(i)) ok = false;
        in_levi_[a] = ok;
    }
    for (int p : R.positive_roots())
        if (!in_levi_[p]) ++dim_;

    // W_P closure
    std::set<int> wp{R.w_identity()};
    std::deque<int> queue{R.w_identity()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int i : subset_) {
            int nxt = R.w_mul(cur, R.w_simple(i));
            if (wp.insert(nxt).second) queue.push_back(nxt);
        }
    }
    wp_.assign(wp.begin(), wp.end());

    // minimal coset representatives
    for (int w = 0; w < R.weyl_order(); ++w) {
        int best = -1;
        for (int v : wp_) {
            int cand = R.w_mul(w, v);
            if (best < 0 || R.w_order_rank(cand) < R.w_order_rank(best)) best = cand;
        }
        rep_of_[w] = best;
    }
    std::set<int> repset;
    for (auto& [w, rep] : rep_of_) repset.insert(rep);
    reps_.assign(repset.begin(), repset.end());
    std::sort(reps_.begin(), reps_.end(),
              [&](int a, int b) { return R.w_order_rank(a) < R.w_order_rank(b); });
    for (size_t i = 0; i < reps_.size(); ++i) rep_pos_[reps_[i]] = static_cast<int>(i);

    two_rho_p_.assign(R.rank(), 0);
    for (int p : R.positive_roots())
        if (!in_levi_[p])
            for (int m = 0; m < R.rank(); ++m) two_rho_p_[m] += R.roots()[p].wt[m];

    // normalizer of W_P, as minimal coset representatives
    std::set<int> wpset(wp_.begin(), wp_.end());
    std::set<int> nreps;
    for (int w = 0; w < R.weyl_order(); ++w) {
        bool normalizes = true;
        for (int i : subset_) {
            int conj = R.w_mul(R.w_mul(w, R.w_simple(i)), R.w_inv(w));
            if (!wpset.count(conj)) { normalizes = false; break; }
        }
        if (normalizes) nreps.insert(rep_of_.at(w));
    }
    wwp_.assign(nreps.begin(), nreps.end());
    std::sort(wwp_.begin(), wwp_.end(),
              [&](int a, int b) { return R.w_order_rank(a) < R.w_order_rank(b); });
}

int ParabolicData::rep_of(int w) const { return rep_of_.at(w); }

int ParabolicData::rep_pos(int rep) const { return rep_pos_.at(rep); }

long long ParabolicData::pair_two_rho_p(const RatVec& cowt) const {
    Rat s(0);
    for (int i = 0; i < rs_->rank(); ++i) s += Rat(two_rho_p_[i]) * cowt[i];
    if (!s.is_integer()) throw std::logic_error("2rho_P pairing not integral");
    return s.num().to_ll();
}

}  // namespace qweyl
