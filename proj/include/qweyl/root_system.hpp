// Finite irreducible root systems of types A-G at small rank, their Weyl
// groups, and parabolic coset data.
//
// Coordinates: weights live in the fundamental-weight basis w1..wr, so every
// root is an integer vector; coweights live in the simple-coroot basis, so
// the weight/coweight pairing is the dot product.  Weyl elements are stored
// as exact integer matrices acting on the weight basis, deduplicated in a
// group table; the public handle is an index into that table.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qweyl/linalg.hpp"

namespace qweyl {

enum class LatticeMode { Coroot, Coweight };

struct Root {
    std::vector<int> wt;      // fundamental-weight coordinates
    std::vector<int> cowt;    // coroot coordinates of the associated coroot
    bool positive = false;
    int height = 0;           // sum of simple-root coefficients
};

class RootSystem {
public:
    static constexpr int kMaxRank = 4;

    RootSystem(char letter, int rank, LatticeMode mode);

    char letter() const { return letter_; }
    int rank() const { return rank_; }
    LatticeMode lattice_mode() const { return mode_; }
    int nvars() const { return rank_ + 2; }  // w1..wr, h, kk
    int var_h() const { return rank_; }
    int var_k() const { return rank_ + 1; }

    long long cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_j, alpha_i^vee>

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<int>& positive_roots() const { return positive_; }  // indices
    int num_positive() const { return static_cast<int>(positive_.size()); }
    int theta_index() const { return theta_; }  // highest root

    int root_index(const std::vector<int>& wt) const;   // -1 if absent
    int negate_root(int idx) const { return neg_of_[idx]; }

    // pairing <mu, lambda> of a weight (w-basis) with a coweight (coroot basis)
    static Rat pair(const std::vector<Rat>& wt, const RatVec& cowt);
    Rat pair_root(int root_idx, const RatVec& cowt) const;

    RatVec simple_coroot(int i) const;
    std::vector<int> simple_root_wt(int i) const;

    const std::vector<int>& two_rho_wt() const { return two_rho_; }  // sum of positive roots

    // cocharacter lattice in coroot coordinates; columns of basis() generate
    const RatMat& lattice_basis() const { return lat_basis_; }
    const RatMat& lattice_basis_inv() const { return lat_basis_inv_; }
    bool in_lattice(const RatVec& cowt) const;
    IntVec lattice_coords(const RatVec& cowt) const;          // throws if not in lattice
    RatVec coweight_from_lattice(const IntVec& coords) const;

    // ---- Weyl group table ----
    int weyl_order() const { return static_cast<int>(mats_.size()); }
    int w_identity() const { return 0; }
    int w_simple(int i) const { return simple_idx_[i]; }
    int w_longest() const { return w0_; }
    int w_mul(int a, int b) const;           // composition: (ab)(v) = a(b(v))
    int w_inv(int a) const { return inv_[a]; }
    int w_len(int a) const { return len_[a]; }
    const std::vector<int>& w_word(int a) const { return word_[a]; }  // a = s_{i1}...s_{il}
    // action on a root index: returns root index of w(alpha)
    int w_act_root(int w, int root_idx) const { return root_act_[w][root_idx]; }
    // the reflection in a root, as a group element
    int reflection(int root_idx) const { return refl_[root_idx]; }
    std::vector<Rat> w_act_weight(int w, const std::vector<Rat>& wt) const;
    RatVec w_act_coweight(int w, const RatVec& cowt) const;
    // deterministic total order key: (length, lex word)
    int w_order_rank(int a) const { return order_rank_[a]; }

    bool bruhat_leq(int u, int v) const;  // subword property

    std::string w_to_string(int a) const;  // "s1.s2" or "e"

private:
    char letter_;
    int rank_;
    LatticeMode mode_;
    IntMat cartan_;
    std::vector<Root> roots_;
    std::vector<int> positive_;
    std::vector<int> neg_of_;
    int theta_ = -1;
    std::vector<int> two_rho_;
    RatMat lat_basis_, lat_basis_inv_;

    using Mat = std::vector<int>;  // rank x rank row-major, action on weight basis
    std::vector<Mat> mats_;
    std::map<Mat, int> index_;
    std::vector<int> simple_idx_;
    std::vector<int> inv_;
    std::vector<int> len_;
    std::vector<std::vector<int>> word_;
    std::vector<std::vector<int>> root_act_;  // [w][root] -> root
    std::vector<int> refl_;
    std::vector<int> order_rank_;
    int w0_ = 0;

    void build_cartan();
    void build_roots();
    void build_group();
    void build_lattice();
    Mat mat_mul(const Mat& a, const Mat& b) const;
    Mat simple_mat(int i) const;
};

// Parabolic subgroup data for a subset of simple indices.
class ParabolicData {
public:
    ParabolicData(std::shared_ptr<const RootSystem> rs, const std::set<int>& subset);

    const RootSystem& rs() const { return *rs_; }
    const std::set<int>& subset() const { return subset_; }

    bool root_in_levi(int root_idx) const { return in_levi_[root_idx]; }
    int dim_p() const { return dim_; }  // #(R^+ \ R_P^+)

    const std::vector<int>& wp_elements() const { return wp_; }
    int wp_order() const { return static_cast<int>(wp_.size()); }

    const std::vector<int>& min_reps() const { return reps_; }  // sorted by (len, word)
    int num_reps() const { return static_cast<int>(reps_.size()); }
    int rep_of(int w) const;          // minimal representative of w W_P
    int rep_pos(int rep) const;       // position of a minimal rep in min_reps()
    int len_p(int rep) const { return rs_->w_len(rep); }

    const std::vector<int>& two_rho_p_wt() const { return two_rho_p_; }
    // <2 rho_P, -> as an integer functional on coroot coordinates
    long long pair_two_rho_p(const RatVec& cowt) const;

    // minimal-length representatives of N_W(W_P)/W_P
    const std::vector<int>& normalizer_reps() const { return wwp_; }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::set<int> subset_;
    std::vector<bool> in_levi_;
    int dim_ = 0;
    std::vector<int> wp_;
    std::vector<int> reps_;
    std::map<int, int> rep_of_;
    std::map<int, int> rep_pos_;
    std::vector<int> two_rho_p_;
    std::vector<int> wwp_;
};

}  // namespace qweyl
