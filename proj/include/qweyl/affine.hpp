// The extended affine Weyl group W x Lambda: multiplication, the closed
// length formula, reduced words in the affine simple reflections s_0..s_r
// together with the length-zero subgroup Omega, antidominant data, and the
// P-allowed predicates.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qweyl/novikov.hpp"
#include "qweyl/root_system.hpp"

namespace qweyl {

struct AffElt {
    int w = 0;        // Weyl table index
    RatVec lam;       // coweight, coroot coordinates; element is w * t_lam
    int len = 0;      // cached length

    bool operator==(const AffElt& o) const { return w == o.w && lam == o.lam; }
    bool operator!=(const AffElt& o) const { return !(*this == o); }
};

class AffineWeyl {
public:
    explicit AffineWeyl(std::shared_ptr<const RootSystem> rs);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

    AffElt make(int w, const RatVec& lam) const;
    AffElt identity() const;
    AffElt translation(const RatVec& lam) const { return make(rs_->w_identity(), lam); }
    AffElt from_weyl(int w) const { return make(w, RatVec(rs_->rank(), Rat(0))); }

    AffElt mul(const AffElt& a, const AffElt& b) const;
    AffElt inv(const AffElt& a) const;

    // closed length formula: sum |<alpha,lam>| over alpha > 0, corrected on
    // the inversion set of w by the sign of <alpha,lam>
    int length(int w, const RatVec& lam) const;
    int length(const AffElt& x) const { return x.len; }

    // affine simple reflections; index 0 is s_theta t_{-theta^vee}
    AffElt simple(int i) const;
    int num_simples() const { return rs_->rank() + 1; }

    bool has_right_descent(const AffElt& x, int i) const;

    // length-zero subgroup
    int omega_order() const { return static_cast<int>(omega_.size()); }
    const AffElt& omega_element(int idx) const { return omega_[idx]; }
    int omega_index(const AffElt& x) const;  // -1 if not length 0 / not found

    struct ReducedWord {
        int omega = 0;            // index into the Omega table
        std::vector<int> word;    // indices in 0..r
    };
    ReducedWord reduced_word(const AffElt& x) const;
    AffElt assemble(int omega_idx, const std::vector<int>& word) const;

    // all reduced words of x (breadth-first over descents)
    std::vector<std::vector<int>> all_reduced_words(const AffElt& x) const;

    // Bruhat lower cone {y <= x} via subword products of one reduced word
    std::vector<AffElt> bruhat_lower(const AffElt& x) const;
    bool bruhat_leq(const AffElt& y, const AffElt& x) const;

    // all elements of length <= bound (Coxeter ball twisted by Omega)
    std::vector<AffElt> ball(int max_len) const;

    // antidominant representative and minimal w with w(lam^-) = lam
    struct Antidominant {
        RatVec lam_minus;
        int w_min;
    };
    Antidominant antidominant_data(const RatVec& lam) const;

    bool p_allowed_pair(const AffElt& x, int u_rep, const ParabolicData& par) const;
    bool p_allowed_coweight(const RatVec& lam, const ParabolicData& par) const;
    long long degree_defect(const AffElt& x, int u_rep, const ParabolicData& par) const;

    std::string to_string(const AffElt& x) const;      // "w=s1.s2;lam=(1,0)"
    AffElt parse(const std::string& text) const;

    // deterministic total order: (length, Weyl order, lattice coords lex)
    bool less(const AffElt& a, const AffElt& b) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<AffElt> omega_;
    std::vector<AffElt> simples_;

    void build_simples();
    void build_omega();
};

struct AffLess {
    const AffineWeyl* ctx;
    bool operator()(const AffElt& a, const AffElt& b) const { return ctx->less(a, b); }
};

}  // namespace qweyl
