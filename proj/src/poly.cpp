#include "qweyl/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qweyl {

bool mono_less(const Mono& a, const Mono& b) {
    int da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    // lex with earlier variables more significant
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly::Poly(int nv, const Rat& c) : nv_(nv) {
    if (!c.is_zero()) terms_.push_back({Mono(nv, 0), c});
}

Poly Poly::var(int nv, int idx, int exp) {
    Poly p(nv);
    Mono m(nv, 0);
    m[idx] = exp;
    p.terms_.push_back({m, Rat(1)});
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_[0].first)
        if (e) return false;
    return true;
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].second.is_one(); }

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_[0].second;
}

void Poly::normalize_from_map(std::map<Mono, Rat>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms_.push_back({m, c});
    // map is ascending lex-by-vector; resort into descending graded lex
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return mono_less(b.first, a.first); });
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(nv_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && mono_less(o.terms_[j].first, terms_[i].first))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || mono_less(terms_[i].first, o.terms_[j].first)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r(nv_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::map<Mono, Rat> acc;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(nv_);
            for (int v = 0; v < nv_; ++v) m[v] = ma[v] + mb[v];
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), ca * cb);
            else it->second += ca * cb;
        }
    }
    r.normalize_from_map(acc);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(nv_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(nv_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nv_ != o.nv_) return nv_ < o.nv_;
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first)
            return mono_less(terms_[i].first, o.terms_[i].first);
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return false;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto e : terms_[0].first) d += e;
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d0 = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m) d += e;
        if (d0 < 0) d0 = d;
        else if (d != d0) return false;
    }
    return true;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

Poly Poly::coeff_of(int var, int d) const {
    Poly r(nv_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == d) {
            Mono m2 = m;
            m2[var] = 0;
            r.terms_.push_back({m2, c});
        }
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const auto& a, const auto& b) { return mono_less(b.first, a.first); });
    return r;
}

Poly Poly::subst(const std::vector<Poly>& images) const {
    Poly r(nv_);
    // cache powers of each image
    std::vector<std::vector<Poly>> pows(nv_);
    for (const auto& [m, c] : terms_) {
        Poly t(nv_, c);
        for (int v = 0; v < nv_; ++v) {
            int e = m[v];
            if (e == 0) continue;
            auto& pv = pows[v];
            if (pv.empty()) pv.push_back(Poly(nv_, Rat(1)));
            while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * images[v]);
            t *= pv[e];
        }
        r += t;
    }
    return r;
}

Poly Poly::eval_var(int var, const Rat& c) const {
    std::map<Mono, Rat> acc;
    for (const auto& [m, coeff] : terms_) {
        Rat scale = coeff;
        if (m[var] != 0) {
            Rat p(1);
            for (int i = 0; i < m[var]; ++i) p *= c;
            scale *= p;
        }
        if (scale.is_zero()) continue;
        Mono m2 = m;
        m2[var] = 0;
        auto it = acc.find(m2);
        if (it == acc.end()) acc.emplace(std::move(m2), scale);
        else it->second += scale;
    }
    Poly r(nv_);
    r.normalize_from_map(acc);
    return r;
}

const Mono& Poly::lead_mono() const {
    if (terms_.empty()) throw std::logic_error("Poly: lead of zero");
    return terms_[0].first;
}

const Rat& Poly::lead_coeff() const {
    if (terms_.empty()) throw std::logic_error("Poly: lead of zero");
    return terms_[0].second;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly q(nv_);
    Poly rem = *this;
    const Mono& dm = d.lead_mono();
    while (!rem.is_zero()) {
        const Mono& rm = rem.lead_mono();
        Mono t(nv_);
        for (int v = 0; v < nv_; ++v) {
            t[v] = rm[v] - dm[v];
            if (t[v] < 0) return std::nullopt;
        }
        Rat c = rem.lead_coeff() / d.lead_coeff();
        Poly term(nv_);
        term.terms_.push_back({t, c});
        q += term;
        rem -= term * d;
    }
    return q;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(lead_coeff().inv());
}

Poly Poly::primitive_rat() const {
    if (terms_.empty()) return *this;
    // common denominator, then integer content
    BigInt den(1);
    for (const auto& [m, c] : terms_) den = den / BigInt::gcd(den, c.den()) * c.den();
    BigInt cont(0);
    for (const auto& [m, c] : terms_) cont = BigInt::gcd(cont, (c.num() * (den / c.den())).abs());
    Rat scale(den, cont);
    if (lead_coeff().sign() < 0) scale = -scale;
    return scaled(scale);
}

namespace {

std::map<int, std::vector<Poly>>& linear_candidates() {
    static thread_local std::map<int, std::vector<Poly>> reg;
    return reg;
}

// peel registered linear factors off p; returns the multiset of monic
// factors if p splits completely into candidates (up to a scalar).
// Successful factorizations are memoized: denominators recur heavily.
std::optional<std::map<Poly, int>> factor_structured(const Poly& p) {
    static thread_local std::map<Poly, std::map<Poly, int>> memo;
    auto hit = memo.find(p);
    if (hit != memo.end()) return hit->second;

    std::map<Poly, int> out;
    Poly cur = p;
    // variables themselves first (monomial content)
    for (int v = 0; v < p.nvars(); ++v) {
        Poly xv = Poly::var(p.nvars(), v);
        while (!cur.is_constant()) {
            auto q = cur.divide_exact(xv);
            if (!q) break;
            cur = *q;
            ++out[xv];
        }
    }
    auto it = linear_candidates().find(p.nvars());
    int budget = 400;  // failed-attempt cap keeps dense inputs cheap
    if (it != linear_candidates().end()) {
        for (const Poly& cand : it->second) {
            if (cur.is_constant() || budget <= 0) break;
            // the candidate's leading and trailing monomials must divide
            // those of the current polynomial
            const Mono& lm = cur.lead_mono();
            const Mono& tm = cur.terms().back().first;
            const Mono& clm = cand.lead_mono();
            const Mono& ctm = cand.terms().back().first;
            bool possible = true;
            for (size_t v = 0; v < clm.size(); ++v) {
                if (clm[v] && lm[v] == 0) possible = false;
                if (ctm[v] && tm[v] == 0) possible = false;
            }
            if (!possible) continue;
            bool divided = true;
            while (divided && !cur.is_constant()) {
                auto q = cur.divide_exact(cand);
                if (!q) {
                    divided = false;
                    --budget;
                } else {
                    cur = *q;
                    ++out[cand];
                }
            }
        }
    }
    if (!cur.is_constant()) return std::nullopt;
    if (memo.size() > 20000) memo.clear();
    memo.emplace(p, out);
    return out;
}

int multiplicity_of(const Poly& p, const Poly& factor) {
    int m = 0;
    Poly cur = p;
    while (!cur.is_constant()) {
        auto q = cur.divide_exact(factor);
        if (!q) break;
        cur = *q;
        ++m;
    }
    return m;
}

// evaluate an integer-coefficient polynomial at an integer point
BigInt eval_int(const Poly& p, const std::vector<long long>& pt) {
    BigInt total(0);
    for (const auto& [m, c] : p.terms()) {
        BigInt t = c.num();
        for (size_t v = 0; v < m.size(); ++v)
            for (int e = 0; e < m[v]; ++e) t = t * BigInt(pt[v]);
        total = total + t;
    }
    return total;
}

// certificate that gcd(a, b) is constant, for homogeneous a, b with integer
// coefficients: if the evaluations at a point and at its double are both
// coprime, any common factor g (homogeneous of degree d) would satisfy
// g(pt) | 1 and 2^d g(pt) | 1, forcing d = 0.
bool coprime_certificate(const Poly& a, const Poly& b) {
    if (!a.is_homogeneous() || !b.is_homogeneous()) return false;
    int nv = a.nvars();
    static const long long seeds[4][2] = {{3, 0}, {5, 1}, {7, 2}, {11, 3}};
    for (const auto& s : seeds) {
        std::vector<long long> pt(nv);
        long long cur = s[0];
        for (int v = 0; v < nv; ++v) {
            pt[v] = cur + s[1];
            cur = cur * 3 + 2;
            if (cur > 1000) cur %= 97;
            if (cur == 0) cur = 5;
        }
        BigInt av = eval_int(a, pt), bv = eval_int(b, pt);
        if (av.is_zero() || bv.is_zero()) continue;
        if (!BigInt::gcd(av, bv).is_one()) continue;
        for (auto& x : pt) x *= 2;
        BigInt av2 = eval_int(a, pt), bv2 = eval_int(b, pt);
        if (BigInt::gcd(av2, bv2).is_one()) return true;
    }
    return false;
}

int top_var(const Poly& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) best = std::max(best, static_cast<int>(v));
    return best;
}

// classical pseudo-remainder: lc(b)^(da-db+1) * a mod b in variable var
Poly prem(const Poly& a, const Poly& b, int var, int nv) {
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da < db) return a;
    Poly lb = b.coeff_of(var, db);
    Poly r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Poly lr = r.coeff_of(var, dr);
        r = r * lb - lr * b * Poly::var(nv, var, dr - db);
        --e;
    }
    if (e > 0 && !r.is_zero()) r = r * lb.pow(e);
    return r;
}

Poly content_in(const Poly& p, int var) {
    Poly c(p.nvars());
    for (int i = 0; i <= p.degree_in(var); ++i) {
        Poly ci = p.coeff_of(var, i);
        if (ci.is_zero()) continue;
        c = c.is_zero() ? ci : Poly::gcd(c, ci);
        if (c.is_constant()) break;
    }
    return c;
}

}  // namespace

namespace {

// strip the largest common monomial factor
Mono monomial_content(const Poly& p) {
    Mono m = p.terms()[0].first;
    for (const auto& [mono, c] : p.terms())
        for (size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], mono[v]);
    return m;
}

Poly strip_monomial(const Poly& p, const Mono& m) {
    bool trivial = true;
    for (auto e : m)
        if (e) trivial = false;
    if (trivial) return p;
    Poly mono(p.nvars(), Rat(1));
    for (size_t v = 0; v < m.size(); ++v)
        if (m[v]) mono *= Poly::var(p.nvars(), static_cast<int>(v), m[v]);
    return *p.divide_exact(mono);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(a.nvars(), Rat(1));
    if (a == b) return a.monic();

    int nv = a.nvars();

    // common monomial factor
    Mono ma = monomial_content(a), mb = monomial_content(b);
    Mono mg(nv, 0);
    bool has_mono = false;
    for (int v = 0; v < nv; ++v) {
        mg[v] = std::min(ma[v], mb[v]);
        if (mg[v]) has_mono = true;
    }
    if (has_mono) {
        Poly mono(nv, Rat(1));
        for (int v = 0; v < nv; ++v)
            if (mg[v]) mono *= Poly::var(nv, v, mg[v]);
        return (mono * gcd(strip_monomial(a, mg), strip_monomial(b, mg))).monic();
    }

    // quick divisibility wins
    if (a.total_degree() <= b.total_degree() && b.divisible_by(a)) return a.monic();
    if (b.total_degree() < a.total_degree() && a.divisible_by(b)) return b.monic();

    // factor peeling against the registered linear atoms; denominators are
    // the usual structured side, so try the second argument first
    {
        const Poly* other = &a;
        auto fac = factor_structured(b);
        if (!fac) {
            fac = factor_structured(a);
            other = &b;
        }
        if (fac) {
            Poly g(a.nvars(), Rat(1));
            for (const auto& [f, m] : *fac) {
                int mo = multiplicity_of(*other, f);
                for (int i = 0; i < std::min(m, mo); ++i) g *= f;
            }
            return g.monic();
        }
    }

    // evaluation certificate for coprime homogeneous inputs
    if (coprime_certificate(a.primitive_rat(), b.primitive_rat())) return Poly(a.nvars(), Rat(1));

    int var = std::max(top_var(a), top_var(b));
    if (var < 0) return Poly(nv, Rat(1));

    Poly ca = content_in(a, var);
    Poly cb = content_in(b, var);
    Poly cg = gcd(ca, cb);
    Poly pa = (*a.divide_exact(ca)).primitive_rat();
    Poly pb = (*b.divide_exact(cb)).primitive_rat();

    // subresultant PRS (Brown-Traub)
    Poly u = pa, v = pb;
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    Poly g(nv, Rat(1)), h(nv, Rat(1));
    while (true) {
        int delta = u.degree_in(var) - v.degree_in(var);
        Poly r = prem(u, v, var, nv);
        if (r.is_zero()) break;
        u = v;
        Poly divisor = g * h.pow(delta);
        v = *r.divide_exact(divisor);
        g = u.coeff_of(var, u.degree_in(var));
        if (delta > 0) h = *g.pow(delta).divide_exact(h.pow(delta - 1));
    }
    if (v.degree_in(var) == 0) return cg.monic();
    Poly cv = content_in(v, var);
    return (cg * *v.divide_exact(cv)).monic();
}

void Poly::register_linear_candidates(int nvars, const std::vector<Poly>& atoms) {
    auto& reg = linear_candidates()[nvars];
    for (const Poly& a : atoms) {
        if (a.is_zero() || a.total_degree() != 1) continue;
        Poly m = a.monic();
        bool present = false;
        for (const Poly& e : reg)
            if (e == m) { present = true; break; }
        if (!present) reg.push_back(m);
    }
}

std::vector<std::string> default_names(int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("w" + std::to_string(i));
    names.push_back("h");
    names.push_back("kk");
    return names;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat ac = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        std::string vars;
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) out += ac.to_string();
        else if (ac.is_one()) out += vars;
        else out += ac.to_string() + "*" + vars;
    }
    return out;
}

std::string Poly::to_string_default(int rank) const { return to_string(default_names(rank)); }

size_t Poly::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& [m, c] : terms_) {
        for (auto e : m) h = h * 1099511628211ull ^ static_cast<size_t>(e + 7);
        h = h * 1099511628211ull ^ c.hash();
    }
    return h;
}

RatFn::RatFn(const Poly& num) : num_(num) {}

RatFn RatFn::make(Poly num, DenFactors den, bool cancel) {
    RatFn r;
    r.num_ = std::move(num);
    if (r.num_.is_zero()) return r;
    r.den_ = std::move(den);
    if (cancel) r.cancel_factors();
    return r;
}

namespace {

// split a denominator into monic factors times a scalar; opaque remainder
// factors are reduced against the numerator by a full gcd first
RatFn::DenFactors split_den(const Poly& den, Rat& scalar_out, Poly* num_reduce) {
    RatFn::DenFactors out;
    scalar_out = den.lead_coeff();
    auto fac = factor_structured(den);
    if (fac) {
        for (const auto& [f, m] : *fac) out[f] = m;
        return out;
    }
    Poly rest = den.monic();
    // monomial content always splits off
    for (int v = 0; v < den.nvars(); ++v) {
        Poly xv = Poly::var(den.nvars(), v);
        while (!rest.is_constant()) {
            auto q = rest.divide_exact(xv);
            if (!q) break;
            rest = *q;
            ++out[xv];
        }
    }
    scalar_out *= rest.lead_coeff();
    rest = rest.monic();
    if (num_reduce && !num_reduce->is_zero() && !rest.is_constant()) {
        Poly g = Poly::gcd(*num_reduce, rest);
        if (!g.is_constant()) {
            *num_reduce = *num_reduce->divide_exact(g);
            rest = *rest.divide_exact(g);
            // the cofactor may itself now split
            Rat s2(1);
            auto sub = split_den(rest, s2, nullptr);
            scalar_out *= s2;
            for (const auto& [f, m] : sub) out[f] += m;
            return out;
        }
    }
    if (!rest.is_constant()) out[rest] = 1;
    return out;
}

}  // namespace

void RatFn::cancel_factors() {
    // linear factors are irreducible: trial division is complete
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_exact(it->first);
            if (!q) break;
            num_ = *q;
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    // opaque higher-degree factors may share a proper divisor with the
    // numerator; resolve those with a full gcd and re-split the cofactor
    DenFactors extra;
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first.total_degree() <= 1 || Poly::gcd(num_, it->first).is_constant()) {
            ++it;
            continue;
        }
        Poly d(num_.nvars(), Rat(1));
        for (int i = 0; i < it->second; ++i) d *= it->first;
        Poly g = Poly::gcd(num_, d);
        num_ = *num_.divide_exact(g);
        d = *d.divide_exact(g);
        if (!d.is_constant()) {
            Rat s(1);
            auto sub = split_den(d, s, nullptr);
            num_ = num_.scaled(s.inv());
            for (const auto& [f2, m2] : sub) extra[f2] += m2;
        }
        it = den_.erase(it);
    }
    for (const auto& [f, m] : extra) den_[f] += m;
}

RatFn::RatFn(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
    num_ = num;
    if (num_.is_zero()) return;
    Rat scalar(1);
    DenFactors fs = split_den(den, scalar, &num_);
    num_ = num_.scaled(scalar.inv());
    den_ = std::move(fs);
    cancel_factors();
}

RatFn RatFn::from_coprime(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num.is_zero()) return RatFn(Poly(num.nvars()));
    Rat scalar(1);
    Poly n = num;
    DenFactors fs = split_den(den, scalar, nullptr);
    n = n.scaled(scalar.inv());
    return make(std::move(n), std::move(fs), false);
}

Poly RatFn::den() const {
    Poly d(num_.nvars(), Rat(1));
    for (const auto& [f, m] : den_)
        for (int i = 0; i < m; ++i) d *= f;
    return d;
}

int RatFn::den_degree() const {
    int deg = 0;
    for (const auto& [f, m] : den_) deg += m * f.total_degree();
    return deg;
}

bool RatFn::is_homogeneous() const {
    if (!num_.is_homogeneous()) return false;
    for (const auto& [f, m] : den_)
        if (!f.is_homogeneous()) return false;
    return true;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return make(num_ + o.num_, den_, true);
    // lcm of the factored denominators
    DenFactors lcm = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = lcm.find(f);
        if (it == lcm.end()) lcm[f] = m;
        else it->second = std::max(it->second, m);
    }
    Poly n1 = num_, n2 = o.num_;
    for (const auto& [f, m] : lcm) {
        auto it1 = den_.find(f);
        auto it2 = o.den_.find(f);
        int m1 = it1 == den_.end() ? 0 : it1->second;
        int m2 = it2 == o.den_.end() ? 0 : it2->second;
        for (int i = 0; i < m - m1; ++i) n1 *= f;
        for (int i = 0; i < m - m2; ++i) n2 *= f;
    }
    return make(n1 + n2, std::move(lcm), true);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn(Poly(num_.nvars()));
    DenFactors den = den_;
    for (const auto& [f, m] : o.den_) den[f] += m;
    return make(num_ * o.num_, std::move(den), true);
}

RatFn RatFn::operator/(const RatFn& o) const { return *this * o.inv(); }

RatFn RatFn::inv() const {
    if (is_zero()) throw std::domain_error("RatFn: inverse of zero");
    Poly newnum(num_.nvars(), Rat(1));
    for (const auto& [f, m] : den_)
        for (int i = 0; i < m; ++i) newnum *= f;
    Rat scalar(1);
    DenFactors fs = split_den(num_, scalar, nullptr);
    return make(newnum.scaled(scalar.inv()), std::move(fs), true);
}

RatFn RatFn::scaled(const Rat& c) const {
    if (c.is_zero()) return RatFn(Poly(num_.nvars()));
    RatFn r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

bool RatFn::operator<(const RatFn& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

RatFn RatFn::subst(const std::vector<Poly>& images) const {
    return RatFn(num_.subst(images), den().subst(images));
}

RatFn RatFn::subst_auto(const std::vector<Poly>& images) const {
    Poly n = num_.subst(images);
    Rat scalar(1);
    DenFactors fs;
    for (const auto& [f, m] : den_) {
        Poly img = f.subst(images);
        Rat lc = img.lead_coeff();
        for (int i = 0; i < m; ++i) scalar *= lc;
        fs[img.monic()] += m;
    }
    return make(n.scaled(scalar.inv()), std::move(fs), false);
}

RatFn RatFn::eval_var(int var, const Rat& c) const {
    Poly n = num_.eval_var(var, c);
    Poly d(num_.nvars(), Rat(1));
    for (const auto& [f, m] : den_) {
        Poly fe = f.eval_var(var, c);
        if (fe.is_zero()) throw std::domain_error("RatFn: denominator vanishes at specialization");
        for (int i = 0; i < m; ++i) d *= fe;
    }
    return RatFn(n, d);
}

std::string RatFn::to_string(const std::vector<std::string>& names) const {
    if (is_polynomial()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den().to_string(names) + ")";
}

size_t RatFn::hash() const {
    size_t h = num_.hash() * 131;
    for (const auto& [f, m] : den_) h = h * 1099511628211ull ^ (f.hash() + m);
    return h;
}

int degree_in_var(const RatFn& f, int var) {
    if (f.is_zero()) return std::numeric_limits<int>::min();
    int dd = 0;
    for (const auto& [p, m] : f.den_factors()) dd += m * p.degree_in(var);
    return f.num().degree_in(var) - dd;
}

KExpansion leading_coeff_at(const RatFn& f, int var, int d) {
    if (d < 0) throw std::invalid_argument("leading_coeff_at: order must be >= 0");
    int nv = f.num().nvars();
    if (f.is_zero()) return {RatFn(Poly(nv)), f};
    int dn = f.num().degree_in(var), dd = f.den().degree_in(var);
    if (dn - dd > d)
        throw std::domain_error("leading_coeff_at: pole at infinity beyond requested order");
    if (dn - dd < d || dn < dd) {
        // the polynomial part has degree < d, so the coefficient is zero
        return {RatFn(Poly(nv)), f};
    }
    // univariate division in `var` over rational functions of the rest:
    // only the top quotient coefficient (at var^d) is needed
    std::vector<RatFn> ncs, dcs;
    for (int i = 0; i <= dn; ++i) ncs.push_back(RatFn(f.num().coeff_of(var, i)));
    for (int i = 0; i <= dd; ++i) dcs.push_back(RatFn(f.den().coeff_of(var, i)));
    // long division until quotient coefficient of var^d is produced
    std::vector<RatFn> rem = ncs;
    RatFn cd = RatFn(Poly(nv));
    for (int qd = dn - dd; qd >= d; --qd) {
        RatFn top = rem[qd + dd] / dcs[dd];
        if (qd == d) { cd = top; break; }
        for (int i = 0; i <= dd; ++i) rem[qd + i] -= top * dcs[i];
    }
    RatFn remainder = f - cd * RatFn(Poly::var(nv, var, d));
    return {cd, remainder};
}

}  // namespace qweyl
