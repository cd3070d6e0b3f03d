#include "qweyl/novikov.hpp"

#include <stdexcept>

namespace qweyl {

ExponentGroup::ExponentGroup(int ambient, const IntMat& relations) : ambient_(ambient) {
    if (relations.empty() || relations[0].empty()) {
        // trivial quotient: identity
        u_.assign(ambient, IntVec(ambient, 0));
        uinv_ = u_;
        for (int i = 0; i < ambient; ++i) u_[i][i] = uinv_[i][i] = 1;
        for (int i = 0; i < ambient; ++i) free_rows_.push_back(i);
        return;
    }
    IntDiag d = int_diagonalize(relations);
    u_ = d.U;
    uinv_ = d.Uinv;
    for (int i = 0; i < ambient; ++i) {
        long long di = d.diag[i];
        if (di == 0) free_rows_.push_back(i);
        else if (di > 1) {
            tors_rows_.push_back(i);
            tors_mod_.push_back(di);
        }
        // di == 1: coordinate dies in the quotient
    }
}

bool ExponentGroup::Exp::is_zero() const {
    for (auto v : free)
        if (v) return false;
    for (auto v : tors)
        if (v) return false;
    return true;
}

QExp ExponentGroup::project(const IntVec& x) const {
    IntVec y(ambient_, 0);
    for (int i = 0; i < ambient_; ++i)
        for (int j = 0; j < ambient_; ++j) y[i] += u_[i][j] * x[j];
    Exp e;
    for (int i : free_rows_) e.free.push_back(y[i]);
    for (size_t t = 0; t < tors_rows_.size(); ++t) {
        long long m = tors_mod_[t];
        long long v = y[tors_rows_[t]] % m;
        if (v < 0) v += m;
        e.tors.push_back(v);
    }
    return e;
}

QExp ExponentGroup::zero() const {
    Exp e;
    e.free.assign(free_rows_.size(), 0);
    e.tors.assign(tors_rows_.size(), 0);
    return e;
}

QExp ExponentGroup::add(const Exp& a, const Exp& b) const {
    Exp e = a;
    for (size_t i = 0; i < e.free.size(); ++i) e.free[i] += b.free[i];
    for (size_t i = 0; i < e.tors.size(); ++i) {
        e.tors[i] = (e.tors[i] + b.tors[i]) % tors_mod_[i];
    }
    return e;
}

QExp ExponentGroup::neg(const Exp& a) const {
    Exp e = a;
    for (auto& v : e.free) v = -v;
    for (size_t i = 0; i < e.tors.size(); ++i)
        e.tors[i] = e.tors[i] ? tors_mod_[i] - e.tors[i] : 0;
    return e;
}

IntVec ExponentGroup::lift(const Exp& e) const {
    IntVec y(ambient_, 0);
    for (size_t i = 0; i < free_rows_.size(); ++i) y[free_rows_[i]] = e.free[i];
    for (size_t i = 0; i < tors_rows_.size(); ++i) y[tors_rows_[i]] = e.tors[i];
    IntVec x(ambient_, 0);
    for (int i = 0; i < ambient_; ++i)
        for (int j = 0; j < ambient_; ++j) x[i] += uinv_[i][j] * y[j];
    return x;
}

std::string ExponentGroup::to_string(const Exp& e) const {
    std::string s = "(";
    bool first = true;
    for (auto v : e.free) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    for (size_t i = 0; i < e.tors.size(); ++i) {
        if (!first) s += ",";
        s += std::to_string(e.tors[i]) + "m" + std::to_string(tors_mod_[i]);
        first = false;
    }
    return s + ")";
}

NovikovPoly NovikovPoly::scalar(std::shared_ptr<const ExponentGroup> grp, const RatFn& f) {
    NovikovPoly p(grp, f.num().nvars());
    if (!f.is_zero()) p.terms_.emplace(grp->zero(), f);
    return p;
}

NovikovPoly NovikovPoly::monomial(std::shared_ptr<const ExponentGroup> grp, const QExp& e, const RatFn& f) {
    NovikovPoly p(grp, f.num().nvars());
    if (!f.is_zero()) p.terms_.emplace(e, f);
    return p;
}

RatFn NovikovPoly::constant_part() const {
    auto it = terms_.find(grp_->zero());
    if (it == terms_.end()) return RatFn(Poly(nv_));
    return it->second;
}

bool NovikovPoly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

NovikovPoly NovikovPoly::operator-() const {
    NovikovPoly r = *this;
    for (auto& [e, f] : r.terms_) f = -f;
    return r;
}

NovikovPoly NovikovPoly::operator+(const NovikovPoly& o) const {
    NovikovPoly r = *this;
    if (r.grp_ == nullptr) return o;
    for (const auto& [e, f] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) r.terms_.emplace(e, f);
        else {
            it->second += f;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NovikovPoly NovikovPoly::operator-(const NovikovPoly& o) const { return *this + (-o); }

NovikovPoly NovikovPoly::operator*(const NovikovPoly& o) const {
    NovikovPoly r(grp_ ? grp_ : o.grp_, nv_ ? nv_ : o.nv_);
    for (const auto& [ea, fa] : terms_)
        for (const auto& [eb, fb] : o.terms_) {
            QExp e = grp_->add(ea, eb);
            RatFn f = fa * fb;
            if (f.is_zero()) continue;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(e, f);
            else {
                it->second += f;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

NovikovPoly NovikovPoly::scaled(const RatFn& f) const {
    NovikovPoly r(grp_, nv_);
    if (f.is_zero()) return r;
    for (const auto& [e, g] : terms_) r.terms_.emplace(e, g * f);
    return r;
}

NovikovPoly NovikovPoly::shifted(const QExp& e) const {
    NovikovPoly r(grp_, nv_);
    for (const auto& [e0, g] : terms_) r.terms_.emplace(grp_->add(e0, e), g);
    return r;
}

NovikovPoly NovikovPoly::map_coeffs(const std::function<RatFn(const RatFn&)>& fn) const {
    NovikovPoly r(grp_, nv_);
    for (const auto& [e, g] : terms_) {
        RatFn v = fn(g);
        if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
}

NovikovPoly NovikovPoly::map_exponents(const std::function<QExp(const QExp&)>& fn) const {
    NovikovPoly r(grp_, nv_);
    for (const auto& [e, g] : terms_) {
        QExp e2 = fn(e);
        auto it = r.terms_.find(e2);
        if (it == r.terms_.end()) r.terms_.emplace(e2, g);
        else {
            it->second += g;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

bool NovikovPoly::all_polynomial() const {
    for (const auto& [e, g] : terms_)
        if (!g.is_polynomial()) return false;
    return true;
}

bool NovikovPoly::is_homogeneous(const IntVec& deg_form, int* degree_out) const {
    bool have = false;
    int deg = 0;
    for (const auto& [e, g] : terms_) {
        if (!g.is_homogeneous()) return false;
        IntVec lift = grp_->lift(e);
        long long qd = 0;
        for (size_t i = 0; i < lift.size(); ++i) qd += deg_form[i] * lift[i];
        int d = g.coh_degree() + 2 * static_cast<int>(qd);
        if (!have) { deg = d; have = true; }
        else if (d != deg) return false;
    }
    if (degree_out && have) *degree_out = deg;
    return true;
}

void NovikovPoly::set_term(const QExp& e, const RatFn& f) {
    if (f.is_zero()) terms_.erase(e);
    else terms_[e] = f;
}

std::string NovikovPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, g] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (!e.is_zero()) s += "q^" + grp_->to_string(e) + "*";
        s += "[" + g.to_string(names) + "]";
    }
    return s;
}

QFrac::QFrac(const NovikovPoly& num) : num_(num) {
    den_ = NovikovPoly::scalar(num.group(), RatFn(Poly(num.nvars(), Rat(1))));
}

QFrac::QFrac(const NovikovPoly& num, const NovikovPoly& den) : num_(num), den_(den) { normalize(); }

void QFrac::normalize() {
    if (den_.is_zero()) throw std::domain_error("QFrac: zero denominator");
    for (const auto& [e, g] : den_.terms())
        if (!(g.is_polynomial() && g.num().is_constant()))
            throw std::domain_error("QFrac: denominator must be pure q");
    if (num_.is_zero()) {
        den_ = NovikovPoly::scalar(num_.group() ? num_.group() : den_.group(),
                                   RatFn(Poly(den_.nvars(), Rat(1))));
        return;
    }
    // divide both by the leading q-monomial of the denominator
    const auto& [e0, c0] = *den_.terms().begin();
    QExp shift = den_.group()->neg(e0);
    RatFn inv = RatFn(Poly(den_.nvars(), c0.num().constant_value())).inv();
    num_ = num_.shifted(shift).scaled(inv);
    den_ = den_.shifted(shift).scaled(inv);
}

QFrac QFrac::operator-() const {
    QFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

QFrac QFrac::operator+(const QFrac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QFrac(num_ + o.num_, den_);
    return QFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QFrac QFrac::operator-(const QFrac& o) const { return *this + (-o); }
QFrac QFrac::operator*(const QFrac& o) const { return QFrac(num_ * o.num_, den_ * o.den_); }

QFrac QFrac::operator/(const QFrac& o) const {
    if (o.is_zero()) throw std::domain_error("QFrac: division by zero");
    // the divisor numerator must itself be pure q for the quotient to stay
    // in this fraction ring
    return QFrac(num_ * o.den_, den_ * o.num_);
}

bool QFrac::equals(const QFrac& o) const { return num_ * o.den_ == o.num_ * den_; }

QFrac QFrac::map_coeffs(const std::function<RatFn(const RatFn&)>& fn) const {
    QFrac r = *this;
    r.num_ = r.num_.map_coeffs(fn);
    return r;
}

QFrac QFrac::map_exponents(const std::function<QExp(const QExp&)>& fn) const {
    return QFrac(num_.map_exponents(fn), den_.map_exponents(fn));
}

RatFn QFrac::radial_limit_q0(const IntVec& omega) const {
    auto grp = den_.group();
    auto weight = [&](const QExp& e) {
        IntVec lift = grp->lift(e);
        long long w = 0;
        for (size_t i = 0; i < lift.size(); ++i) w += omega[i] * lift[i];
        return w;
    };
    // denominator as univariate Laurent in t
    std::map<long long, Rat> dent;
    for (const auto& [e, g] : den_.terms()) dent[weight(e)] += g.num().constant_value();
    while (!dent.empty() && dent.begin()->second.is_zero()) dent.erase(dent.begin());
    if (dent.empty()) throw std::domain_error("radial_limit: denominator vanishes on the ray");
    long long dord = dent.begin()->first;
    Rat dlead = dent.begin()->second;

    int nv = num_.nvars();
    std::map<long long, RatFn> numt;
    for (const auto& [e, g] : num_.terms()) {
        auto it = numt.find(weight(e));
        if (it == numt.end()) numt.emplace(weight(e), g);
        else it->second += g;
    }
    for (auto it = numt.begin(); it != numt.end();)
        it = it->second.is_zero() ? numt.erase(it) : std::next(it);
    if (numt.empty()) return RatFn(Poly(nv));
    if (numt.begin()->first < dord)
        throw std::domain_error("radial_limit: limit diverges (support outside effective cone)");
    auto it = numt.find(dord);
    if (it == numt.end()) return RatFn(Poly(nv));
    return it->second.scaled(dlead.inv());
}

std::string QFrac::to_string(const std::vector<std::string>& names) const {
    std::string s = num_.to_string(names);
    bool trivial = den_.is_scalar() && den_.constant_part().is_polynomial() &&
                   den_.constant_part().num().is_one();
    if (!trivial) s = "{" + s + "} / {" + den_.to_string(names) + "}";
    return s;
}

}  // namespace qweyl
