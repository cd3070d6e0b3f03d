#include "qweyl/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qweyl {

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    unsigned long long u = neg_ ? (~static_cast<unsigned long long>(v) + 1ull)
                                : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffull));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

// requires a >= b
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (d < 0) { d += (1ll << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t j = b.size();
        while (carry) {
            uint64_t cur = static_cast<uint64_t>(r[i + j]) + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++j;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) { q.clear(); r = a; return; }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) { top <<= 1; ++shift; }

    auto shl = [shift](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        if (shift == 0) { out.assign(v.begin(), v.end()); out.push_back(0); return out; }
        uint32_t carry = 0;
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << shift) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
        }
        out[v.size()] = carry;
        return out;
    };

    std::vector<uint32_t> u = shl(a);          // m+n+1 limbs (includes extra)
    std::vector<uint32_t> v = shl(b);
    while (!v.empty() && v.back() == 0) v.pop_back();
    size_t n = v.size();
    size_t m = u.size() - n;                    // u has a.size()+1 limbs

    q.assign(m, 0);
    const uint64_t BASE = 1ull << 32;
    for (size_t j = m; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= BASE ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= BASE) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) { t += BASE; borrow = 1; } else borrow = 0;
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            t += BASE;
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffull);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= (BASE - 1);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    // Denormalize remainder.
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        uint32_t carry = 0;
        for (size_t i = r.size(); i-- > 0;) {
            uint32_t cur = r[i];
            r[i] = (cur >> shift) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(cur) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.mag_ = sub_mag(mag_, o.mag_); r.neg_ = neg_; }
        else { r.mag_ = sub_mag(o.mag_, mag_); r.neg_ = o.neg_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.mag_.empty() && a.neg_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? -c : c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t v = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    return neg_ ? v <= 0x8000000000000000ull : v <= 0x7fffffffffffffffull;
}

long long BigInt::to_ll() const {
    uint64_t v = 0;
    if (mag_.size() > 0) v |= mag_[0];
    if (mag_.size() > 1) v |= static_cast<uint64_t>(mag_[1]) << 32;
    return neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        uint64_t rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | tmp[i];
            tmp[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty string");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    r.neg_ = neg && !r.mag_.empty();
    return r;
}

size_t BigInt::hash() const {
    size_t h = neg_ ? 0x9e3779b97f4a7c15ull : 0;
    for (uint32_t limb : mag_) h = h * 1099511628211ull ^ limb;
    return h;
}

namespace {

constexpr long long kSmallMax = 0x3fffffffffffffffll;  // headroom for safety

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt big_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt two32(1ll << 32);
    BigInt r(0);
    for (int shift = 96; shift >= 0; shift -= 32)
        r = r * two32 + BigInt(static_cast<long long>((u >> shift) & 0xffffffffull));
    return neg ? -r : r;
}

}  // namespace

Rat Rat::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    if (n == 0) {
        Rat r;
        return r;
    }
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n <= kSmallMax && n >= -kSmallMax && d <= kSmallMax) {
        Rat r;
        r.small_ = true;
        r.n_ = static_cast<long long>(n);
        r.d_ = static_cast<long long>(d);
        return r;
    }
    return from_big(big_from_i128(n), big_from_i128(d));
}

Rat Rat::from_big(const BigInt& n, const BigInt& d) {
    if (d.is_zero()) throw std::domain_error("Rat: zero denominator");
    BigInt nn = n, dd = d;
    if (dd.is_negative()) { nn = -nn; dd = -dd; }
    if (nn.is_zero()) return Rat();
    BigInt g = BigInt::gcd(nn, dd);
    if (!g.is_one()) { nn = nn / g; dd = dd / g; }
    Rat r;
    if (nn.fits_ll() && dd.fits_ll()) {
        long long lv = nn.to_ll(), ld = dd.to_ll();
        if (lv <= kSmallMax && lv >= -kSmallMax && ld <= kSmallMax) {
            r.small_ = true;
            r.n_ = lv;
            r.d_ = ld;
            return r;
        }
    }
    r.small_ = false;
    r.bn_ = nn;
    r.bd_ = dd;
    return r;
}

Rat::Rat(const BigInt& n, const BigInt& d) { *this = from_big(n, d); }

Rat::Rat(long long n, long long d) { *this = from_i128(n, d); }

Rat Rat::operator-() const {
    Rat r = *this;
    if (r.small_) r.n_ = -r.n_;
    else r.bn_ = -r.bn_;
    return r;
}

Rat Rat::operator+(const Rat& o) const {
    if (small_ && o.small_)
        return from_i128(static_cast<__int128>(n_) * o.d_ + static_cast<__int128>(o.n_) * d_,
                         static_cast<__int128>(d_) * o.d_);
    return from_big(num() * o.den() + o.num() * den(), den() * o.den());
}

Rat Rat::operator-(const Rat& o) const {
    if (small_ && o.small_)
        return from_i128(static_cast<__int128>(n_) * o.d_ - static_cast<__int128>(o.n_) * d_,
                         static_cast<__int128>(d_) * o.d_);
    return from_big(num() * o.den() - o.num() * den(), den() * o.den());
}

Rat Rat::operator*(const Rat& o) const {
    if (small_ && o.small_)
        return from_i128(static_cast<__int128>(n_) * o.n_, static_cast<__int128>(d_) * o.d_);
    return from_big(num() * o.num(), den() * o.den());
}

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    if (small_ && o.small_)
        return from_i128(static_cast<__int128>(n_) * o.d_, static_cast<__int128>(d_) * o.n_);
    return from_big(num() * o.den(), den() * o.num());
}

bool Rat::operator==(const Rat& o) const {
    if (small_ && o.small_) return n_ == o.n_ && d_ == o.d_;
    // normalized forms are unique, so mixed comparisons promote
    return num() == o.num() && den() == o.den();
}

bool Rat::operator<(const Rat& o) const {
    if (small_ && o.small_)
        return static_cast<__int128>(n_) * o.d_ < static_cast<__int128>(o.n_) * d_;
    return (num() * o.den()).cmp(o.num() * den()) < 0;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    if (small_) return from_i128(d_, n_);
    return from_big(bd_, bn_);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::to_string() const {
    if (is_integer()) return num().to_string();
    return num().to_string() + "/" + den().to_string();
}

Rat Rat::from_string(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return from_big(BigInt::from_string(s), BigInt(1));
    return from_big(BigInt::from_string(s.substr(0, pos)), BigInt::from_string(s.substr(pos + 1)));
}


size_t Rat::hash() const {
    if (small_) return static_cast<size_t>(n_) * 1099511628211ull ^ static_cast<size_t>(d_);
    return num().hash() * 31 + den().hash();
}

}  // namespace qweyl
