// Arbitrary-precision signed integers and rationals.
//
// Exact coefficient arithmetic for the polynomial layer. Magnitudes are
// little-endian vectors of 32-bit limbs; division is schoolbook long
// division with 64-bit trial quotients.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qweyl {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }

    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    int cmp(const BigInt& o) const;

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    BigInt abs() const;
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    // Value as long long; only valid when it fits.
    long long to_ll() const;
    bool fits_ll() const;

    std::string to_string() const;

    size_t hash() const;

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;  // little-endian, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Rational number, always normalized: den > 0, gcd(num, den) = 1.
// Values are kept in a machine-word fast path and promoted to
// arbitrary-precision integers only when an operation overflows.
class Rat {
public:
    Rat() : small_(true), n_(0), d_(1) {}
    Rat(long long v) : small_(true), n_(v), d_(1) {}
    Rat(const BigInt& n, const BigInt& d);
    Rat(long long n, long long d);

    static Rat from_string(const std::string& s);  // "p" or "p/q"

    BigInt num() const { return small_ ? BigInt(n_) : bn_; }
    BigInt den() const { return small_ ? BigInt(d_) : bd_; }

    bool is_zero() const { return small_ ? n_ == 0 : bn_.is_zero(); }
    bool is_one() const { return small_ ? (n_ == 1 && d_ == 1) : (bn_.is_one() && bd_.is_one()); }
    bool is_integer() const { return small_ ? d_ == 1 : bd_.is_one(); }
    int sign() const { return small_ ? (n_ > 0) - (n_ < 0) : bn_.sign(); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const;
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;

    Rat inv() const;
    Rat abs() const;

    std::string to_string() const;  // "p" or "p/q"

    size_t hash() const;

private:
    bool small_;
    long long n_ = 0, d_ = 1;  // valid when small_
    BigInt bn_, bd_;           // valid when !small_

    static Rat from_i128(__int128 n, __int128 d);
    static Rat from_big(const BigInt& n, const BigInt& d);
};

}  // namespace qweyl
