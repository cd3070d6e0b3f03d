#include "doctest.h"

#include <random>

#include "qweyl/bigint.hpp"

using namespace qweyl;

TEST_CASE("small arithmetic matches long long") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000ll, 1000000000ll);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
    }
}

TEST_CASE("multi-limb division identity") {
    std::mt19937_64 rng(777);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1ll << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffull));
        return rng() & 1 ? -x : x;
    };
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a = random_big(1 + iter % 6);
        BigInt b = random_big(1 + iter % 4);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncation toward zero: remainder has the sign of a (or is zero)
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("gcd and string round trip") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321098765432109876543210");
    CHECK(a.to_string() == "123456789012345678901234567890");
    BigInt g = BigInt::gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(g.to_string() == "9000000000900000000090");
    CHECK(BigInt::from_string("-42").to_string() == "-42");
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("rationals normalize") {
    Rat a(6, -4);
    CHECK(a.to_string() == "-3/2");
    Rat b(1, 3);
    CHECK((a + b).to_string() == "-7/6");
    CHECK((a * b).to_string() == "-1/2");
    CHECK((a / a).is_one());
    CHECK(Rat::from_string("-7/6") == a + b);
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat(5, 1).is_integer());
    CHECK(b < a.abs());
}
