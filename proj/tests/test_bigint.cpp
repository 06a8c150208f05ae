#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tspread/bigint.hpp"

using tspread::BigInt;

TEST_CASE("small arithmetic agrees with built-in integers") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int k = 0; k < 2000; ++k) {
        const long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).fits_ll());
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
    }
}

TEST_CASE("exact division recovers factors of large products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-(1LL << 58), 1LL << 58);
    for (int k = 0; k < 2000; ++k) {
        long long a = dist(rng), b = dist(rng);
        if (!b) b = 3;
        const BigInt p = BigInt(a) * BigInt(b) * BigInt(b);
        CHECK(p.div_exact(BigInt(b)).div_exact(BigInt(b)) == BigInt(a));
    }
    CHECK_THROWS(BigInt(7).div_exact(BigInt(2)));
    CHECK_THROWS(BigInt(1).div_exact(BigInt(0)));
}

TEST_CASE("string rendering") {
    BigInt x(1);
    for (int i = 0; i < 30; ++i) x = x * BigInt(10);
    CHECK(x.to_string() == "1" + std::string(30, '0'));
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-12345).to_string() == "-12345");
    CHECK((-x).to_string() == "-1" + std::string(30, '0'));
    CHECK_FALSE(x.fits_ll());
}

TEST_CASE("chained products stay exact across the long-long boundary") {
    // 100! / 99! / 98! ... reduced stepwise
    BigInt fact(1);
    for (int i = 2; i <= 40; ++i) fact = fact * BigInt(i);
    BigInt back = fact;
    for (int i = 40; i >= 2; --i) back = back.div_exact(BigInt(i));
    CHECK(back == BigInt(1));
}
