#include <random>

#include "doctest.h"
#include "lwcg/combinatorics.hpp"

using namespace lwcg;

namespace {

Nat naive_product(const Nat& p, uint64_t k, uint64_t s) {
    Nat acc{1ul};
    for (uint64_t t = 0; t < k; ++t) {
        Nat f = p - Nat(static_cast<unsigned long>(t * s));
        if (f <= 0) return Nat{0ul};
        acc *= f;
    }
    return acc;
}

Nat factorial(uint64_t v) { return naive_product(Nat(static_cast<unsigned long>(v)), v, 1); }

} // namespace

TEST_CASE("compute_product clamps and matches the sequential product") {
    CHECK(compute_product(int64_t{5}, 0, 1) == 1);
    CHECK(compute_product(int64_t{-3}, 0, 2) == 1);
    CHECK(compute_product(int64_t{5}, 3, 1) == 60);
    CHECK(compute_product(int64_t{5}, 3, 2) == 15);
    CHECK(compute_product(int64_t{5}, 4, 2) == 0);
    CHECK(compute_product(int64_t{0}, 1, 1) == 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        int64_t p = static_cast<int64_t>(rng() % 400) - 50;
        uint64_t k = rng() % 120, s = 1 + rng() % 3;
        REQUIRE(compute_product(p, k, s) == naive_product(Nat(static_cast<long>(p)), k, s));
    }
}

TEST_CASE("compute_product on multi-limb bases") {
    Nat p{1ul};
    p <<= 200;
    p += 12345;
    CHECK(compute_product(p, 40, 3) == naive_product(p, 40, 3));
    CHECK(compute_product(p, 1, 7) == p);
}

TEST_CASE("prod_factorial over index ranges") {
    std::vector<uint64_t> v{3, 0, 1, 5, 2, 7};
    CHECK(prod_factorial(v, 1, 1) == 6);
    CHECK(prod_factorial(v, 1, 6) == Nat(6 * 1 * 1 * 120 * 2 * 5040));
    CHECK(prod_factorial(v, 4, 5) == 240);
    CHECK_THROWS(prod_factorial(v, 0, 2));
    CHECK_THROWS(prod_factorial(v, 3, 7));
}

TEST_CASE("double factorial ratio") {
    CHECK(double_factorial_ratio(0, 0) == 1);
    CHECK(double_factorial_ratio(2, 0) == 1);
    CHECK(double_factorial_ratio(6, 0) == 15);
    CHECK(double_factorial_ratio(6, 2) == 15);
    CHECK(double_factorial_ratio(8, 4) == 35);
    CHECK_THROWS(double_factorial_ratio(5, 2));
    CHECK_THROWS(double_factorial_ratio(2, 4));
}

TEST_CASE("binomial agrees with Pascal's triangle") {
    std::vector<std::vector<Nat>> pascal(80);
    for (uint64_t n = 0; n < 80; ++n) {
        pascal[n].resize(n + 1);
        pascal[n][0] = pascal[n][n] = 1;
        for (uint64_t m = 1; m < n; ++m) pascal[n][m] = pascal[n - 1][m - 1] + pascal[n - 1][m];
        for (uint64_t m = 0; m <= n; ++m) REQUIRE(binomial(n, m) == pascal[n][m]);
        CHECK(binomial(n, n + 1) == 0);
    }
    CHECK(binomial(30, 15) * factorial(15) * factorial(15) == factorial(30));
}

TEST_CASE("ceil_div") {
    CHECK(ceil_div(Nat(0), Nat(3)) == 0);
    CHECK(ceil_div(Nat(7), Nat(7)) == 1);
    CHECK(ceil_div(Nat(8), Nat(7)) == 2);
}
