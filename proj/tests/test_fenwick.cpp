#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lwcg/fenwick.hpp"

using namespace lwcg;

TEST_CASE("suffix sums after init") {
    SuffixFenwick U(std::vector<uint64_t>{3, 1, 2});
    CHECK(U.suffix_sum(1) == 6);
    CHECK(U.suffix_sum(2) == 3);
    CHECK(U.suffix_sum(3) == 2);
    CHECK(U.suffix_sum(4) == 0);
    SuffixFenwick empty(std::vector<uint64_t>{});
    CHECK(empty.suffix_sum(1) == 0);
}

TEST_CASE("point updates") {
    SuffixFenwick U(std::vector<uint64_t>{3, 1, 2});
    U.add(2, -1);
    CHECK(U.suffix_sum(1) == 5);
    CHECK(U.suffix_sum(2) == 2);
    U.add(3, 0);
    CHECK(U.suffix_sum(3) == 2);
    CHECK_THROWS_AS(U.add(0, 1), std::out_of_range);
    CHECK_THROWS_AS(U.add(4, 1), std::out_of_range);
}

TEST_CASE("random arrays against naive suffix sums") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint64_t> a(50);
        for (auto& x : a) x = rng() % 20;
        SuffixFenwick U(a);
        for (uint64_t k = 1; k <= 51; ++k) {
            int64_t naive = 0;
            for (uint64_t i = k; i <= 50; ++i) naive += static_cast<int64_t>(a[i - 1]);
            REQUIRE(U.suffix_sum(k) == naive);
        }
    }
}

TEST_CASE("interleaved updates and queries against a mutable array") {
    std::mt19937_64 rng(12);
    for (uint64_t n : {1u, 2u, 7u, 64u, 100u, 1000u}) {
        std::vector<int64_t> a(n);
        for (auto& x : a) x = static_cast<int64_t>(rng() % 10);
        SuffixFenwick U(a);
        for (int op = 0; op < 10000; ++op) {
            uint64_t k = 1 + rng() % n;
            if (rng() & 1) {
                int64_t c = static_cast<int64_t>(rng() % 7) - 3;
                if (a[k - 1] + c < 0) c = -a[k - 1];
                a[k - 1] += c;
                U.add(k, c);
            } else {
                int64_t naive = 0;
                for (uint64_t i = k; i <= n; ++i) naive += a[i - 1];
                REQUIRE(U.suffix_sum(k) == naive);
            }
        }
    }
}
