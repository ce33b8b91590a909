#include <random>
#include <string>

#include "doctest.h"
#include "lwcg/bipartite.hpp"
#include "lwcg/combinatorics.hpp"
#include "lwcg/sequence.hpp"

using namespace lwcg;

namespace {

std::string bits_of(const BitWriter& w) {
    std::string s;
    BitReader r(w.bytes());
    for (uint64_t i = 0; i < w.bit_count(); ++i) s += r.read_bit() ? '1' : '0';
    return s;
}

std::vector<uint64_t> round_trip(const std::vector<uint64_t>& y) {
    BitWriter w;
    encode_sequence(w, y);
    BitReader r(w.bytes());
    std::vector<uint64_t> back = decode_sequence(r, y.size());
    REQUIRE(r.position() == w.bit_count());
    return back;
}

} // namespace

TEST_CASE("all-zero sequence of length 4") {
    BitWriter w;
    encode_sequence(w, {0, 0, 0, 0});
    CHECK(bits_of(w) == "1" "01101" "1");
    CHECK(round_trip({0, 0, 0, 0}) == std::vector<uint64_t>{0, 0, 0, 0});
}

TEST_CASE("three-symbol sequence and its rearrangement bound") {
    std::vector<uint64_t> y{0, 0, 1, 0, 2, 0, 1, 2};
    BipartiteInstance inst{std::vector<uint64_t>(8, 1), {4, 2, 2}, {}};
    for (uint64_t s : y) inst.adj.push_back({1 + s});
    Nat f = b_encode(inst);
    // 8! / (4! 2! 2!) = 420
    Nat bound = ceil_div(compute_product(int64_t{8}, 8, 1), Nat(24 * 2 * 2));
    CHECK(bound == 420);
    CHECK(f + 1 <= bound);
    CHECK(round_trip(y) == y);
}

TEST_CASE("all-zero sequences of lengths 1..20") {
    for (uint64_t n = 1; n <= 20; ++n) {
        std::vector<uint64_t> y(n, 0);
        CHECK(round_trip(y) == y);
    }
}

TEST_CASE("missing intermediate symbols") {
    std::vector<uint64_t> y{2, 0, 2, 0, 0};
    CHECK(round_trip(y) == y);
    CHECK(round_trip({5}) == std::vector<uint64_t>{5});
}

TEST_CASE("random sequences round trip and concatenated payloads stay separate") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 1000; ++trial) {
        uint64_t n = 1 + rng() % 200;
        std::vector<uint64_t> y(n), z(1 + rng() % 50);
        for (auto& v : y) v = rng() % 8;
        for (auto& v : z) v = rng() % 3;
        BitWriter w;
        encode_sequence(w, y);
        encode_sequence(w, z);
        BitReader r(w.bytes());
        REQUIRE(decode_sequence(r, y.size()) == y);
        REQUIRE(decode_sequence(r, z.size()) == z);
        REQUIRE(r.position() == w.bit_count());
    }
}

TEST_CASE("codeword stays within the rearrangement count") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        uint64_t n = 1 + rng() % 60;
        std::vector<uint64_t> y(n);
        for (auto& v : y) v = rng() % 5;
        BipartiteInstance inst{std::vector<uint64_t>(n, 1), std::vector<uint64_t>(5, 0), {}};
        for (uint64_t s : y) {
            ++inst.b[s];
            inst.adj.push_back({1 + s});
        }
        Nat bound = ceil_div(compute_product(static_cast<int64_t>(n), n, 1), prod_factorial(inst.b, 1, 5));
        REQUIRE(b_encode(inst) <= bound);
    }
}

TEST_CASE("empty and truncated payloads are rejected") {
    BitWriter w;
    CHECK_THROWS_AS(encode_sequence(w, {}), std::invalid_argument);
    encode_sequence(w, {3, 1, 4, 1, 5, 9, 2, 6});
    std::vector<uint8_t> cut(w.bytes().begin(), w.bytes().begin() + 2);
    BitReader r(cut);
    CHECK_THROWS_AS(decode_sequence(r, 8), StreamError);
}
