#include <bit>
#include <random>
#include <string>

#include "doctest.h"
#include "lwcg/bitstream.hpp"

using namespace lwcg;

namespace {

std::string bits_of(const BitWriter& w) {
    std::string s;
    BitReader r(w.bytes());
    for (uint64_t i = 0; i < w.bit_count(); ++i) s += r.read_bit() ? '1' : '0';
    return s;
}

std::string delta_bits(uint64_t N) {
    BitWriter w;
    w.write_elias_delta(N);
    return bits_of(w);
}

// Reference codeword built from the textual definition: r zeros, m+1 in binary, low m bits of N.
std::string delta_reference(uint64_t N) {
    auto binary = [](uint64_t v) {
        std::string s;
        do {
            s.insert(s.begin(), char('0' + (v & 1)));
            v >>= 1;
        } while (v);
        return s;
    };
    std::string full = binary(N);
    std::string len = binary(full.size());
    return std::string(len.size() - 1, '0') + len + full.substr(1);
}

} // namespace

TEST_CASE("elias delta codewords of small integers") {
    CHECK(delta_bits(1) == "1");
    CHECK(delta_bits(2) == "0100");
    CHECK(delta_bits(3) == "0101");
    CHECK(delta_bits(4) == "01100");
    CHECK(delta_bits(5) == "01101");
    CHECK(delta_bits(8) == "00100000");
    for (uint64_t N = 1; N < 5000; ++N) REQUIRE(delta_bits(N) == delta_reference(N));
}

TEST_CASE("elias delta length closed form") {
    for (uint64_t N = 1; N < 100000; N += 7) {
        uint64_t m = std::bit_width(N) - 1;
        uint64_t r = std::bit_width(m + 1) - 1;
        REQUIRE(elias_delta_length(Nat(static_cast<unsigned long>(N))) == m + 2 * r + 1);
        REQUIRE(delta_bits(N).size() == m + 2 * r + 1);
    }
}

TEST_CASE("elias delta round trip including multi-limb values") {
    std::mt19937_64 rng(7);
    BitWriter w;
    std::vector<Nat> values;
    for (int i = 0; i < 300; ++i) {
        Nat v{1ul};
        int limbs = i % 7;
        for (int k = 0; k < limbs; ++k) {
            v <<= 64;
            v += static_cast<unsigned long>(rng());
        }
        v += static_cast<unsigned long>(rng() >> (i % 60));
        values.push_back(v);
        w.write_elias_delta(v);
        w.write_fixed(i & 1, 1);
    }
    BitReader r(w.bytes());
    for (size_t i = 0; i < values.size(); ++i) {
        REQUIRE(r.read_elias_delta() == values[i]);
        REQUIRE(r.read_fixed(1) == (i & 1));
    }
    CHECK(r.bits_left() < 8);
}

TEST_CASE("fixed-width fields and widths") {
    CHECK(width(0) == 1);
    CHECK(width(1) == 1);
    CHECK(width(2) == 2);
    CHECK(width(16) == 5);
    CHECK(width(UINT64_MAX) == 64);
    BitWriter w;
    w.write_fixed(5, 3);
    w.write_fixed(UINT64_MAX, 64);
    CHECK_THROWS_AS(w.write_fixed(8, 3), std::invalid_argument);
    BitReader r(w.bytes());
    CHECK(r.read_fixed(3) == 5);
    CHECK(r.read_fixed(64) == UINT64_MAX);
}

TEST_CASE("padding bits are zero and truncation is reported") {
    BitWriter w;
    w.write_bit(true);
    REQUIRE(w.bytes().size() == 1);
    CHECK(w.bytes()[0] == 0x80);

    BitWriter big;
    big.write_elias_delta(uint64_t{1} << 40);
    std::vector<uint8_t> cut(big.bytes().begin(), big.bytes().end() - 2);
    BitReader r(cut);
    CHECK_THROWS_AS(r.read_elias_delta(), StreamError);

    std::vector<uint8_t> zeros(16, 0);
    BitReader z(zeros);
    CHECK_THROWS_AS(z.read_elias_delta(), StreamError);
}
