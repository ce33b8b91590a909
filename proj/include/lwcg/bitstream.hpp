#pragma once
// Bit-level I/O: MSB-first bit order, big-endian fixed-width fields,
// Elias delta codes over arbitrary-precision positive integers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace lwcg {

using Nat = mpz_class;

struct StreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// width(x) = 1 + floor(log2(max(x, 1))): the bit count of a field that holds 0..x.
unsigned width(uint64_t x);

// Bit length of the Elias delta codeword for N >= 1.
uint64_t elias_delta_length(const Nat& N);

class BitWriter {
public:
    void write_bit(bool b);
    // Exactly `w` bits of `value`, most significant first. Requires value < 2^w, 1 <= w <= 64.
    void write_fixed(uint64_t value, unsigned w);
    void write_elias_delta(const Nat& N);
    void write_elias_delta(uint64_t N);

    uint64_t bit_count() const { return nbits_; }
    // Unwritten bits of the last byte are zero, so the buffer is already byte-padded.
    const std::vector<uint8_t>& bytes() const { return bytes_; }

private:
    std::vector<uint8_t> bytes_;
    uint64_t nbits_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const uint8_t> data, uint64_t bit_offset = 0)
        : data_(data), pos_(bit_offset) {}

    bool read_bit();
    uint64_t read_fixed(unsigned w);
    Nat read_elias_delta();
    // Elias delta value that must fit in 64 bits.
    uint64_t read_elias_delta_u64();

    uint64_t position() const { return pos_; }
    uint64_t bits_left() const { return data_.size() * 8 - pos_; }

private:
    std::span<const uint8_t> data_;
    uint64_t pos_;
};

} // namespace lwcg
