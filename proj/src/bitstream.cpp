#include "lwcg/bitstream.hpp"

#include <bit>

namespace lwcg {

unsigned width(uint64_t x) {
    return static_cast<unsigned>(std::bit_width(x == 0 ? uint64_t{1} : x));
}

uint64_t elias_delta_length(const Nat& N) {
    if (N <= 0) throw std::invalid_argument("elias delta: N must be positive");
    uint64_t m = mpz_sizeinbase(N.get_mpz_t(), 2) - 1;
    uint64_t r = std::bit_width(m + 1) - 1;
    return m + 2 * r + 1;
}

void BitWriter::write_bit(bool b) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= static_cast<uint8_t>(0x80u >> (nbits_ & 7));
    ++nbits_;
}

void BitWriter::write_fixed(uint64_t value, unsigned w) {
    if (w == 0 || w > 64) throw std::invalid_argument("write_fixed: width out of range");
    if (w < 64 && (value >> w) != 0) throw std::invalid_argument("write_fixed: value too large for width");
    for (unsigned i = w; i-- > 0;) write_bit((value >> i) & 1u);
}

void BitWriter::write_elias_delta(const Nat& N) {
    if (N <= 0) throw std::invalid_argument("elias delta: N must be positive");
    const mpz_srcptr z = N.get_mpz_t();
    uint64_t m = mpz_sizeinbase(z, 2) - 1;
    unsigned r = static_cast<unsigned>(std::bit_width(m + 1) - 1);
    for (unsigned i = 0; i < r; ++i) write_bit(false);
    write_fixed(m + 1, r + 1);
    for (uint64_t i = m; i-- > 0;) write_bit(mpz_tstbit(z, i));
}

void BitWriter::write_elias_delta(uint64_t N) {
    if (N == 0) throw std::invalid_argument("elias delta: N must be positive");
    unsigned m = static_cast<unsigned>(std::bit_width(N) - 1);
    unsigned r = static_cast<unsigned>(std::bit_width(uint64_t{m} + 1) - 1);
    for (unsigned i = 0; i < r; ++i) write_bit(false);
    write_fixed(m + 1, r + 1);
    if (m > 0) write_fixed(N & ((uint64_t{1} << m) - 1), m);
}

bool BitReader::read_bit() {
    if (pos_ >= data_.size() * 8) throw StreamError("truncated bit stream");
    bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
    ++pos_;
    return b;
}

uint64_t BitReader::read_fixed(unsigned w) {
    if (w == 0 || w > 64) throw std::invalid_argument("read_fixed: width out of range");
    if (bits_left() < w) throw StreamError("truncated bit stream");
    uint64_t v = 0;
    for (unsigned i = 0; i < w; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
    return v;
}

Nat BitReader::read_elias_delta() {
    unsigned r = 0;
    while (!read_bit()) {
        if (++r > 63) throw StreamError("malformed elias delta codeword");
    }
    // The leading 1 of (m+1) has been consumed; read its remaining r bits.
    uint64_t len = 1;
    if (r > 0) len = (uint64_t{1} << r) | read_fixed(r);
    uint64_t m = len - 1;
    if (bits_left() < m) throw StreamError("truncated bit stream");
    if (m <= 64) {
        Nat N{1ul};
        if (m > 0) {
            N <<= static_cast<mp_bitcnt_t>(m);
            N += static_cast<unsigned long>(read_fixed(static_cast<unsigned>(m)));
        }
        return N;
    }
    mpz_t z;
    mpz_init2(z, m + 1);
    mpz_setbit(z, m);
    for (uint64_t i = m; i-- > 0;)
        if (read_bit()) mpz_setbit(z, i);
    Nat N(z);
    mpz_clear(z);
    return N;
}

uint64_t BitReader::read_elias_delta_u64() {
    Nat N = read_elias_delta();
    if (mpz_sizeinbase(N.get_mpz_t(), 2) > 64) throw StreamError("elias delta value exceeds 64 bits");
    return N.get_ui();
}

} // namespace lwcg
