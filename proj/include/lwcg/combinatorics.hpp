#pragma once
// Exact products used by the ranking codecs. All splits are balanced so that
// the operands of each multiplication have comparable size.

#include <cstdint>
#include <vector>

#include "lwcg/bitstream.hpp"

namespace lwcg {

// prod_{t=0}^{k-1} (p - t*s), clamped: 1 when k == 0, 0 when p - (k-1)s <= 0.
Nat compute_product(const Nat& p, uint64_t k, uint64_t s);
Nat compute_product(int64_t p, uint64_t k, uint64_t s);

// prod_{t=i}^{j} v_t! with 1-based inclusive bounds.
Nat prod_factorial(const std::vector<uint64_t>& v, uint64_t i, uint64_t j);

// (S_hi - 1)!! / (S_lo - 1)!! for even S_hi >= S_lo >= 0, with (-1)!! = 1.
Nat double_factorial_ratio(uint64_t s_hi, uint64_t s_lo);

// C(n, m) = (n)_m / m!.
Nat binomial(uint64_t n, uint64_t m);

// ceil(a / b) for b > 0.
Nat ceil_div(const Nat& a, const Nat& b);

} // namespace lwcg
