#pragma once
// Self-delimiting code for a sequence of nonnegative integers: symbol
// frequencies, then the rank of the sequence among all its rearrangements
// (a bipartite graph with unit left degrees).

#include <cstdint>
#include <vector>

#include "lwcg/bitstream.hpp"

namespace lwcg {

// Requires y nonempty.
void encode_sequence(BitWriter& out, const std::vector<uint64_t>& y);
std::vector<uint64_t> decode_sequence(BitReader& in, uint64_t n);

} // namespace lwcg
