#pragma once
// Ranking codec for simple graphs with a given degree sequence. The rank N counts
// perfect matchings of half-edges whose adjacency rows precede the graph's; the
// codeword is f = ceil(N / prod a_v!) together with a checkpoint array that lets
// the decoder split long intervals at their midpoint.

#include <cstdint>
#include <vector>

#include "lwcg/bipartite.hpp"
#include "lwcg/bitstream.hpp"

namespace lwcg {

// Vertices 1..n with n = a.size() >= 2. fwd[v - 1] lists the neighbors of v
// greater than v, increasing.
struct SimpleInstance {
    std::vector<uint64_t> a;
    std::vector<std::vector<uint64_t>> fwd;
};

// Entry I (1-based, stored at [I - 1]) is the residual half-edge total S_{k+1}
// at the midpoint of the interval with index I; root is 1, children 2I and 2I+1.
using Checkpoints = std::vector<uint64_t>;

struct SimpleRank {
    Nat f;
    Nat N;
    Nat l;
    Checkpoints checkpoints;
};

// floor(log2 n)^2: intervals longer than this get a checkpoint.
uint64_t checkpoint_threshold(uint64_t n);
// floor(16 n / ln(n)^2).
uint64_t checkpoint_length(uint64_t n);

// Throws std::invalid_argument on n < 2 or inconsistent forward lists.
SimpleRank s_encode_full(const SimpleInstance& inst, const IntervalObserver& observer = {});

// Defined only on (f, checkpoints) produced by s_encode for the same degrees.
std::vector<std::vector<uint64_t>> s_decode(const Nat& f, const Checkpoints& checkpoints,
                                            const std::vector<uint64_t>& a);

// Brute-force N(G) over all (S-1)!! matchings. Requires sum(a) <= 10.
Nat s_count_oracle(const SimpleInstance& inst);

} // namespace lwcg
