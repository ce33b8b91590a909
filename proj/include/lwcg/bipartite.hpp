#pragma once
// Ranking codec for simple bipartite graphs with given left degrees a and right
// degrees b. The rank N counts bipartite configurations whose adjacency rows
// precede the graph's; the codeword is f = ceil(N / prod b_j!).

#include <cstdint>
#include <functional>
#include <vector>

#include "lwcg/bitstream.hpp"

namespace lwcg {

// Left vertices 1..n_l, right vertices 1..n_r. adj[i - 1] is the increasing
// list of right neighbors of left vertex i.
struct BipartiteInstance {
    std::vector<uint64_t> a;
    std::vector<uint64_t> b;
    std::vector<std::vector<uint64_t>> adj;
};

struct RankResult {
    Nat f;
    Nat N; // N_{1,n_l}
    Nat l; // l_{1,n_l}
};

// Called once per recursion interval [i, j] after it completes, with the
// interval's N, l and r = the number of configuration completions it spans.
using IntervalObserver = std::function<void(uint64_t i, uint64_t j, const Nat& N, const Nat& l, const Nat& r)>;

// Throws std::invalid_argument on degree or adjacency inconsistency.
RankResult b_encode_full(const BipartiteInstance& inst, const IntervalObserver& observer = {});
Nat b_encode(const BipartiteInstance& inst);

// Defined only on codewords produced by b_encode for the same (a, b).
std::vector<std::vector<uint64_t>> b_decode(const Nat& f, const std::vector<uint64_t>& a,
                                            const std::vector<uint64_t>& b);

// Brute-force N(G): enumerate every configuration and count those ranking below G.
// Requires sum(a) <= 10.
Nat b_count_oracle(const BipartiteInstance& inst);

} // namespace lwcg
