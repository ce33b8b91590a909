#pragma once
// Synthetic marked graphs with Poisson out-choices and a Monte-Carlo estimate of
// the depth-1 entropy target their compressed length should approach.

#include <cstdint>
#include <random>

#include "lwcg/graph.hpp"

namespace lwcg {

// Unbiased integer in [0, bound) by rejection; bound >= 1.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);
// Double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);
// Poisson(lambda) by sequential inversion of the CDF; 0 <= lambda <= 700.
uint64_t sample_poisson(std::mt19937_64& rng, double lambda);

// Each vertex v picks Poisson(lambda) distinct targets from [n] \ {v}; coinciding
// picks merge into one edge. Vertex marks and both edge marks are iid uniform.
// Requires n >= 2 and lambda > 0.
EdgeListGraph generate_synthetic(uint64_t n, double lambda, uint32_t sigma_e, uint32_t sigma_v, uint64_t seed);

struct EntropyEstimate {
    double value = 0;     // nats per vertex
    double std_error = 0;
    uint64_t samples = 0;
    uint64_t distinct_neighborhoods = 0;
};

// Plug-in estimate of the depth-1 entropy target for the limit of the synthetic
// model: a root of degree Poisson(2 lambda), iid uniform marks everywhere.
EntropyEstimate estimate_bc_entropy_h1(double lambda, uint32_t sigma_e, uint32_t sigma_v, uint64_t samples,
                                       uint64_t seed);

// (ln 2 * bits - m ln n) / n, in nats.
double normalized_length(uint64_t bytes, uint64_t m, uint64_t n);

} // namespace lwcg
