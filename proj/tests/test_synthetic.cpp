#include <cmath>
#include <random>

#include "doctest.h"
#include "lwcg/synthetic.hpp"

using namespace lwcg;

namespace {

// With a single mark of each kind the depth-1 neighborhood is just the root
// degree D ~ Poisson(d), d = 2 lambda. Then the target reduces to
// (d/2)(1 - ln d): H(D) - E[ln D!] = d - d ln d, minus the d/2 - (d/2) ln d
// edge-count normalization.
double unmarked_target(double lambda) {
    double d = 2 * lambda;
    return d / 2 - d / 2 * std::log(d);
}

// Two marks of each kind at lambda = 3, derived by hand from the same
// decomposition with 8 equiprobable half-edge types and 16 edge types.
const double kMarkedTarget = 3 - 3 * std::log(6.0) + 7 * std::log(2.0);

} // namespace

TEST_CASE("uniform_below is unbiased on a small range") {
    std::mt19937_64 rng(71);
    std::vector<uint64_t> counts(6, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) ++counts[uniform_below(rng, 6)];
    double chi2 = 0;
    for (uint64_t c : counts) chi2 += (c - draws / 6.0) * (c - draws / 6.0) / (draws / 6.0);
    CHECK(chi2 < 20.5); // 5 dof, p ~ 0.001
    CHECK(uniform_below(rng, 1) == 0);
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("poisson sampler moments") {
    std::mt19937_64 rng(72);
    for (double lambda : {0.5, 3.0, 40.0}) {
        const int draws = 200000;
        double s = 0, s2 = 0;
        for (int i = 0; i < draws; ++i) {
            double x = static_cast<double>(sample_poisson(rng, lambda));
            s += x;
            s2 += x * x;
        }
        double mean = s / draws, var = s2 / draws - mean * mean;
        CHECK(std::abs(mean - lambda) < 5 * std::sqrt(lambda / draws));
        CHECK(std::abs(var - lambda) < 0.05 * lambda);
    }
    CHECK(sample_poisson(rng, 0) == 0);
    CHECK_THROWS_AS(sample_poisson(rng, -1), std::invalid_argument);
}

TEST_CASE("generator is deterministic, valid and has the expected density") {
    EdgeListGraph a = generate_synthetic(1000, 3, 2, 2, 1);
    EdgeListGraph b = generate_synthetic(1000, 3, 2, 2, 1);
    CHECK(a == b);
    CHECK_NOTHROW(validate(a));
    CHECK_FALSE(a == generate_synthetic(1000, 3, 2, 2, 2));
    double mean_degree = 2.0 * static_cast<double>(a.edges.size()) / 1000;
    CHECK(mean_degree >= 5.5);
    CHECK(mean_degree <= 6.5);
    for (uint32_t t : a.theta) CHECK((t == 1 || t == 2));
    for (const EdgeRecord& e : a.edges) CHECK((e.x <= 2 && e.xp <= 2 && e.x >= 1 && e.xp >= 1));

    CHECK_THROWS_AS(generate_synthetic(1, 3, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(10, 0, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(10, 3, 0, 2, 1), std::invalid_argument);
}

TEST_CASE("entropy target is zero when every root is isolated") {
    EntropyEstimate e = estimate_bc_entropy_h1(0, 1, 1, 1000, 3);
    CHECK(e.value == 0);
    CHECK(e.std_error == 0);
    CHECK(e.distinct_neighborhoods == 1);
}

TEST_CASE("unmarked targets match the closed form") {
    for (double lambda : {0.25, 3.0}) {
        EntropyEstimate e = estimate_bc_entropy_h1(lambda, 1, 1, 200000, 5);
        CHECK(std::abs(e.value - unmarked_target(lambda)) < 0.02);
    }
    CHECK(unmarked_target(0.25) == doctest::Approx(0.4232868).epsilon(1e-6));
}

TEST_CASE("marked target: plug-in bias shrinks and error shrinks with samples") {
    CHECK(kMarkedTarget == doctest::Approx(2.4768).epsilon(1e-4));
    EntropyEstimate small = estimate_bc_entropy_h1(3, 2, 2, 10000, 7);
    EntropyEstimate mid = estimate_bc_entropy_h1(3, 2, 2, 100000, 7);
    EntropyEstimate big = estimate_bc_entropy_h1(3, 2, 2, 1000000, 7);
    // The plug-in estimator underestimates; the shortfall at 10^6 is about 0.1.
    CHECK(std::abs(big.value - kMarkedTarget) < 0.15);
    CHECK(std::abs(big.value - kMarkedTarget) < std::abs(mid.value - kMarkedTarget));
    CHECK(std::abs(mid.value - kMarkedTarget) < std::abs(small.value - kMarkedTarget));
    // Standard error scales like 1/sqrt(samples), up to the changing spread.
    CHECK(big.std_error < small.std_error / 5);
    CHECK(big.samples == 1000000);
}

TEST_CASE("independent seeds agree within three standard errors") {
    EntropyEstimate a = estimate_bc_entropy_h1(3, 2, 2, 200000, 11);
    EntropyEstimate b = estimate_bc_entropy_h1(3, 2, 2, 200000, 12);
    CHECK(std::abs(a.value - b.value) < 3 * std::hypot(a.std_error, b.std_error));
    EntropyEstimate c = estimate_bc_entropy_h1(3, 2, 2, 200000, 11);
    CHECK(c.value == a.value);
}

TEST_CASE("normalized length") {
    CHECK(normalized_length(0, 0, 5) == 0);
    // 10 bytes, 3 edges, 4 vertices: (80 ln 2 - 3 ln 4) / 4.
    CHECK(normalized_length(10, 3, 4) == doctest::Approx((80 * std::log(2.0) - 3 * std::log(4.0)) / 4));
}
