#include "lwcg/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "lwcg/types.hpp"

namespace lwcg {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Accept only draws below the largest multiple of bound, so every residue is equally likely.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do r = rng();
    while (r >= limit);
    return r % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

uint64_t sample_poisson(std::mt19937_64& rng, double lambda) {
    if (!(lambda >= 0) || lambda > 700) throw std::invalid_argument("sample_poisson: lambda must be in [0, 700]");
    double u = uniform_unit(rng);
    double p = std::exp(-lambda);
    double cdf = p;
    uint64_t k = 0;
    // The cap guards against u landing above the floating-point CDF's limit.
    while (u >= cdf && k < 100000) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

EdgeListGraph generate_synthetic(uint64_t n, double lambda, uint32_t sigma_e, uint32_t sigma_v, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen: n must be at least 2");
    if (!(lambda > 0)) throw std::invalid_argument("gen: lambda must be positive");
    if (sigma_e < 1 || sigma_v < 1) throw std::invalid_argument("gen: alphabet sizes must be at least 1");
    std::mt19937_64 rng(seed);

    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    std::unordered_set<uint64_t> chosen;
    for (uint64_t v = 1; v <= n; ++v) {
        uint64_t d = std::min<uint64_t>(sample_poisson(rng, lambda), n - 1);
        chosen.clear();
        while (chosen.size() < d) {
            // Uniform over [n] \ {v}: draw from n - 1 values and skip v.
            uint64_t w = 1 + uniform_below(rng, n - 1);
            if (w >= v) ++w;
            if (chosen.insert(w).second) pairs.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    EdgeListGraph g;
    g.n = n;
    g.sigma_e = sigma_e;
    g.sigma_v = sigma_v;
    g.theta.resize(n);
    for (uint32_t& t : g.theta) t = static_cast<uint32_t>(1 + uniform_below(rng, sigma_v));
    g.edges.reserve(pairs.size());
    for (const auto& [v, w] : pairs) {
        uint32_t x = static_cast<uint32_t>(1 + uniform_below(rng, sigma_e));
        uint32_t xp = static_cast<uint32_t>(1 + uniform_below(rng, sigma_e));
        g.edges.push_back({v, w, x, xp});
    }
    return g;
}

EntropyEstimate estimate_bc_entropy_h1(double lambda, uint32_t sigma_e, uint32_t sigma_v, uint64_t samples,
                                       uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("entropy: need at least 2 samples");
    if (!(lambda >= 0)) throw std::invalid_argument("entropy: lambda must be nonnegative");
    std::mt19937_64 rng(seed);
    const uint64_t edge_kinds = static_cast<uint64_t>(sigma_e) * sigma_v;

    std::map<Sequence, uint64_t> key_count;
    std::vector<const Sequence*> key_of(samples);
    std::vector<uint64_t> degree(samples);
    std::vector<double> log_fact_sum(samples);
    std::vector<uint64_t> offset(samples + 1, 0);
    std::vector<std::pair<uint64_t, uint64_t>> pair_counts; // (edge-type pair index, E(t, t'))
    std::map<uint64_t, double> pooled;                       // edge-type pair -> total count

    MarkedTree tree;
    std::vector<uint64_t> kinds;
    for (uint64_t s = 0; s < samples; ++s) {
        tree.mark = static_cast<uint32_t>(1 + uniform_below(rng, sigma_v));
        const uint64_t D = sample_poisson(rng, 2 * lambda);
        tree.children.resize(D);
        kinds.resize(D);
        for (uint64_t c = 0; c < D; ++c) {
            auto& child = tree.children[c];
            child.to_parent = static_cast<uint32_t>(1 + uniform_below(rng, sigma_e));
            child.to_child = static_cast<uint32_t>(1 + uniform_below(rng, sigma_e));
            child.subtree.mark = static_cast<uint32_t>(1 + uniform_below(rng, sigma_v));
            // t = (mark toward the root, root mark), t' = (mark toward the child, child mark).
            uint64_t t = (child.to_parent - 1) * sigma_v + (tree.mark - 1);
            uint64_t tp = (child.to_child - 1) * sigma_v + (child.subtree.mark - 1);
            kinds[c] = t * edge_kinds + tp;
        }
        // A degree cap above D keeps every neighborhood non-star.
        auto it = key_count.try_emplace(lambda_canonical(1, 1, tree, D + 1), 0).first;
        ++it->second;
        key_of[s] = &it->first;
        degree[s] = D;

        std::sort(kinds.begin(), kinds.end());
        double lf = 0;
        for (size_t a = 0; a < kinds.size();) {
            size_t b = a;
            while (b < kinds.size() && kinds[b] == kinds[a]) ++b;
            uint64_t count = b - a;
            lf += std::lgamma(static_cast<double>(count) + 1);
            pair_counts.emplace_back(kinds[a], count);
            pooled[kinds[a]] += static_cast<double>(count);
            a = b;
        }
        log_fact_sum[s] = lf;
        offset[s + 1] = pair_counts.size();
    }

    const double N = static_cast<double>(samples);
    double d_sum = 0, e_sum = 0;
    for (uint64_t s = 0; s < samples; ++s) {
        d_sum += static_cast<double>(degree[s]);
        e_sum += log_fact_sum[s];
    }
    const double d_bar = d_sum / N;
    const double e_bar = e_sum / N;

    double H = 0;
    std::map<const Sequence*, double> log_p;
    for (const auto& [key, count] : key_count) {
        double p = static_cast<double>(count) / N;
        H -= p * std::log(p);
        log_p[&key] = std::log(p);
    }

    double H_pi = 0, mean_log_pi = 0; // mean_log_pi = sum_tt' ln(pi) * E[c_tt']
    std::map<uint64_t, double> log_pi;
    if (d_sum > 0)
        for (const auto& [kind, total] : pooled) {
            double pi = total / d_sum;
            H_pi -= pi * std::log(pi);
            log_pi[kind] = std::log(pi);
            mean_log_pi += std::log(pi) * total / N;
        }

    const double s_d = d_bar > 0 ? d_bar / 2 - d_bar / 2 * std::log(d_bar) : 0.0;
    EntropyEstimate out;
    out.value = -s_d + H - d_bar / 2 * H_pi - e_bar;
    out.samples = samples;
    out.distinct_neighborhoods = key_count.size();

    // Delta-method influence of each sample on the estimate.
    double if_sum = 0, if_sq = 0;
    for (uint64_t s = 0; s < samples; ++s) {
        double v = -log_p[key_of[s]] - H;
        v -= log_fact_sum[s] - e_bar;
        if (d_bar > 0) {
            v += 0.5 * std::log(d_bar) * (static_cast<double>(degree[s]) - d_bar);
            double lp = 0;
            for (uint64_t k = offset[s]; k < offset[s + 1]; ++k)
                lp += log_pi[pair_counts[k].first] * static_cast<double>(pair_counts[k].second);
            v += 0.5 * (lp - mean_log_pi);
        }
        if_sum += v;
        if_sq += v * v;
    }
    double mean = if_sum / N;
    double var = std::max(0.0, (if_sq - N * mean * mean) / (N - 1));
    out.std_error = std::sqrt(var / N);
    return out;
}

double normalized_length(uint64_t bytes, uint64_t m, uint64_t n) {
    return (std::log(2.0) * 8.0 * static_cast<double>(bytes) - static_cast<double>(m) * std::log(static_cast<double>(n))) /
           static_cast<double>(n);
}

} // namespace lwcg
