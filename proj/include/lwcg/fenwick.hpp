#pragma once

#include <cstdint>
#include <vector>

namespace lwcg {

// Fenwick tree answering suffix sums sum_{i >= k} a_i over a 1-based array a_1..a_n.
// Position k is stored at reversed slot n - k + 1, so a suffix query is a prefix
// query on the reversed array.
class SuffixFenwick {
public:
    SuffixFenwick() = default;
    explicit SuffixFenwick(const std::vector<int64_t>& a);
    explicit SuffixFenwick(const std::vector<uint64_t>& a);

    void add(uint64_t k, int64_t c);
    // 0 for k > n. Requires k >= 1.
    int64_t suffix_sum(uint64_t k) const;
    uint64_t size() const { return n_; }

private:
    void build(std::vector<int64_t> rev);

    uint64_t n_ = 0;
    std::vector<int64_t> tree_; // 1-based, over reversed positions
};

} // namespace lwcg
