#include "lwcg/fenwick.hpp"

#include <stdexcept>

namespace lwcg {

SuffixFenwick::SuffixFenwick(const std::vector<int64_t>& a) {
    build(std::vector<int64_t>(a.rbegin(), a.rend()));
}

SuffixFenwick::SuffixFenwick(const std::vector<uint64_t>& a) {
    std::vector<int64_t> rev(a.size());
    for (size_t i = 0; i < a.size(); ++i) rev[i] = static_cast<int64_t>(a[a.size() - 1 - i]);
    build(std::move(rev));
}

// Linear-time construction: push each node's total to its parent once.
void SuffixFenwick::build(std::vector<int64_t> rev) {
    n_ = rev.size();
    tree_.assign(n_ + 1, 0);
    for (uint64_t r = 1; r <= n_; ++r) {
        tree_[r] += rev[r - 1];
        uint64_t parent = r + (r & (~r + 1));
        if (parent <= n_) tree_[parent] += tree_[r];
    }
}

void SuffixFenwick::add(uint64_t k, int64_t c) {
    if (k < 1 || k > n_) throw std::out_of_range("SuffixFenwick::add: index out of range");
    for (uint64_t r = n_ - k + 1; r <= n_; r += r & (~r + 1)) tree_[r] += c;
}

int64_t SuffixFenwick::suffix_sum(uint64_t k) const {
    if (k < 1) throw std::out_of_range("SuffixFenwick::suffix_sum: index must be >= 1");
    if (k > n_) return 0;
    int64_t s = 0;
    for (uint64_t r = n_ - k + 1; r > 0; r -= r & (~r + 1)) s += tree_[r];
    return s;
}

} // namespace lwcg
