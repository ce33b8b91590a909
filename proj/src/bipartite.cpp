#include "lwcg/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lwcg/combinatorics.hpp"
#include "lwcg/fenwick.hpp"

namespace lwcg {

namespace {

struct Partial {
    Nat N;
    Nat l;
};

void check_degrees(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    uint64_t sa = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t sb = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (sa != sb) throw std::invalid_argument("bipartite: left and right degree sums differ");
    for (uint64_t d : a)
        if (d > b.size()) throw std::invalid_argument("bipartite: left degree exceeds n_r");
    for (uint64_t d : b)
        if (d > a.size()) throw std::invalid_argument("bipartite: right degree exceeds n_l");
}

// r_{k+1,j} = (S_{k+1})_{S_{k+1} - S_{j+1}} / prod_{t=k+1}^{j} a_t!
Nat span_count(uint64_t s_from, uint64_t s_to, const std::vector<uint64_t>& a, uint64_t i, uint64_t j) {
    Nat num = compute_product(static_cast<int64_t>(s_from), s_from - s_to, 1);
    Nat den = prod_factorial(a, i, j);
    Nat q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// U holds the residual right degrees b(i) as a suffix-sum tree; both are shared
// across the whole recursion and mutated in place.
class Encoder {
public:
    Encoder(const BipartiteInstance& inst, const IntervalObserver& observer)
        : inst_(inst), observer_(observer), U_(inst.b), b_(inst.b) {}

    Partial run(uint64_t i, uint64_t j) {
        uint64_t s_i = observer_ ? static_cast<uint64_t>(U_.suffix_sum(1)) : 0;
        Partial out = i == j ? node(i) : split(i, j);
        if (observer_) {
            uint64_t s_j1 = static_cast<uint64_t>(U_.suffix_sum(1));
            observer_(i, j, out.N, out.l, span_count(s_i, s_j1, inst_.a, i, j));
        }
        return out;
    }

private:
    Partial node(uint64_t i) {
        const auto& gamma = inst_.adj[i - 1];
        const uint64_t a_i = inst_.a[i - 1];
        Partial p{Nat{0ul}, Nat{1ul}};
        for (uint64_t k = 1; k <= a_i; ++k) {
            uint64_t g = gamma[k - 1];
            Nat y = binomial(static_cast<uint64_t>(U_.suffix_sum(1 + g)), a_i - k + 1);
            p.N += p.l * y;
            p.l *= static_cast<unsigned long>(b_[g - 1]);
            U_.add(g, -1);
            --b_[g - 1];
        }
        return p;
    }

    Partial split(uint64_t i, uint64_t j) {
        uint64_t k = (i + j) / 2;
        Partial left = run(i, k);
        uint64_t s_k1 = static_cast<uint64_t>(U_.suffix_sum(1));
        Partial right = run(k + 1, j);
        uint64_t s_j1 = static_cast<uint64_t>(U_.suffix_sum(1));
        Nat r = span_count(s_k1, s_j1, inst_.a, k + 1, j);
        return {left.N * r + left.l * right.N, left.l * right.l};
    }

    const BipartiteInstance& inst_;
    const IntervalObserver& observer_;
    SuffixFenwick U_;
    std::vector<uint64_t> b_;
};

class Decoder {
public:
    Decoder(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b)
        : a_(a), U_(b), W_(a), b_(b), adj_(a.size()) {}

    Partial run(uint64_t i, uint64_t j, const Nat& Nt) {
        if (i == j) return node(i, Nt);
        uint64_t k = (i + j) / 2;
        uint64_t s_k1 = static_cast<uint64_t>(W_.suffix_sum(k + 1));
        uint64_t s_j1 = static_cast<uint64_t>(W_.suffix_sum(j + 1));
        Nat r = span_count(s_k1, s_j1, a_, k + 1, j);
        Nat Nt_left;
        mpz_fdiv_q(Nt_left.get_mpz_t(), Nt.get_mpz_t(), r.get_mpz_t());
        Partial left = run(i, k, Nt_left);
        Nat rest = Nt - left.N * r;
        Nat Nt_right;
        mpz_fdiv_q(Nt_right.get_mpz_t(), rest.get_mpz_t(), left.l.get_mpz_t());
        Partial right = run(k + 1, j, Nt_right);
        return {left.N * r + left.l * right.N, left.l * right.l};
    }

    std::vector<std::vector<uint64_t>> take() { return std::move(adj_); }

private:
    // gamma_k is the smallest right vertex whose tail count C(U.Sum(1 + v), q) fits in z.
    Partial node(uint64_t i, const Nat& Nt) {
        const uint64_t a_i = a_[i - 1];
        const uint64_t n_r = b_.size();
        auto& gamma = adj_[i - 1];
        Nat z = Nt;
        Partial p{Nat{0ul}, Nat{1ul}};
        for (uint64_t k = 1; k <= a_i; ++k) {
            uint64_t q = a_i - k + 1;
            uint64_t lo = k == 1 ? 1 : gamma.back() + 1, hi = n_r;
            if (lo > hi) throw std::invalid_argument("b_decode: invalid codeword");
            while (lo < hi) {
                uint64_t mid = (lo + hi) / 2;
                if (binomial(static_cast<uint64_t>(U_.suffix_sum(1 + mid)), q) <= z)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            uint64_t g = lo;
            if (b_[g - 1] == 0) throw std::invalid_argument("b_decode: invalid codeword");
            Nat y = binomial(static_cast<uint64_t>(U_.suffix_sum(1 + g)), q);
            Nat diff = z - y;
            mpz_fdiv_q_ui(z.get_mpz_t(), diff.get_mpz_t(), b_[g - 1]);
            p.N += p.l * y;
            p.l *= static_cast<unsigned long>(b_[g - 1]);
            U_.add(g, -1);
            --b_[g - 1];
            gamma.push_back(g);
        }
        return p;
    }

    const std::vector<uint64_t>& a_;
    SuffixFenwick U_;
    SuffixFenwick W_;
    std::vector<uint64_t> b_;
    std::vector<std::vector<uint64_t>> adj_;
};

} // namespace

RankResult b_encode_full(const BipartiteInstance& inst, const IntervalObserver& observer) {
    check_degrees(inst.a, inst.b);
    if (inst.adj.size() != inst.a.size()) throw std::invalid_argument("b_encode: adjacency size differs from n_l");
    std::vector<uint64_t> seen(inst.b.size(), 0);
    for (size_t i = 0; i < inst.adj.size(); ++i) {
        const auto& row = inst.adj[i];
        if (row.size() != inst.a[i]) throw std::invalid_argument("b_encode: adjacency does not match left degrees");
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 1 || row[k] > inst.b.size()) throw std::invalid_argument("b_encode: right vertex out of range");
            if (k > 0 && row[k] <= row[k - 1]) throw std::invalid_argument("b_encode: adjacency not strictly increasing");
            ++seen[row[k] - 1];
        }
    }
    if (seen != inst.b) throw std::invalid_argument("b_encode: adjacency does not match right degrees");

    const uint64_t n_l = inst.a.size();
    RankResult out{Nat{0ul}, Nat{0ul}, Nat{1ul}};
    if (n_l > 0) {
        Encoder enc(inst, observer);
        Partial p = enc.run(1, n_l);
        out.N = std::move(p.N);
        out.l = std::move(p.l);
    }
    if (inst.b.empty()) return out;
    out.f = ceil_div(out.N, prod_factorial(inst.b, 1, inst.b.size()));
    return out;
}

Nat b_encode(const BipartiteInstance& inst) { return b_encode_full(inst).f; }

std::vector<std::vector<uint64_t>> b_decode(const Nat& f, const std::vector<uint64_t>& a,
                                            const std::vector<uint64_t>& b) {
    check_degrees(a, b);
    if (a.empty()) return {};
    if (b.empty()) return std::vector<std::vector<uint64_t>>(a.size());
    Nat Nt = f * prod_factorial(b, 1, b.size());
    Decoder dec(a, b);
    dec.run(1, a.size(), Nt);
    return dec.take();
}

Nat b_count_oracle(const BipartiteInstance& inst) {
    check_degrees(inst.a, inst.b);
    const uint64_t S = std::accumulate(inst.a.begin(), inst.a.end(), uint64_t{0});
    if (S > 10) throw std::invalid_argument("b_count_oracle: instance too large to enumerate");
    const size_t n_l = inst.a.size(), n_r = inst.b.size();

    std::vector<uint64_t> target(n_l * n_r, 0);
    for (size_t i = 0; i < n_l; ++i)
        for (uint64_t g : inst.adj[i]) target[i * n_r + (g - 1)] = 1;

    // Right half-edges are labeled; each is assigned to a left vertex, with exactly
    // a_i of them going to left vertex i.
    std::vector<size_t> owner_of_half; // right vertex of each right half-edge
    for (size_t j = 0; j < n_r; ++j)
        for (uint64_t t = 0; t < inst.b[j]; ++t) owner_of_half.push_back(j);
    std::vector<size_t> word;
    for (size_t i = 0; i < n_l; ++i)
        for (uint64_t t = 0; t < inst.a[i]; ++t) word.push_back(i);

    Nat count{0ul};
    std::vector<uint64_t> A(n_l * n_r);
    do {
        std::fill(A.begin(), A.end(), 0);
        for (size_t h = 0; h < word.size(); ++h) ++A[word[h] * n_r + owner_of_half[h]];
        if (A < target) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

} // namespace lwcg
