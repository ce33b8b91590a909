#include "lwcg/simple.hpp"

#include <bit>
#include <cmath>
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

uint64_t suffix(const SuffixFenwick& U, uint64_t k) { return static_cast<uint64_t>(U.suffix_sum(k)); }

// Shared mutable state: residual degrees ar and their suffix-sum tree U.
class Encoder {
public:
    Encoder(const SimpleInstance& inst, const IntervalObserver& observer)
        : inst_(inst), observer_(observer), n_(inst.a.size()), threshold_(checkpoint_threshold(n_)),
          U_(inst.a), ar_(inst.a), checkpoints_(checkpoint_length(n_), 0) {}

    Partial run(uint64_t i, uint64_t j, uint64_t index) {
        uint64_t s_i = observer_ ? suffix(U_, i) : 0;
        Partial out = i == j ? node(i) : split(i, j, index);
        if (observer_) observer_(i, j, out.N, out.l, double_factorial_ratio(s_i, suffix(U_, j + 1)));
        return out;
    }

    Checkpoints take_checkpoints() { return std::move(checkpoints_); }

private:
    Partial node(uint64_t i) {
        const auto& gamma = inst_.fwd[i - 1];
        const uint64_t a_hat = gamma.size();
        if (ar_[i - 1] != a_hat) throw std::invalid_argument("s_encode: forward lists do not match degrees");
        Partial p{Nat{0ul}, Nat{1ul}};
        for (uint64_t k = 1; k <= a_hat; ++k) {
            uint64_t g = gamma[k - 1];
            uint64_t q = a_hat - k + 1;
            if (ar_[g - 1] == 0) throw std::invalid_argument("s_encode: forward lists do not match degrees");
            Nat y = compute_product(static_cast<int64_t>(suffix(U_, 1 + g)), q, 1);
            p.N += p.l * y;
            p.l *= static_cast<unsigned long>(q);
            p.l *= static_cast<unsigned long>(ar_[g - 1]);
            --ar_[g - 1];
            U_.add(g, -1);
        }
        return p;
    }

    Partial split(uint64_t i, uint64_t j, uint64_t index) {
        uint64_t k = (i + j) / 2;
        Partial left = run(i, k, 2 * index);
        uint64_t s_k1 = suffix(U_, k + 1);
        if (j - i + 1 > threshold_) {
            if (index > checkpoints_.size()) throw std::logic_error("s_encode: checkpoint index exceeds array length");
            checkpoints_[index - 1] = s_k1;
        }
        Partial right = run(k + 1, j, 2 * index + 1);
        uint64_t s_j1 = suffix(U_, j + 1);
        Nat r = double_factorial_ratio(s_k1, s_j1);
        return {left.N * r + left.l * right.N, left.l * right.l};
    }

    const SimpleInstance& inst_;
    const IntervalObserver& observer_;
    uint64_t n_;
    uint64_t threshold_;
    SuffixFenwick U_;
    std::vector<uint64_t> ar_;
    Checkpoints checkpoints_;
};

class Decoder {
public:
    Decoder(const std::vector<uint64_t>& a, const Checkpoints& checkpoints)
        : n_(a.size()), threshold_(checkpoint_threshold(n_)), checkpoints_(checkpoints), U_(a), ar_(a),
          fwd_(a.size()) {}

    // index is meaningful only on intervals longer than the threshold; every
    // descendant of a short interval is short, so they receive 0.
    Partial run(uint64_t i, uint64_t j, const Nat& Nt, uint64_t index, uint64_t s_j1) {
        if (i == j) return node(i, Nt);
        uint64_t k, s_k1;
        bool long_interval = j - i + 1 > threshold_;
        if (long_interval) {
            k = (i + j) / 2;
            if (index < 1 || index > checkpoints_.size()) throw std::invalid_argument("s_decode: checkpoint array too short");
            s_k1 = checkpoints_[index - 1];
        } else {
            k = i;
            uint64_t total = suffix(U_, i);
            if (total < 2 * ar_[i - 1]) throw std::invalid_argument("s_decode: invalid codeword");
            s_k1 = total - 2 * ar_[i - 1];
        }
        if (s_k1 < s_j1 || (s_k1 & 1) || (s_j1 & 1)) throw std::invalid_argument("s_decode: invalid checkpoint");
        Nat r = double_factorial_ratio(s_k1, s_j1);
        Nat Nt_left;
        mpz_fdiv_q(Nt_left.get_mpz_t(), Nt.get_mpz_t(), r.get_mpz_t());
        Partial left = run(i, k, Nt_left, long_interval ? 2 * index : 0, s_k1);
        Nat rest = Nt - left.N * r;
        Nat Nt_right;
        mpz_fdiv_q(Nt_right.get_mpz_t(), rest.get_mpz_t(), left.l.get_mpz_t());
        Partial right = run(k + 1, j, Nt_right, long_interval ? 2 * index + 1 : 0, s_j1);
        return {left.N * r + left.l * right.N, left.l * right.l};
    }

    std::vector<std::vector<uint64_t>> take() { return std::move(fwd_); }

private:
    Partial node(uint64_t i, const Nat& Nt) {
        const uint64_t a_hat = ar_[i - 1];
        auto& gamma = fwd_[i - 1];
        Nat z = Nt;
        Partial p{Nat{0ul}, Nat{1ul}};
        for (uint64_t k = 1; k <= a_hat; ++k) {
            uint64_t q = a_hat - k + 1;
            uint64_t lo = k == 1 ? i + 1 : gamma.back() + 1, hi = n_;
            if (lo > hi) throw std::invalid_argument("s_decode: invalid codeword");
            while (lo < hi) {
                uint64_t mid = (lo + hi) / 2;
                if (compute_product(static_cast<int64_t>(suffix(U_, 1 + mid)), q, 1) <= z)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            uint64_t g = lo;
            if (ar_[g - 1] == 0) throw std::invalid_argument("s_decode: invalid codeword");
            Nat y = compute_product(static_cast<int64_t>(suffix(U_, 1 + g)), q, 1);
            Nat c{static_cast<unsigned long>(q)};
            c *= static_cast<unsigned long>(ar_[g - 1]);
            Nat diff = z - y;
            mpz_fdiv_q(z.get_mpz_t(), diff.get_mpz_t(), c.get_mpz_t());
            p.N += p.l * y;
            p.l *= c;
            --ar_[g - 1];
            U_.add(g, -1);
            gamma.push_back(g);
        }
        return p;
    }

    uint64_t n_;
    uint64_t threshold_;
    const Checkpoints& checkpoints_;
    SuffixFenwick U_;
    std::vector<uint64_t> ar_;
    std::vector<std::vector<uint64_t>> fwd_;
};

void check_instance(const SimpleInstance& inst) {
    const uint64_t n = inst.a.size();
    if (n < 2) throw std::invalid_argument("simple codec: need at least 2 vertices");
    if (inst.fwd.size() != n) throw std::invalid_argument("s_encode: forward list count differs from n");
    std::vector<uint64_t> deg(n, 0);
    for (uint64_t v = 1; v <= n; ++v) {
        const auto& row = inst.fwd[v - 1];
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k] <= v || row[k] > n) throw std::invalid_argument("s_encode: forward neighbor out of range");
            if (k > 0 && row[k] <= row[k - 1]) throw std::invalid_argument("s_encode: forward list not strictly increasing");
            ++deg[v - 1];
            ++deg[row[k] - 1];
        }
    }
    if (deg != inst.a) throw std::invalid_argument("s_encode: forward lists do not match degrees");
}

} // namespace

uint64_t checkpoint_threshold(uint64_t n) {
    uint64_t lg = std::bit_width(n) - 1;
    return lg * lg;
}

uint64_t checkpoint_length(uint64_t n) {
    double ln = std::log(static_cast<double>(n));
    return static_cast<uint64_t>(std::floor(16.0 * static_cast<double>(n) / (ln * ln)));
}

SimpleRank s_encode_full(const SimpleInstance& inst, const IntervalObserver& observer) {
    check_instance(inst);
    Encoder enc(inst, observer);
    Partial p = enc.run(1, inst.a.size(), 1);
    SimpleRank out;
    out.f = ceil_div(p.N, prod_factorial(inst.a, 1, inst.a.size()));
    out.N = std::move(p.N);
    out.l = std::move(p.l);
    out.checkpoints = enc.take_checkpoints();
    return out;
}

std::vector<std::vector<uint64_t>> s_decode(const Nat& f, const Checkpoints& checkpoints,
                                            const std::vector<uint64_t>& a) {
    if (a.size() < 2) throw std::invalid_argument("simple codec: need at least 2 vertices");
    uint64_t S = std::accumulate(a.begin(), a.end(), uint64_t{0});
    if (S & 1) throw std::invalid_argument("s_decode: odd degree sum");
    Nat Nt = f * prod_factorial(a, 1, a.size());
    Decoder dec(a, checkpoints);
    dec.run(1, a.size(), Nt, 1, 0);
    return dec.take();
}

Nat s_count_oracle(const SimpleInstance& inst) {
    check_instance(inst);
    const size_t n = inst.a.size();
    const uint64_t S = std::accumulate(inst.a.begin(), inst.a.end(), uint64_t{0});
    if (S > 10) throw std::invalid_argument("s_count_oracle: instance too large to enumerate");

    std::vector<uint64_t> target(n * n, 0);
    for (size_t v = 0; v < n; ++v)
        for (uint64_t w : inst.fwd[v]) {
            target[v * n + (w - 1)] = 1;
            target[(w - 1) * n + v] = 1;
        }
    std::vector<size_t> owner;
    for (size_t v = 0; v < n; ++v)
        for (uint64_t t = 0; t < inst.a[v]; ++t) owner.push_back(v);

    // Enumerate perfect matchings of labeled half-edges; a loop adds 2 on the diagonal.
    Nat count{0ul};
    std::vector<uint8_t> used(S, 0);
    std::vector<uint64_t> A(n * n, 0);
    auto rec = [&](auto&& self) -> void {
        size_t first = 0;
        while (first < S && used[first]) ++first;
        if (first == S) {
            if (A < target) ++count;
            return;
        }
        used[first] = 1;
        for (size_t other = first + 1; other < S; ++other) {
            if (used[other]) continue;
            used[other] = 1;
            size_t u = owner[first], w = owner[other];
            ++A[u * n + w];
            ++A[w * n + u];
            self(self);
            --A[u * n + w];
            --A[w * n + u];
            used[other] = 0;
        }
        used[first] = 0;
    };
    rec(rec);
    return count;
}

} // namespace lwcg
