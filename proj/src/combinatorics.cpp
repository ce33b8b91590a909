#include "lwcg/combinatorics.hpp"

#include <stdexcept>

namespace lwcg {

namespace {

// Below this many factors a left-to-right product is as fast as splitting.
constexpr uint64_t kSmallRun = 16;

Nat product_run(int64_t p, uint64_t k, uint64_t s) {
    if (k <= kSmallRun) {
        Nat acc{1ul};
        for (uint64_t t = 0; t < k; ++t)
            acc *= static_cast<unsigned long>(p - static_cast<int64_t>(t * s));
        return acc;
    }
    uint64_t half = k / 2;
    return product_run(p, half, s) * product_run(p - static_cast<int64_t>(half * s), k - half, s);
}

Nat product_run(const Nat& p, uint64_t k, uint64_t s) {
    if (p.fits_slong_p()) return product_run(p.get_si(), k, s);
    if (k == 1) return p;
    uint64_t half = k / 2;
    Nat rest = p - Nat(static_cast<unsigned long>(half)) * static_cast<unsigned long>(s);
    return product_run(p, half, s) * product_run(rest, k - half, s);
}

Nat prod_factorial_rec(const std::vector<uint64_t>& v, uint64_t i, uint64_t j) {
    if (i == j) return compute_product(static_cast<int64_t>(v[i - 1]), v[i - 1], 1);
    uint64_t m = (i + j) / 2;
    return prod_factorial_rec(v, i, m) * prod_factorial_rec(v, m + 1, j);
}

} // namespace

Nat compute_product(int64_t p, uint64_t k, uint64_t s) {
    if (k == 0) return Nat{1ul};
    __int128 last = static_cast<__int128>(p) - static_cast<__int128>(k - 1) * s;
    if (last <= 0) return Nat{0ul};
    return product_run(p, k, s);
}

Nat compute_product(const Nat& p, uint64_t k, uint64_t s) {
    if (k == 0) return Nat{1ul};
    if (p.fits_slong_p()) return compute_product(p.get_si(), k, s);
    Nat last = p - Nat(static_cast<unsigned long>(k - 1)) * static_cast<unsigned long>(s);
    if (last <= 0) return Nat{0ul};
    return product_run(p, k, s);
}

Nat prod_factorial(const std::vector<uint64_t>& v, uint64_t i, uint64_t j) {
    if (i < 1 || j > v.size() || i > j) throw std::out_of_range("prod_factorial: bad index range");
    return prod_factorial_rec(v, i, j);
}

Nat double_factorial_ratio(uint64_t s_hi, uint64_t s_lo) {
    if ((s_hi & 1) || (s_lo & 1)) throw std::invalid_argument("double_factorial_ratio: odd argument");
    if (s_lo > s_hi) throw std::invalid_argument("double_factorial_ratio: S_lo > S_hi");
    return compute_product(static_cast<int64_t>(s_hi) - 1, (s_hi - s_lo) / 2, 2);
}

Nat binomial(uint64_t n, uint64_t m) {
    if (m > n) return Nat{0ul};
    Nat num = compute_product(static_cast<int64_t>(n), m, 1);
    Nat den = compute_product(static_cast<int64_t>(m), m, 1);
    Nat q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Nat ceil_div(const Nat& a, const Nat& b) {
    Nat q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace lwcg
