#include "lwcg/sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "lwcg/bipartite.hpp"

namespace lwcg {

void encode_sequence(BitWriter& out, const std::vector<uint64_t>& y) {
    if (y.empty()) throw std::invalid_argument("encode_sequence: empty sequence");
    const uint64_t K = 1 + *std::max_element(y.begin(), y.end());
    BipartiteInstance inst;
    inst.a.assign(y.size(), 1);
    inst.b.assign(K, 0);
    inst.adj.resize(y.size());
    for (size_t i = 0; i < y.size(); ++i) {
        ++inst.b[y[i]];
        inst.adj[i] = {1 + y[i]};
    }
    out.write_elias_delta(K);
    for (uint64_t bj : inst.b) out.write_elias_delta(1 + bj);
    out.write_elias_delta(Nat(b_encode(inst) + 1));
}

std::vector<uint64_t> decode_sequence(BitReader& in, uint64_t n) {
    if (n == 0) throw std::invalid_argument("decode_sequence: empty sequence");
    const uint64_t K = in.read_elias_delta_u64();
    // Every symbol below K costs at least one bit, so K beyond the stream is corrupt.
    if (K > in.bits_left()) throw StreamError("decode_sequence: alphabet larger than the stream");
    std::vector<uint64_t> b(K);
    uint64_t total = 0;
    for (uint64_t& bj : b) {
        bj = in.read_elias_delta_u64() - 1;
        total += bj;
    }
    if (total != n) throw StreamError("decode_sequence: frequencies do not sum to n");
    Nat f = in.read_elias_delta() - 1;
    std::vector<uint64_t> a(n, 1);
    auto adj = b_decode(f, a, b);
    std::vector<uint64_t> y(n);
    for (uint64_t i = 0; i < n; ++i) {
        if (adj[i].size() != 1) throw StreamError("decode_sequence: invalid codeword");
        y[i] = adj[i][0] - 1;
    }
    return y;
}

} // namespace lwcg
