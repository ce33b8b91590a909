#include "lwcg/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace lwcg {

void MessageLabelState::reset() {
    dictionary.clear();
    tcount = 0;
    t_is_star.clear();
    t_mark.clear();
}

Label send_message(MessageLabelState& state, const Sequence& t) {
    if (t.empty()) throw std::invalid_argument("send_message: empty message");
    auto [it, inserted] = state.dictionary.try_emplace(t, state.tcount + 1);
    if (inserted) {
        ++state.tcount;
        state.t_is_star.push_back(t.front() == 0 ? 1 : 0);
        state.t_mark.push_back(static_cast<uint32_t>(t.back()));
    }
    return it->second;
}

namespace {

using Slots = std::vector<std::vector<Label>>;

// Round k >= 1 at a vertex v with d_v <= delta. Incoming pairs are s_j = (label of
// gamma_j -> v, x_{v,j}); the message to slot i lists every s_j with j != i in sorted order.
void round_at_vertex(const NeighborListGraph& g, uint64_t v, const Slots& prev,
                     const std::vector<uint8_t>& prev_star, MessageLabelState& state, Slots& next) {
    const auto& gamma = g.gamma[v];
    const size_t d = gamma.size();
    std::vector<std::pair<Label, uint32_t>> s(d);
    size_t stars = 0, star_slot = 0;
    for (size_t j = 0; j < d; ++j) {
        Label in = prev[gamma[j]][g.gammat[v][j]];
        s[j] = {in, g.x[v][j]};
        if (prev_star[in - 1]) {
            ++stars;
            star_slot = j;
        }
    }
    std::vector<size_t> order(d);
    for (size_t j = 0; j < d; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return s[a] < s[b]; });

    auto full_message = [&](size_t i) {
        Sequence t;
        t.reserve(2 * d + 1);
        t.push_back(g.theta[v]);
        t.push_back(d - 1);
        for (size_t j : order)
            if (j != i) {
                t.push_back(s[j].first);
                t.push_back(s[j].second);
            }
        t.push_back(g.x[v][i]);
        return t;
    };

    for (size_t i = 0; i < d; ++i) {
        // A star input poisons every outgoing message except the one sent back along it.
        bool star = stars >= 2 || (stars == 1 && i != star_slot);
        next[v][i] = star ? send_message(state, {0, g.x[v][i]}) : send_message(state, full_message(i));
    }
}

} // namespace

EdgeTypeTable extract_types(const NeighborListGraph& g, uint64_t h, uint64_t delta) {
    if (h < 1) throw std::invalid_argument("extract_types: h must be at least 1");
    if (delta < 1) throw std::invalid_argument("extract_types: delta must be at least 1");
    const uint64_t n = g.n;

    Slots T(n + 1);
    for (uint64_t v = 1; v <= n; ++v) T[v].resize(g.deg(v));

    MessageLabelState state;
    for (uint64_t v = 1; v <= n; ++v)
        for (size_t i = 0; i < g.deg(v); ++i) T[v][i] = send_message(state, {g.theta[v], 0, g.x[v][i]});

    for (uint64_t k = 1; k < h; ++k) {
        Slots prev = T;
        std::vector<uint8_t> prev_star = state.t_is_star;
        state.reset();
        for (uint64_t v = 1; v <= n; ++v) {
            if (g.deg(v) > delta) {
                for (size_t i = 0; i < g.deg(v); ++i) T[v][i] = send_message(state, {0, g.x[v][i]});
            } else {
                round_at_vertex(g, v, prev, prev_star, state, T);
            }
        }
    }

    // Symmetrize: a directed edge keeps a non-star label only if its reverse does too
    // and neither endpoint exceeds the degree cap.
    for (uint64_t v = 1; v <= n; ++v)
        for (size_t i = 0; i < g.deg(v); ++i) {
            uint64_t w = g.gamma[v][i];
            Label mirror = T[w][g.gammat[v][i]];
            if (!state.t_is_star[T[v][i] - 1] &&
                (state.t_is_star[mirror - 1] || g.deg(v) > delta || g.deg(w) > delta))
                T[v][i] = send_message(state, {0, g.x[v][i]});
        }

    EdgeTypeTable table;
    table.tcount = state.tcount;
    table.t_is_star = std::move(state.t_is_star);
    table.t_mark = std::move(state.t_mark);
    table.c.resize(n + 1);
    for (uint64_t v = 1; v <= n; ++v) {
        table.c[v].resize(g.deg(v));
        for (size_t i = 0; i < g.deg(v); ++i) table.c[v][i] = {T[v][i], T[g.gamma[v][i]][g.gammat[v][i]]};
    }
    return table;
}

Sequence lambda_canonical(uint64_t k, uint32_t x, const MarkedTree& tree, uint64_t delta) {
    if (k == 0) return {tree.mark, 0, x};
    const Sequence star{0, x};
    if (tree.children.size() >= delta) return star;
    std::vector<Sequence> s;
    s.reserve(tree.children.size());
    for (const MarkedTree::Child& c : tree.children) {
        Sequence sub = lambda_canonical(k - 1, c.to_child, c.subtree, delta);
        if (sub.front() == 0) return star;
        sub.push_back(c.to_parent);
        s.push_back(std::move(sub));
    }
    std::sort(s.begin(), s.end());
    Sequence out{tree.mark, tree.children.size()};
    for (const Sequence& part : s) out.insert(out.end(), part.begin(), part.end());
    out.push_back(x);
    return out;
}

MarkedTree unroll(const NeighborListGraph& g, uint64_t v, uint64_t parent, uint64_t depth) {
    MarkedTree t;
    t.mark = g.theta[v];
    if (depth == 0) return t;
    for (size_t j = 0; j < g.deg(v); ++j) {
        uint64_t u = g.gamma[v][j];
        if (u == parent) continue;
        t.children.push_back({g.x[v][j], g.xp[v][j], unroll(g, u, v, depth - 1)});
    }
    return t;
}

} // namespace lwcg
