#pragma once
// Edge-type labels by message passing with depth h and degree cap delta, plus the
// explicit-tree canonical form Lambda_k that the labels are equivalent to.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lwcg/graph.hpp"

namespace lwcg {

using Label = uint64_t;
using Sequence = std::vector<uint64_t>;

// Labels are 1..tcount. c[v][i] = (label of the message v -> gamma[v][i], label of the reverse message).
struct EdgeTypeTable {
    uint64_t tcount = 0;
    std::vector<uint8_t> t_is_star; // t_is_star[label - 1]
    std::vector<uint32_t> t_mark;   // t_mark[label - 1]
    std::vector<std::vector<std::pair<Label, Label>>> c;

    bool is_star(Label t) const { return t_is_star[t - 1] != 0; }
    uint32_t mark(Label t) const { return t_mark[t - 1]; }
};

// One round's dictionary. std::map orders keys lexicographically with a proper
// prefix ranking first, which is the order the wire format relies on.
struct MessageLabelState {
    std::map<Sequence, Label> dictionary;
    uint64_t tcount = 0;
    std::vector<uint8_t> t_is_star;
    std::vector<uint32_t> t_mark;

    void reset();
};

// t[0] == 0 marks a star message; the last element is always the edge mark.
Label send_message(MessageLabelState& state, const Sequence& t);

EdgeTypeTable extract_types(const NeighborListGraph& g, uint64_t h, uint64_t delta);

// Explicit rooted marked tree. For the edge between a node o and its child c,
// to_parent is the edge mark toward o and to_child the edge mark toward c.
struct MarkedTree {
    struct Child;
    uint32_t mark = 1;
    std::vector<Child> children;
};

struct MarkedTree::Child {
    uint32_t to_parent = 1;
    uint32_t to_child = 1;
    MarkedTree subtree;
};

// Canonical form of (x, tree) at depth k. Returns (0, x) when the root has at least
// delta children or any child's form is a star; children deeper than k are ignored.
Sequence lambda_canonical(uint64_t k, uint32_t x, const MarkedTree& tree, uint64_t delta);

// Depth-k unrolling of the universal cover of g at v, excluding the direction of
// `parent` (0 for none). Used by oracles and the entropy estimator.
MarkedTree unroll(const NeighborListGraph& g, uint64_t v, uint64_t parent, uint64_t depth);

} // namespace lwcg
