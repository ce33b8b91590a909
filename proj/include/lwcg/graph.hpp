#pragma once
// Simple marked graphs: the external edge-list form and the neighbor-list form
// consumed by the codecs. Vertices and marks are 1-based.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwcg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x is the mark toward v, xp the mark toward w.
struct EdgeRecord {
    uint64_t v = 0;
    uint64_t w = 0;
    uint32_t x = 0;
    uint32_t xp = 0;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct EdgeListGraph {
    uint64_t n = 0;
    uint32_t sigma_v = 1; // |Theta|
    uint32_t sigma_e = 1; // |Xi|
    std::vector<uint32_t> theta; // theta[v - 1] is the mark of vertex v
    std::vector<EdgeRecord> edges;

    friend bool operator==(const EdgeListGraph&, const EdgeListGraph&) = default;
};

// Neighbor lists are indexed by vertex 1..n (slot 0 unused). Within a list,
// positions ("slots") are 0-based.
struct NeighborListGraph {
    uint64_t n = 0;
    uint32_t sigma_v = 1;
    uint32_t sigma_e = 1;
    std::vector<uint32_t> theta;                 // theta[v]
    std::vector<std::vector<uint64_t>> gamma;    // strictly increasing neighbors of v
    std::vector<std::vector<uint32_t>> x;        // mark toward v on edge (v, gamma[v][i])
    std::vector<std::vector<uint32_t>> xp;       // mark toward gamma[v][i]
    std::vector<std::vector<uint32_t>> gammat;   // gamma[gamma[v][i]][gammat[v][i]] == v

    uint64_t deg(uint64_t v) const { return gamma[v].size(); }
    uint64_t edge_count() const;
};

// Throws ParseError naming the offending line.
EdgeListGraph parse_edge_list(std::string_view text);
// Same checks on an in-memory graph; the message names the edge record (1-based).
void validate(const EdgeListGraph& g);

std::string format_edge_list(const EdgeListGraph& g);

NeighborListGraph preprocess(const EdgeListGraph& g);

// Records oriented v < w and sorted by (v, w).
EdgeListGraph canonical(const EdgeListGraph& g);
EdgeListGraph to_edge_list(const NeighborListGraph& g);

bool same_graph(const EdgeListGraph& a, const EdgeListGraph& b);

} // namespace lwcg
