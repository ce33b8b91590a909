#pragma once
// The marked-graph compressor: edge types, star side channel, vertex types and
// one ranking codeword per partition graph, in a byte-padded bit stream.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lwcg/bitstream.hpp"
#include "lwcg/graph.hpp"
#include "lwcg/types.hpp"

namespace lwcg {

using TypePair = std::pair<Label, Label>;
// Deg_v: non-star incident edges of v counted per type pair (T toward the neighbor, T back).
using DegProfile = std::map<TypePair, uint64_t>;

// star[v] for v = 1..n (slot 0 unused): v has an incident star edge.
std::vector<uint8_t> find_star_vertices(const NeighborListGraph& g, const EdgeTypeTable& table);

void encode_star_edges(BitWriter& out, const NeighborListGraph& g, const EdgeTypeTable& table,
                       const std::vector<uint8_t>& star);
std::vector<EdgeRecord> decode_star_edges(BitReader& in, const std::vector<uint8_t>& star, uint64_t n,
                                          uint32_t sigma_e);

std::vector<DegProfile> find_deg(const NeighborListGraph& g, const EdgeTypeTable& table);

struct VertexTypes {
    std::map<Sequence, uint64_t> dictionary; // nu -> id, ids in first-seen order from 1
    std::vector<uint64_t> y;                 // y[v - 1]
};

// nu_v = (theta_v, then (i, i', count) for each entry of Deg_v in key order).
Sequence vertex_signature(uint32_t theta, const DegProfile& deg);
VertexTypes build_vertex_types(const std::vector<uint32_t>& theta, const std::vector<DegProfile>& deg);

struct FieldWidths {
    uint64_t n = 1;
    uint64_t delta = 1;
    uint32_t sigma_e = 1;
    uint32_t sigma_v = 1;
    uint64_t tcount = 0;
};

// theta and deg are indexed by vertex 1..n.
void encode_vertex_types(BitWriter& out, const std::vector<uint32_t>& theta, const std::vector<DegProfile>& deg,
                         const FieldWidths& w);
void decode_vertex_types(BitReader& in, const FieldWidths& w, std::vector<uint32_t>& theta,
                         std::vector<DegProfile>& deg);

struct PartitionTables {
    std::map<TypePair, std::vector<uint64_t>> partition_deg;
    // i < i': left-to-right adjacency of the bipartite graph; i == i': forward lists.
    std::map<TypePair, std::vector<std::vector<uint64_t>>> partition_adj;
    std::vector<std::map<TypePair, uint64_t>> partition_index; // per vertex, 1-based ranks
};

PartitionTables find_partition_graphs(const NeighborListGraph& g, const EdgeTypeTable& table,
                                      const std::vector<DegProfile>& deg);

struct DecodedPartitions {
    std::map<TypePair, std::vector<uint64_t>> partition_deg;
    std::map<TypePair, std::vector<uint64_t>> original_index; // p-th smallest vertex at [p - 1]
};

DecodedPartitions decode_partition_structures(const std::vector<DegProfile>& deg);

struct EncodeStats {
    uint64_t n = 0;
    uint64_t m = 0;
    uint64_t m_star = 0;
    uint64_t star_vertices = 0;
    uint64_t tcount = 0;
    uint64_t vertex_types = 0;
    uint64_t partition_count = 0;
    uint64_t bits_header = 0;
    uint64_t bits_types = 0;
    uint64_t bits_star = 0;
    uint64_t bits_vertex_types = 0;
    uint64_t bits_partitions = 0;
};

std::vector<uint8_t> encode_marked_graph(const EdgeListGraph& g, uint64_t h, uint64_t delta,
                                         EncodeStats* stats = nullptr);
// Throws StreamError on a bad header, truncation or inconsistent content.
EdgeListGraph decode_marked_graph(std::span<const uint8_t> bytes);

} // namespace lwcg
