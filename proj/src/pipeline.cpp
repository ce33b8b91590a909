#include "lwcg/pipeline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lwcg/bipartite.hpp"
#include "lwcg/sequence.hpp"
#include "lwcg/simple.hpp"

namespace lwcg {

namespace {

constexpr std::array<uint8_t, 4> kMagic{'L', 'W', 'C', 'G'};
constexpr uint8_t kVersion = 0x01;
// Decoder-side sanity bounds on header fields; larger values mean a corrupt stream.
constexpr uint64_t kMaxVertices = uint64_t{1} << 32;
constexpr uint64_t kMaxAlphabet = UINT32_MAX;

uint64_t read_u64_checked(BitReader& in, uint64_t limit, const char* what) {
    uint64_t v = in.read_elias_delta_u64();
    if (v > limit) throw StreamError(std::string("decode: ") + what + " out of range");
    return v;
}

void require(bool ok, const char* what) {
    if (!ok) throw StreamError(std::string("decode: ") + what);
}

uint64_t element_width(const FieldWidths& w) {
    return width(std::max<uint64_t>({w.sigma_e, w.sigma_v, w.tcount, w.delta}));
}

} // namespace

std::vector<uint8_t> find_star_vertices(const NeighborListGraph& g, const EdgeTypeTable& table) {
    std::vector<uint8_t> star(g.n + 1, 0);
    for (uint64_t v = 1; v <= g.n; ++v)
        for (const auto& [t, tp] : table.c[v])
            if (table.is_star(t) || table.is_star(tp)) {
                star[v] = 1;
                break;
            }
    return star;
}

void encode_star_edges(BitWriter& out, const NeighborListGraph& g, const EdgeTypeTable& table,
                       const std::vector<uint8_t>& star) {
    std::vector<uint64_t> star_list;
    for (uint64_t v = 1; v <= g.n; ++v)
        if (star[v]) star_list.push_back(v);
    if (star_list.empty()) return;
    const unsigned wn = width(g.n);
    for (uint32_t x = 1; x <= g.sigma_e; ++x)
        for (uint32_t xp = 1; xp <= g.sigma_e; ++xp)
            for (uint64_t v : star_list) {
                for (size_t i = 0; i < g.deg(v); ++i) {
                    uint64_t w = g.gamma[v][i];
                    if (w > v && table.is_star(table.c[v][i].first) && g.x[v][i] == x && g.xp[v][i] == xp) {
                        out.write_bit(true);
                        out.write_fixed(w, wn);
                    }
                }
                out.write_bit(false);
            }
}

std::vector<EdgeRecord> decode_star_edges(BitReader& in, const std::vector<uint8_t>& star, uint64_t n,
                                          uint32_t sigma_e) {
    std::vector<uint64_t> star_list;
    for (uint64_t v = 1; v <= n; ++v)
        if (star[v]) star_list.push_back(v);
    std::vector<EdgeRecord> edges;
    if (star_list.empty()) return edges;
    const unsigned wn = width(n);
    for (uint32_t x = 1; x <= sigma_e; ++x)
        for (uint32_t xp = 1; xp <= sigma_e; ++xp)
            for (uint64_t v : star_list)
                while (in.read_bit()) {
                    uint64_t w = in.read_fixed(wn);
                    require(w > v && w <= n, "star edge endpoint out of range");
                    require(star[w] != 0, "star edge endpoint is not a star vertex");
                    edges.push_back({v, w, x, xp});
                }
    return edges;
}

std::vector<DegProfile> find_deg(const NeighborListGraph& g, const EdgeTypeTable& table) {
    std::vector<DegProfile> deg(g.n + 1);
    for (uint64_t v = 1; v <= g.n; ++v)
        for (const TypePair& c : table.c[v])
            if (!table.is_star(c.first)) ++deg[v][c];
    return deg;
}

Sequence vertex_signature(uint32_t theta, const DegProfile& deg) {
    Sequence nu{theta};
    for (const auto& [key, count] : deg) {
        nu.push_back(key.first);
        nu.push_back(key.second);
        nu.push_back(count);
    }
    return nu;
}

VertexTypes build_vertex_types(const std::vector<uint32_t>& theta, const std::vector<DegProfile>& deg) {
    VertexTypes out;
    const uint64_t n = deg.size() - 1;
    out.y.resize(n);
    for (uint64_t v = 1; v <= n; ++v) {
        auto [it, inserted] = out.dictionary.try_emplace(vertex_signature(theta[v], deg[v]), out.dictionary.size() + 1);
        out.y[v - 1] = it->second;
    }
    return out;
}

void encode_vertex_types(BitWriter& out, const std::vector<uint32_t>& theta, const std::vector<DegProfile>& deg,
                         const FieldWidths& w) {
    VertexTypes types = build_vertex_types(theta, deg);
    const unsigned wn = width(w.n);
    const unsigned wsize = width(1 + 3 * w.delta);
    const unsigned welem = static_cast<unsigned>(element_width(w));
    out.write_fixed(types.dictionary.size(), wn);
    for (const auto& [nu, id] : types.dictionary) {
        out.write_fixed(nu.size(), wsize);
        for (uint64_t e : nu) out.write_fixed(e, welem);
        out.write_fixed(id, wn);
    }
    encode_sequence(out, types.y);
}

void decode_vertex_types(BitReader& in, const FieldWidths& w, std::vector<uint32_t>& theta,
                         std::vector<DegProfile>& deg) {
    const unsigned wn = width(w.n);
    const unsigned wsize = width(1 + 3 * w.delta);
    const unsigned welem = static_cast<unsigned>(element_width(w));
    const uint64_t k = in.read_fixed(wn);
    require(k >= 1 && k <= w.n, "vertex type count out of range");

    std::vector<Sequence> by_id(k + 1);
    for (uint64_t e = 0; e < k; ++e) {
        uint64_t size = in.read_fixed(wsize);
        require(size >= 1 && size % 3 == 1 && size <= 1 + 3 * w.delta, "vertex signature size invalid");
        Sequence nu(size);
        for (uint64_t& x : nu) x = in.read_fixed(welem);
        uint64_t id = in.read_fixed(wn);
        require(id >= 1 && id <= k && by_id[id].empty(), "vertex type id invalid");
        by_id[id] = std::move(nu);
    }

    std::vector<uint64_t> y = decode_sequence(in, w.n);
    theta.assign(w.n + 1, 0);
    deg.assign(w.n + 1, {});
    for (uint64_t v = 1; v <= w.n; ++v) {
        require(y[v - 1] >= 1 && y[v - 1] <= k, "vertex type index out of range");
        const Sequence& nu = by_id[y[v - 1]];
        require(nu[0] >= 1 && nu[0] <= w.sigma_v, "vertex mark out of range");
        theta[v] = static_cast<uint32_t>(nu[0]);
        for (size_t p = 1; p + 2 < nu.size(); p += 3) {
            require(nu[p] >= 1 && nu[p] <= w.tcount && nu[p + 1] >= 1 && nu[p + 1] <= w.tcount,
                    "vertex profile label out of range");
            require(nu[p + 2] >= 1, "vertex profile count is zero");
            deg[v][{nu[p], nu[p + 1]}] = nu[p + 2];
        }
    }
}

PartitionTables find_partition_graphs(const NeighborListGraph& g, const EdgeTypeTable& table,
                                      const std::vector<DegProfile>& deg) {
    PartitionTables out;
    out.partition_index.resize(g.n + 1);
    for (uint64_t v = 1; v <= g.n; ++v)
        for (const auto& [key, count] : deg[v]) {
            auto& list = out.partition_deg[key];
            list.push_back(count);
            out.partition_index[v][key] = list.size();
        }
    for (const auto& [key, list] : out.partition_deg)
        if (key.first <= key.second) out.partition_adj[key].resize(list.size());

    for (uint64_t v = 1; v <= g.n; ++v)
        for (size_t j = 0; j < g.deg(v); ++j) {
            const TypePair& c = table.c[v][j];
            if (table.is_star(c.first) || c.first > c.second) continue;
            uint64_t w = g.gamma[v][j];
            uint64_t p = out.partition_index[v].at(c);
            uint64_t q = out.partition_index[w].at({c.second, c.first});
            if (c.first < c.second || q > p) out.partition_adj[c][p - 1].push_back(q);
        }
    return out;
}

DecodedPartitions decode_partition_structures(const std::vector<DegProfile>& deg) {
    DecodedPartitions out;
    for (uint64_t v = 1; v < deg.size(); ++v)
        for (const auto& [key, count] : deg[v]) {
            out.partition_deg[key].push_back(count);
            out.original_index[key].push_back(v);
        }
    return out;
}

std::vector<uint8_t> encode_marked_graph(const EdgeListGraph& input, uint64_t h, uint64_t delta, EncodeStats* stats) {
    if (h < 1) throw std::invalid_argument("encode: h must be at least 1");
    if (delta < 1) throw std::invalid_argument("encode: delta must be at least 1");
    validate(input);
    const NeighborListGraph g = preprocess(input);
    const EdgeTypeTable table = extract_types(g, h, delta);

    EncodeStats st;
    st.n = g.n;
    st.m = input.edges.size();
    st.tcount = table.tcount;

    BitWriter out;
    for (uint8_t c : kMagic) out.write_fixed(c, 8);
    out.write_fixed(kVersion, 8);
    out.write_elias_delta(g.n);
    out.write_elias_delta(uint64_t{g.sigma_e});
    out.write_elias_delta(uint64_t{g.sigma_v});
    out.write_elias_delta(h);
    out.write_elias_delta(delta);
    st.bits_header = out.bit_count();

    out.write_elias_delta(1 + table.tcount);
    const unsigned wx = width(g.sigma_e);
    for (Label t = 1; t <= table.tcount; ++t) {
        out.write_bit(table.is_star(t));
        out.write_fixed(table.mark(t), wx);
    }
    st.bits_types = out.bit_count() - st.bits_header;

    const std::vector<uint8_t> star = find_star_vertices(g, table);
    encode_sequence(out, std::vector<uint64_t>(star.begin() + 1, star.end()));
    encode_star_edges(out, g, table, star);
    st.bits_star = out.bit_count() - st.bits_header - st.bits_types;
    for (uint64_t v = 1; v <= g.n; ++v) {
        st.star_vertices += star[v];
        for (size_t i = 0; i < g.deg(v); ++i)
            if (g.gamma[v][i] > v && table.is_star(table.c[v][i].first)) ++st.m_star;
    }

    const std::vector<DegProfile> deg = find_deg(g, table);
    const FieldWidths widths{g.n, delta, g.sigma_e, g.sigma_v, table.tcount};
    uint64_t mark = out.bit_count();
    encode_vertex_types(out, g.theta, deg, widths);
    st.bits_vertex_types = out.bit_count() - mark;
    st.vertex_types = build_vertex_types(g.theta, deg).dictionary.size();

    mark = out.bit_count();
    const PartitionTables parts = find_partition_graphs(g, table, deg);
    st.partition_count = parts.partition_adj.size();
    out.write_elias_delta(1 + st.partition_count);
    const unsigned wt = width(table.tcount);
    for (const auto& [key, adj] : parts.partition_adj) {
        out.write_fixed(key.first, wt);
        out.write_fixed(key.second, wt);
        if (key.first < key.second) {
            BipartiteInstance inst{parts.partition_deg.at(key), parts.partition_deg.at({key.second, key.first}), adj};
            out.write_elias_delta(Nat(b_encode(inst) + 1));
        } else {
            SimpleInstance inst{parts.partition_deg.at(key), adj};
            SimpleRank rank = s_encode_full(inst);
            out.write_elias_delta(Nat(rank.f + 1));
            out.write_elias_delta(1 + rank.checkpoints.size());
            for (uint64_t s : rank.checkpoints) out.write_elias_delta(1 + s);
        }
    }
    st.bits_partitions = out.bit_count() - mark;
    if (stats) *stats = st;
    return out.bytes();
}

namespace {

EdgeListGraph decode_stream(std::span<const uint8_t> bytes) {
    BitReader in(bytes);
    for (uint8_t c : kMagic) require(in.bits_left() >= 8 && in.read_fixed(8) == c, "bad magic");
    require(in.bits_left() >= 8 && in.read_fixed(8) == kVersion, "unsupported version");

    EdgeListGraph out;
    out.n = read_u64_checked(in, kMaxVertices, "n");
    out.sigma_e = static_cast<uint32_t>(read_u64_checked(in, kMaxAlphabet, "|Xi|"));
    out.sigma_v = static_cast<uint32_t>(read_u64_checked(in, kMaxAlphabet, "|Theta|"));
    const uint64_t h = in.read_elias_delta_u64();
    const uint64_t delta = in.read_elias_delta_u64();
    (void)h; // the decoder needs only the labels the encoder chose, not how it chose them
    require(delta <= kMaxVertices, "delta out of range");

    // Each label costs at least two bits, so a larger count cannot be genuine.
    const uint64_t tcount = in.read_elias_delta_u64() - 1;
    require(tcount <= in.bits_left(), "label count exceeds stream");
    const unsigned wx = width(out.sigma_e);
    std::vector<uint8_t> is_star(tcount + 1);
    std::vector<uint32_t> tmark(tcount + 1);
    for (Label t = 1; t <= tcount; ++t) {
        is_star[t] = in.read_bit();
        tmark[t] = static_cast<uint32_t>(in.read_fixed(wx));
        require(tmark[t] >= 1 && tmark[t] <= out.sigma_e, "label mark out of range");
    }

    std::vector<uint64_t> s = decode_sequence(in, out.n);
    std::vector<uint8_t> star(out.n + 1, 0);
    for (uint64_t v = 1; v <= out.n; ++v) {
        require(s[v - 1] <= 1, "star bitmap entry is not a bit");
        star[v] = static_cast<uint8_t>(s[v - 1]);
    }
    out.edges = decode_star_edges(in, star, out.n, out.sigma_e);

    std::vector<DegProfile> deg;
    decode_vertex_types(in, {out.n, delta, out.sigma_e, out.sigma_v, tcount}, out.theta, deg);
    out.theta.erase(out.theta.begin());
    for (uint64_t v = 1; v <= out.n; ++v)
        for (const auto& [key, count] : deg[v])
            require(!is_star[key.first] && !is_star[key.second], "vertex profile names a star label");

    const DecodedPartitions parts = decode_partition_structures(deg);
    const uint64_t keys = in.read_elias_delta_u64() - 1;
    const unsigned wt = width(tcount);
    TypePair previous{0, 0};
    for (uint64_t e = 0; e < keys; ++e) {
        TypePair key{in.read_fixed(wt), in.read_fixed(wt)};
        require(key.first <= key.second && (e == 0 || previous < key), "partition keys out of order");
        previous = key;
        auto left = parts.partition_deg.find(key);
        auto right = parts.partition_deg.find({key.second, key.first});
        require(left != parts.partition_deg.end() && right != parts.partition_deg.end(), "unknown partition key");
        const auto& index_l = parts.original_index.at(key);
        const auto& index_r = parts.original_index.at({key.second, key.first});
        const uint32_t x = tmark[key.first], xp = tmark[key.second];

        Nat f = in.read_elias_delta() - 1;
        try {
            if (key.first < key.second) {
                auto adj = b_decode(f, left->second, right->second);
                for (size_t p = 0; p < adj.size(); ++p)
                    for (uint64_t q : adj[p]) out.edges.push_back({index_l[p], index_r[q - 1], x, xp});
            } else {
                uint64_t len = in.read_elias_delta_u64() - 1;
                require(len <= in.bits_left(), "checkpoint array exceeds stream");
                Checkpoints cp(len);
                for (uint64_t& c : cp) c = in.read_elias_delta_u64() - 1;
                auto fwd = s_decode(f, cp, left->second);
                for (size_t p = 0; p < fwd.size(); ++p)
                    for (uint64_t q : fwd[p]) out.edges.push_back({index_l[p], index_l[q - 1], x, xp});
            }
        } catch (const std::invalid_argument& err) {
            throw StreamError(std::string("decode: partition graph: ") + err.what());
        }
    }
    if (keys != parts.partition_deg.size() - std::count_if(parts.partition_deg.begin(), parts.partition_deg.end(),
                                                           [](const auto& kv) { return kv.first.first > kv.first.second; }))
        throw StreamError("decode: partition key count does not match vertex profiles");

    try {
        validate(out);
    } catch (const ParseError& err) {
        throw StreamError(std::string("decode: inconsistent graph: ") + err.what());
    }
    return out;
}

} // namespace

EdgeListGraph decode_marked_graph(std::span<const uint8_t> bytes) {
    try {
        return decode_stream(bytes);
    } catch (const std::invalid_argument& err) {
        throw StreamError(std::string("decode: ") + err.what());
    } catch (const std::out_of_range& err) {
        throw StreamError(std::string("decode: ") + err.what());
    }
}

} // namespace lwcg
