#include "lwcg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

namespace lwcg {

namespace {

struct Line {
    uint64_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    uint64_t number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(uint64_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<uint64_t> tokens(const Line& line) {
    std::vector<uint64_t> out;
    std::string_view s = line.text;
    size_t pos = 0;
    while (true) {
        pos = s.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) break;
        size_t end = s.find_first_of(" \t", pos);
        if (end == std::string_view::npos) end = s.size();
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
        if (ec != std::errc() || ptr != s.data() + end)
            fail(line.number, "expected a nonnegative integer, got '" + std::string(s.substr(pos, end - pos)) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

// Shared by the parser and validate(); `where(k)` renders the location of record k.
template <class Where>
void check_edges(const EdgeListGraph& g, Where where) {
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const EdgeRecord& e = g.edges[k];
        if (e.v < 1 || e.v > g.n || e.w < 1 || e.w > g.n) throw ParseError(where(k) + ": vertex out of range");
        if (e.v == e.w) throw ParseError(where(k) + ": self loop");
        if (e.x < 1 || e.x > g.sigma_e || e.xp < 1 || e.xp > g.sigma_e)
            throw ParseError(where(k) + ": edge mark out of range");
    }
    std::vector<std::tuple<uint64_t, uint64_t, size_t>> pairs;
    pairs.reserve(g.edges.size());
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const EdgeRecord& e = g.edges[k];
        pairs.emplace_back(std::min(e.v, e.w), std::max(e.v, e.w), k);
    }
    std::sort(pairs.begin(), pairs.end());
    for (size_t k = 1; k < pairs.size(); ++k) {
        auto [v0, w0, k0] = pairs[k - 1];
        auto [v1, w1, k1] = pairs[k];
        if (v0 == v1 && w0 == w1) {
            size_t later = std::max(k0, k1);
            throw ParseError(where(later) + ": duplicate edge {" + std::to_string(v1) + "," + std::to_string(w1) + "}");
        }
    }
}

void check_header(const EdgeListGraph& g, const std::string& where) {
    if (g.n < 1) throw ParseError(where + ": n must be at least 1");
    if (g.sigma_v < 1 || g.sigma_e < 1) throw ParseError(where + ": alphabet sizes must be at least 1");
    if (g.theta.size() != g.n) throw ParseError(where + ": expected " + std::to_string(g.n) + " vertex marks");
}

} // namespace

uint64_t NeighborListGraph::edge_count() const {
    uint64_t twice = 0;
    for (uint64_t v = 1; v <= n; ++v) twice += gamma[v].size();
    return twice / 2;
}

EdgeListGraph parse_edge_list(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("line 1: missing header 'n m |Theta| |Xi|'");

    std::vector<uint64_t> head = tokens(lines[0]);
    if (head.size() != 4) fail(lines[0].number, "header must have four fields 'n m |Theta| |Xi|'");
    EdgeListGraph g;
    g.n = head[0];
    uint64_t m = head[1];
    if (head[2] < 1 || head[2] > UINT32_MAX || head[3] < 1 || head[3] > UINT32_MAX)
        fail(lines[0].number, "alphabet sizes must be in 1..2^32-1");
    g.sigma_v = static_cast<uint32_t>(head[2]);
    g.sigma_e = static_cast<uint32_t>(head[3]);
    if (g.n < 1) fail(lines[0].number, "n must be at least 1");

    if (lines.size() < 2) fail(lines[0].number + 1, "missing vertex-mark line");
    std::vector<uint64_t> marks = tokens(lines[1]);
    if (marks.size() != g.n)
        fail(lines[1].number, "expected " + std::to_string(g.n) + " vertex marks, got " + std::to_string(marks.size()));
    g.theta.reserve(g.n);
    for (uint64_t t : marks) {
        if (t < 1 || t > g.sigma_v) fail(lines[1].number, "vertex mark " + std::to_string(t) + " out of range");
        g.theta.push_back(static_cast<uint32_t>(t));
    }

    if (lines.size() - 2 != m)
        fail(lines.back().number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 2));
    g.edges.reserve(m);
    std::vector<uint64_t> numbers;
    numbers.reserve(m);
    for (size_t k = 2; k < lines.size(); ++k) {
        std::vector<uint64_t> f = tokens(lines[k]);
        if (f.size() != 4) fail(lines[k].number, "edge line must be 'v w x x''");
        if (f[2] > UINT32_MAX || f[3] > UINT32_MAX) fail(lines[k].number, "edge mark out of range");
        g.edges.push_back({f[0], f[1], static_cast<uint32_t>(f[2]), static_cast<uint32_t>(f[3])});
        numbers.push_back(lines[k].number);
    }
    check_edges(g, [&](size_t k) { return "line " + std::to_string(numbers[k]); });
    return g;
}

void validate(const EdgeListGraph& g) {
    check_header(g, "graph");
    for (uint64_t v = 1; v <= g.n; ++v)
        if (g.theta[v - 1] < 1 || g.theta[v - 1] > g.sigma_v)
            throw ParseError("vertex " + std::to_string(v) + ": mark out of range");
    check_edges(g, [](size_t k) { return "edge record " + std::to_string(k + 1); });
}

std::string format_edge_list(const EdgeListGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << ' ' << g.sigma_v << ' ' << g.sigma_e << '\n';
    for (uint64_t v = 0; v < g.n; ++v) out << (v ? " " : "") << g.theta[v];
    out << '\n';
    for (const EdgeRecord& e : g.edges) out << e.v << ' ' << e.w << ' ' << e.x << ' ' << e.xp << '\n';
    return out.str();
}

NeighborListGraph preprocess(const EdgeListGraph& g) {
    std::vector<EdgeRecord> edges = g.edges;
    for (EdgeRecord& e : edges)
        if (e.v > e.w) {
            std::swap(e.v, e.w);
            std::swap(e.x, e.xp);
        }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return std::tie(a.v, a.w) < std::tie(b.v, b.w); });

    NeighborListGraph out;
    out.n = g.n;
    out.sigma_v = g.sigma_v;
    out.sigma_e = g.sigma_e;
    out.theta.assign(g.n + 1, 0);
    for (uint64_t v = 1; v <= g.n; ++v) out.theta[v] = g.theta[v - 1];

    std::vector<uint32_t> d(g.n + 1, 0);
    for (const EdgeRecord& e : edges) {
        ++d[e.v];
        ++d[e.w];
    }
    out.gamma.resize(g.n + 1);
    out.x.resize(g.n + 1);
    out.xp.resize(g.n + 1);
    out.gammat.resize(g.n + 1);
    for (uint64_t v = 1; v <= g.n; ++v) {
        out.gamma[v].reserve(d[v]);
        out.x[v].reserve(d[v]);
        out.xp[v].reserve(d[v]);
        out.gammat[v].reserve(d[v]);
    }
    // Sorted by (v, w) with v < w, every list receives its neighbors in increasing order:
    // first the smaller ones (as w), then the larger ones (as v).
    for (const EdgeRecord& e : edges) {
        uint32_t slot_v = static_cast<uint32_t>(out.gamma[e.v].size());
        uint32_t slot_w = static_cast<uint32_t>(out.gamma[e.w].size());
        out.gamma[e.v].push_back(e.w);
        out.x[e.v].push_back(e.x);
        out.xp[e.v].push_back(e.xp);
        out.gammat[e.v].push_back(slot_w);
        out.gamma[e.w].push_back(e.v);
        out.x[e.w].push_back(e.xp);
        out.xp[e.w].push_back(e.x);
        out.gammat[e.w].push_back(slot_v);
    }
    return out;
}

EdgeListGraph canonical(const EdgeListGraph& g) {
    EdgeListGraph out = g;
    for (EdgeRecord& e : out.edges)
        if (e.v > e.w) {
            std::swap(e.v, e.w);
            std::swap(e.x, e.xp);
        }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return std::tie(a.v, a.w) < std::tie(b.v, b.w); });
    return out;
}

EdgeListGraph to_edge_list(const NeighborListGraph& g) {
    EdgeListGraph out;
    out.n = g.n;
    out.sigma_v = g.sigma_v;
    out.sigma_e = g.sigma_e;
    out.theta.assign(g.theta.begin() + 1, g.theta.end());
    for (uint64_t v = 1; v <= g.n; ++v)
        for (size_t i = 0; i < g.gamma[v].size(); ++i)
            if (g.gamma[v][i] > v) out.edges.push_back({v, g.gamma[v][i], g.x[v][i], g.xp[v][i]});
    return out;
}

bool same_graph(const EdgeListGraph& a, const EdgeListGraph& b) { return canonical(a) == canonical(b); }

} // namespace lwcg
