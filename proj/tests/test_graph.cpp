#include <random>

#include "doctest.h"
#include "lwcg/graph.hpp"
#include "test_support.hpp"

using namespace lwcg;
using lwcg::testing::random_graph;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse the smallest graph") {
    EdgeListGraph g = parse_edge_list("2 1 1 1\n1 1\n1 2 1 1\n");
    CHECK(g.n == 2);
    CHECK(g.sigma_v == 1);
    CHECK(g.sigma_e == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == EdgeRecord{1, 2, 1, 1});
}

TEST_CASE("parse the sample graph fixture") {
    EdgeListGraph g = testing::sample_graph();
    CHECK(g.n == 16);
    CHECK(g.edges.size() == 20);
    CHECK(g.sigma_e == 2);
    CHECK(g.sigma_v == 2);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_of("2 1 1 1\n1 1\n1 1 1 1\n") == "line 3: self loop");
    CHECK(error_of("# c\n3 2 1 1\n1 1 1\n1 2 1 1\n\n2 1 1 1\n").find("line 6: duplicate edge {1,2}") == 0);
    CHECK(error_of("2 1 1 2\n1 1\n1 2 1 3\n") == "line 3: edge mark out of range");
    CHECK(error_of("2 1 1 1\n1 2\n1 2 1 1\n") == "line 2: vertex mark 2 out of range");
    CHECK(error_of("2 1 1 1\n1 1\n1 x 1 1\n").find("line 3: expected a nonnegative integer") == 0);
    CHECK(error_of("2 2 1 1\n1 1\n1 2 1 1\n").find("header declares 2 edges") != std::string::npos);
    CHECK(error_of("2 1 1 1\n1 1\n1 3 1 1\n") == "line 3: vertex out of range");
    CHECK(error_of("") == "line 1: missing header 'n m |Theta| |Xi|'");
}

TEST_CASE("preprocess the sample graph: vertex 5") {
    NeighborListGraph g = preprocess(testing::sample_graph());
    CHECK(g.gamma[5] == std::vector<uint64_t>{1, 13, 14});
    CHECK(g.x[5] == std::vector<uint32_t>{1, 1, 1});
    CHECK(g.xp[5] == std::vector<uint32_t>{2, 1, 1});
    // Back-indices are stored 0-based; the 1-based values are (4, 1, 1).
    CHECK(g.gammat[5] == std::vector<uint32_t>{3, 0, 0});
}

TEST_CASE("preprocess is orientation-free") {
    EdgeListGraph a = parse_edge_list("2 1 1 2\n1 1\n1 2 1 2\n");
    EdgeListGraph b = parse_edge_list("2 1 1 2\n1 1\n2 1 2 1\n");
    NeighborListGraph na = preprocess(a), nb = preprocess(b);
    CHECK(na.gamma == nb.gamma);
    CHECK(na.x == nb.x);
    CHECK(na.xp == nb.xp);
    CHECK(na.gammat == nb.gammat);
    CHECK(na.x[1] == std::vector<uint32_t>{1});
    CHECK(na.xp[1] == std::vector<uint32_t>{2});
}

TEST_CASE("neighbor lists agree with an adjacency-matrix construction") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeListGraph e = random_graph(rng, 30, 0.15, 3, 2);
        NeighborListGraph g = preprocess(e);
        // mark[v][w] = mark toward v on edge {v, w}, 0 if absent.
        std::vector<std::vector<uint32_t>> mark(31, std::vector<uint32_t>(31, 0));
        for (const EdgeRecord& r : e.edges) {
            mark[r.v][r.w] = r.x;
            mark[r.w][r.v] = r.xp;
        }
        uint64_t twice = 0;
        for (uint64_t v = 1; v <= 30; ++v) {
            std::vector<uint64_t> expect;
            for (uint64_t w = 1; w <= 30; ++w)
                if (mark[v][w]) expect.push_back(w);
            REQUIRE(g.gamma[v] == expect);
            twice += g.deg(v);
            for (size_t i = 0; i < g.deg(v); ++i) {
                uint64_t w = g.gamma[v][i];
                REQUIRE(g.gamma[w][g.gammat[v][i]] == v);
                REQUIRE(g.x[v][i] == mark[v][w]);
                REQUIRE(g.xp[v][i] == mark[w][v]);
                REQUIRE(g.x[v][i] == g.xp[w][g.gammat[v][i]]);
            }
        }
        CHECK(twice == 2 * e.edges.size());
    }
}

TEST_CASE("canonical edge lists and permutation invariance") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        EdgeListGraph e = random_graph(rng, 25, 0.2, 2, 3);
        EdgeListGraph shuffled = e;
        std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
        for (EdgeRecord& r : shuffled.edges)
            if (rng() & 1) r = {r.w, r.v, r.xp, r.x};
        CHECK(same_graph(e, shuffled));
        NeighborListGraph a = preprocess(e), b = preprocess(shuffled);
        CHECK(a.gamma == b.gamma);
        CHECK(a.x == b.x);
        CHECK(a.xp == b.xp);
        CHECK(to_edge_list(a) == canonical(e));
        CHECK(parse_edge_list(format_edge_list(e)) == e);
    }
}

TEST_CASE("validate rejects malformed in-memory graphs") {
    EdgeListGraph g = parse_edge_list("3 1 1 1\n1 1 1\n1 2 1 1\n");
    g.edges.push_back({2, 1, 1, 1});
    CHECK_THROWS_AS(validate(g), ParseError);
    g.edges.pop_back();
    g.theta[2] = 2;
    CHECK_THROWS_AS(validate(g), ParseError);
}
