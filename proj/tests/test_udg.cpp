#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mck/udg.hpp"

using namespace mck;

TEST_CASE("edge rule on two points") {
    UdgGraph close = UdgGraph::build({{0, 0, 0}, {0, 0.5, 0}}, 1.0);
    CHECK(fx::edge_count(close) == 1);
    UdgGraph far = UdgGraph::build({{0, 0, 0}, {0, 2.0, 0}}, 1.0);
    CHECK(fx::edge_count(far) == 0);
}

TEST_CASE("adjacency matches the brute-force distance predicate") {
    UdgGraph g = random_topology(50, 100, 100, 25, 42);
    for (int u = 0; u < g.size(); ++u) {
        for (int v = 0; v < g.size(); ++v) {
            if (u == v) {
                CHECK_FALSE(g.adjacent(u, v));
                continue;
            }
            const double dx = g.point(u).x - g.point(v).x;
            const double dy = g.point(u).y - g.point(v).y;
            bool expect = std::sqrt(dx * dx + dy * dy) <= 25.0;
            CHECK(g.adjacent(u, v) == expect);
            CHECK(g.adjacent(v, u) == expect);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(UdgGraph::build({{0, 0, 0}}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(UdgGraph::build({{0, 0, 0.9}}, 1.0), std::invalid_argument);
    // duplicate coordinates are fine
    UdgGraph dup = UdgGraph::build({{1, 1, 0}, {1, 1, 0}}, 1.0);
    CHECK(fx::edge_count(dup) == 1);
}

TEST_CASE("random topology determinism and bounds") {
    UdgGraph a = random_topology(40, 100, 100, 20, 7);
    UdgGraph b = random_topology(40, 100, 100, 20, 7);
    CHECK(to_udg_text(a) == to_udg_text(b));
    UdgGraph c = random_topology(40, 100, 100, 20, 8);
    CHECK(to_udg_text(a) != to_udg_text(c));
    for (int v = 0; v < a.size(); ++v) {
        CHECK(a.point(v).x >= 0);
        CHECK(a.point(v).x <= 100);
        CHECK(a.point(v).y <= 100);
        CHECK(a.weight(v) >= 0.0);
        CHECK(a.weight(v) <= 0.8);
    }
}

TEST_CASE("single node topology") {
    UdgGraph g = random_topology(1, 10, 10, 5, 1);
    CHECK(g.size() == 1);
    CHECK(g.degree(0) == 0);
    CHECK(g.connected());
}

TEST_CASE("random experiment settings produce the advertised shape") {
    UdgGraph g = random_connected_topology(100, 50, 100, 15, 3);
    CHECK(g.size() == 100);
    CHECK(g.connected());
    for (int v = 0; v < g.size(); ++v) {
        CHECK(g.point(v).x <= 50);
        CHECK(g.point(v).y <= 100);
    }
}

TEST_CASE("connected resampling gives up on hopeless densities") {
    CHECK_THROWS_AS(random_connected_topology(20, 100, 100, 0.01, 1, 5), GenerationFailure);
}

TEST_CASE("grid topology") {
    UdgGraph one = grid_topology(1, 1, 5, 5);
    CHECK(one.size() == 1);

    UdgGraph pair = grid_topology(1, 2, 5, 5);
    CHECK(fx::edge_count(pair) == 1);  // spacing equals radius

    UdgGraph g = grid_topology(10, 10, 5, 5);
    CHECK(g.size() == 100);
    // interior nodes have exactly the four orthogonal neighbors
    for (int i = 1; i < 9; ++i) {
        for (int j = 1; j < 9; ++j) {
            int v = i * 10 + j;
            int by_distance = 0;
            for (int w = 0; w < g.size(); ++w)
                if (w != v && g.distance(v, w) <= 5.0) ++by_distance;
            CHECK(g.degree(v) == 4);
            CHECK(by_distance == 4);
        }
    }
}

TEST_CASE("grid weights are zero by default and seeded on request") {
    UdgGraph plain = grid_topology(3, 3, 5, 5);
    for (int v = 0; v < plain.size(); ++v) CHECK(plain.weight(v) == 0.0);
    UdgGraph seeded = grid_topology(3, 3, 5, 5, 11);
    UdgGraph seeded2 = grid_topology(3, 3, 5, 5, 11);
    CHECK(to_udg_text(seeded) == to_udg_text(seeded2));
    bool any_nonzero = false;
    for (int v = 0; v < seeded.size(); ++v) {
        CHECK(seeded.weight(v) <= 0.8);
        if (seeded.weight(v) > 0) any_nonzero = true;
    }
    CHECK(any_nonzero);
}

TEST_CASE("graph file round-trip is exact") {
    UdgGraph g = random_topology(25, 100, 100, 17.5, 99);
    std::string text = to_udg_text(g);
    std::istringstream in(text);
    UdgGraph back = read_udg(in);
    CHECK(to_udg_text(back) == text);
    CHECK(back.size() == g.size());
    for (int v = 0; v < g.size(); ++v) {
        CHECK(back.point(v).x == g.point(v).x);
        CHECK(back.point(v).y == g.point(v).y);
        CHECK(back.weight(v) == g.weight(v));
    }
}

TEST_CASE("graph file rejects malformed input") {
    std::istringstream bad_header("#nope\nn=1 r=1\n0 0 0 0\n");
    CHECK_THROWS_AS(read_udg(bad_header), std::invalid_argument);
    std::istringstream bad_meta("#udg v1\nnonsense\n");
    CHECK_THROWS_AS(read_udg(bad_meta), std::invalid_argument);
    std::istringstream dup_id("#udg v1\nn=2 r=1\n0 0 0 0\n0 1 1 0\n");
    CHECK_THROWS_AS(read_udg(dup_id), std::invalid_argument);
}

TEST_CASE("node set basics") {
    NodeSet s(std::vector<int>{3, 1, 3, 2});
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(5));
    CHECK(s.insert(5));
    CHECK_FALSE(s.insert(5));
    s.erase(3);
    CHECK_FALSE(s.contains(3));
    CHECK(NodeSet(std::vector<int>{1, 2}).is_subset_of(s));
}
