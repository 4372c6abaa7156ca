#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mck/structure.hpp"

using namespace mck;

namespace {

// Exhaustive path enumerator: the independent oracle for tie-break checks.
void enumerate_paths(const UdgGraph& g, int cur, int target, std::vector<int>& stack,
                     std::vector<char>& used, std::vector<std::vector<int>>& out) {
    if (cur == target) {
        out.push_back(stack);
        return;
    }
    for (int w : g.neighbors(cur)) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
        enumerate_paths(g, w, target, stack, used, out);
        stack.pop_back();
        used[static_cast<std::size_t>(w)] = 0;
    }
}

std::vector<int> best_path_by_enumeration(const UdgGraph& g, int u, int v, bool weighted) {
    std::vector<std::vector<int>> all;
    std::vector<int> stack{u};
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    used[static_cast<std::size_t>(u)] = 1;
    enumerate_paths(g, u, v, stack, used, all);
    REQUIRE(!all.empty());
    auto cost = [&](const std::vector<int>& p) {
        double w = 0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) w += weighted ? g.weight(p[i]) : 0.0;
        return std::tuple<std::size_t, double, std::vector<int>>(p.size(), w, p);
    };
    return *std::min_element(all.begin(), all.end(),
                             [&](const auto& a, const auto& b) { return cost(a) < cost(b); });
}

}  // namespace

TEST_CASE("shortest path trivial cases") {
    UdgGraph p3 = fx::path_graph(3);
    auto self = shortest_hop_path(p3, 1, 1);
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<int>{1});

    auto across = shortest_hop_path(p3, 0, 2);
    REQUIRE(across.has_value());
    CHECK(*across == std::vector<int>{0, 1, 2});

    UdgGraph split = fx::edgeless_graph(2);
    CHECK_FALSE(shortest_hop_path(split, 0, 1).has_value());
}

TEST_CASE("shortest path prefers light then lexicographic interiors") {
    UdgGraph d = fx::diamond();
    REQUIRE(fx::edge_count(d) == 4);
    auto got = shortest_hop_path(d, 0, 3);
    REQUIRE(got.has_value());
    CHECK(*got == std::vector<int>{0, 2, 3});
    CHECK(*got == best_path_by_enumeration(d, 0, 3, true));

    // equal weights: the lexicographically smallest sequence wins
    auto unweighted = shortest_hop_path(d, 0, 3, PathWeighting::hops_only);
    CHECK(*unweighted == std::vector<int>{0, 1, 3});
    CHECK(*unweighted == best_path_by_enumeration(d, 0, 3, false));
}

TEST_CASE("shortest path is deterministic and agrees with enumeration on random graphs") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        UdgGraph g = random_connected_topology(12, 10, 10, 4.5, seed);
        for (int u = 0; u < g.size(); u += 3) {
            for (int v = u + 1; v < g.size(); v += 4) {
                auto a = shortest_hop_path(g, u, v);
                auto b = shortest_hop_path(g, u, v);
                REQUIRE(a.has_value());
                CHECK(*a == *b);
                CHECK(*a == best_path_by_enumeration(g, u, v, true));
            }
        }
    }
}

TEST_CASE("filtered paths avoid blocked interiors") {
    UdgGraph d = fx::diamond();
    std::vector<char> interior_ok(4, 1);
    interior_ok[2] = 0;  // block the light node
    auto got = shortest_hop_path_filtered(d, 0, 3, PathWeighting::weighted, interior_ok);
    REQUIRE(got.has_value());
    CHECK(*got == std::vector<int>{0, 1, 3});
    interior_ok[1] = 0;
    CHECK_FALSE(shortest_hop_path_filtered(d, 0, 3, PathWeighting::weighted, interior_ok).has_value());
}

TEST_CASE("block decomposition of a path") {
    UdgGraph g = fx::path_graph(3);
    BlockDecomposition dec = block_decomposition(g, fx::all_nodes(g));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0] == NodeSet(std::vector<int>{0, 1}));
    CHECK(dec.blocks[1] == NodeSet(std::vector<int>{1, 2}));
    CHECK(dec.cut_vertices == NodeSet(std::vector<int>{1}));
    CHECK(dec.leaf_blocks == std::vector<int>{0, 1});
}

TEST_CASE("block decomposition of a cycle") {
    UdgGraph g = fx::cycle_graph(4);
    BlockDecomposition dec = block_decomposition(g, fx::all_nodes(g));
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].size() == 4);
    CHECK(dec.cut_vertices.empty());
    CHECK(dec.leaf_blocks.empty());
}

TEST_CASE("block decomposition of the bowtie") {
    UdgGraph g = fx::bowtie();
    REQUIRE(fx::edge_count(g) == 6);
    BlockDecomposition dec = block_decomposition(g, fx::all_nodes(g));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0] == NodeSet(std::vector<int>{0, 1, 2}));
    CHECK(dec.blocks[1] == NodeSet(std::vector<int>{0, 3, 4}));
    CHECK(dec.cut_vertices == NodeSet(std::vector<int>{0}));
    CHECK(dec.leaf_blocks == std::vector<int>{0, 1});
}

TEST_CASE("block decomposition rejects disconnected subsets") {
    UdgGraph g = fx::edgeless_graph(3);
    CHECK_THROWS_AS(block_decomposition(g, fx::all_nodes(g)), StructuralError);
    CHECK_THROWS_AS(block_decomposition(g, NodeSet()), StructuralError);
    // singleton is one block without cut vertices
    BlockDecomposition dec = block_decomposition(g, NodeSet(std::vector<int>{1}));
    CHECK(dec.blocks.size() == 1);
    CHECK(dec.leaf_blocks.empty());
}

TEST_CASE("block edges partition the induced edges; cut vertices sit in two blocks") {
    for (std::uint64_t seed = 10; seed < 30; ++seed) {
        UdgGraph g = random_connected_topology(18, 10, 10, 3.2, seed);
        NodeSet subset = fx::all_nodes(g);
        BlockDecomposition dec = block_decomposition(g, subset);
        std::map<std::pair<int, int>, int> edge_blocks;
        std::map<int, int> vertex_blocks;
        for (const NodeSet& block : dec.blocks) {
            for (int u : block) {
                ++vertex_blocks[u];
                for (int v : block)
                    if (u < v && g.adjacent(u, v)) ++edge_blocks[{u, v}];
            }
        }
        long induced_edges = 0;
        for (int u = 0; u < g.size(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) ++induced_edges;
        long partitioned = 0;
        for (const auto& [e, count] : edge_blocks) {
            CHECK(count == 1);
            ++partitioned;
        }
        CHECK(partitioned == induced_edges);
        for (int v : subset)
            CHECK(dec.cut_vertices.contains(v) == (vertex_blocks[v] >= 2));
    }
}

TEST_CASE("k domination") {
    UdgGraph star = fx::star_graph(4);
    NodeSet center(std::vector<int>{0});
    CHECK(is_k_dominating(star, center, 1));
    CHECK_FALSE(is_k_dominating(star, center, 2));
    CHECK(is_k_dominating(star, fx::all_nodes(star), 3));  // vacuous
    CHECK_THROWS_AS(is_k_dominating(star, center, 0), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        UdgGraph g = random_topology(20, 10, 10, 3.5, seed);
        Rng rng(seed * 31 + 7);
        std::vector<int> picks;
        for (int v = 0; v < g.size(); ++v)
            if (rng.unit() < 0.4) picks.push_back(v);
        NodeSet d(picks);
        if (d.empty()) continue;
        for (int k = 1; k <= 3; ++k) {
            bool expect = true;
            for (int v = 0; v < g.size(); ++v)
                if (!d.contains(v) && fx::dominator_neighbors(g, d, v) < k) expect = false;
            CHECK(is_k_dominating(g, d, k) == expect);
        }
    }
}

TEST_CASE("m connectivity on the named fixtures") {
    UdgGraph k4 = fx::complete_graph(4);
    CHECK(is_m_connected(k4, fx::all_nodes(k4), 3));
    UdgGraph c5 = fx::cycle_graph(5);
    CHECK(is_m_connected(c5, fx::all_nodes(c5), 2));
    CHECK_FALSE(is_m_connected(c5, fx::all_nodes(c5), 3));
    CHECK_THROWS_AS(is_m_connected(c5, NodeSet(), 1), std::invalid_argument);
    CHECK_THROWS_AS(is_m_connected(c5, fx::all_nodes(c5), 4), std::invalid_argument);

    // small-set convention: complete induced subgraphs count as m-connected
    UdgGraph p3 = fx::path_graph(3);
    CHECK(is_m_connected(p3, NodeSet(std::vector<int>{1}), 2));
    CHECK(is_m_connected(p3, NodeSet(std::vector<int>{0, 1}), 3));
    CHECK_FALSE(is_m_connected(p3, NodeSet(std::vector<int>{0, 2}), 2));
}

TEST_CASE("2-connectivity equals the block view on random subsets") {
    for (std::uint64_t seed = 50; seed < 80; ++seed) {
        UdgGraph g = random_connected_topology(16, 10, 10, 4.0, seed);
        Rng rng(seed);
        std::vector<int> picks;
        for (int v = 0; v < g.size(); ++v)
            if (rng.unit() < 0.6) picks.push_back(v);
        NodeSet d(picks);
        if (d.size() < 3 || !induced_connected(g, d)) continue;
        BlockDecomposition dec = block_decomposition(g, d);
        bool via_blocks = dec.cut_vertices.empty() && dec.blocks.size() == 1;
        CHECK(is_m_connected(g, d, 2) == via_blocks);
        CHECK(two_connected(g, d) == via_blocks);
    }
}

TEST_CASE("point classification") {
    UdgGraph c4 = fx::cycle_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(classify_point(c4, fx::all_nodes(c4), v) == PointKind::bad);

    UdgGraph k4 = fx::complete_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(classify_point(k4, fx::all_nodes(k4), v) == PointKind::good);

    UdgGraph w = fx::wheel4();
    REQUIRE(fx::edge_count(w) == 8);
    CHECK(classify_point(w, fx::all_nodes(w), 0) == PointKind::good);  // hub
    for (int rim = 1; rim <= 4; ++rim)
        CHECK(classify_point(w, fx::all_nodes(w), rim) == PointKind::good);

    UdgGraph p3 = fx::path_graph(3);
    CHECK_THROWS_AS(classify_point(p3, fx::all_nodes(p3), 1), StructuralError);      // not 2-connected
    CHECK_THROWS_AS(classify_point(c4, NodeSet(std::vector<int>{0, 1, 2}), 3), StructuralError);
}

TEST_CASE("no bad points is equivalent to 3-connectivity on 2-connected subsets") {
    int tested = 0;
    for (std::uint64_t seed = 100; seed < 200 && tested < 40; ++seed) {
        UdgGraph g = random_connected_topology(14, 10, 10, 4.5, seed);
        Rng rng(seed);
        std::vector<int> picks;
        for (int v = 0; v < g.size(); ++v)
            if (rng.unit() < 0.7) picks.push_back(v);
        NodeSet d(picks);
        if (d.size() < 4 || !two_connected(g, d)) continue;
        ++tested;
        bool all_good = bad_points(g, d).empty();
        CHECK(all_good == is_m_connected(g, d, 3));
    }
    CHECK(tested >= 10);
}
