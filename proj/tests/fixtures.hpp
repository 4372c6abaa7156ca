// Geometric fixtures shared by the test suites. Every fixture is a genuine
// unit disk embedding; edge counts are asserted where the shape matters.
#pragma once

#include <cmath>
#include <vector>

#include "mck/structure.hpp"
#include "mck/udg.hpp"

namespace fx {

inline mck::UdgGraph path_graph(int n, double weight = 0.0) {
    std::vector<mck::NodePoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({double(i), 0.0, weight});
    return mck::UdgGraph::build(pts, 1.0);
}

inline mck::UdgGraph cycle_graph(int n) {
    // regular n-gon with unit side; second neighbors stay out of range
    const double r = 1.0 / (2.0 * std::sin(M_PI / n));
    std::vector<mck::NodePoint> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back({r * std::cos(2 * M_PI * i / n), r * std::sin(2 * M_PI * i / n), 0.0});
    return mck::UdgGraph::build(pts, 1.0000001);
}

inline mck::UdgGraph complete_graph(int n) {
    std::vector<mck::NodePoint> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back({0.01 * std::cos(2 * M_PI * i / n), 0.01 * std::sin(2 * M_PI * i / n), 0.0});
    return mck::UdgGraph::build(pts, 1.0);
}

inline mck::UdgGraph edgeless_graph(int n) {
    std::vector<mck::NodePoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({3.0 * i, 0.0, 0.0});
    return mck::UdgGraph::build(pts, 1.0);
}

// center id 0, leaves 1..n
inline mck::UdgGraph star_graph(int leaves) {
    std::vector<mck::NodePoint> pts{{0.0, 0.0, 0.0}};
    for (int i = 0; i < leaves; ++i)
        pts.push_back({std::cos(2 * M_PI * i / leaves), std::sin(2 * M_PI * i / leaves), 0.0});
    return mck::UdgGraph::build(pts, 1.0);  // leaf pairs are > 1 apart for leaves <= 5
}

// two triangles sharing vertex 0: {0,1,2} and {0,3,4}
inline mck::UdgGraph bowtie() {
    std::vector<mck::NodePoint> pts{
        {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.55, 0.8, 0.0}, {-1.0, 0.0, 0.0}, {-0.55, 0.8, 0.0}};
    return mck::UdgGraph::build(pts, 1.0);
}

// hub 0 plus 4-cycle rim 1..4
inline mck::UdgGraph wheel4() {
    std::vector<mck::NodePoint> pts{{0.0, 0.0, 0.0},
                                    {0.5, 0.5, 0.0},
                                    {-0.5, 0.5, 0.0},
                                    {-0.5, -0.5, 0.0},
                                    {0.5, -0.5, 0.0}};
    return mck::UdgGraph::build(pts, 1.0);
}

// 0-1, 0-2, 1-3, 2-3; weight(1) = 0.7, weight(2) = 0.1
inline mck::UdgGraph diamond() {
    std::vector<mck::NodePoint> pts{
        {0.0, 0.0, 0.0}, {1.0, 0.9, 0.7}, {1.0, -0.9, 0.1}, {2.0, 0.0, 0.0}};
    return mck::UdgGraph::build(pts, 1.4);
}

inline long edge_count(const mck::UdgGraph& g) {
    long total = 0;
    for (int v = 0; v < g.size(); ++v) total += g.degree(v);
    return total / 2;
}

inline mck::NodeSet all_nodes(const mck::UdgGraph& g) { return mck::NodeSet::full(g.size()); }

// independent re-implementations used as oracles

inline bool independent_set(const mck::UdgGraph& g, const mck::NodeSet& s) {
    for (int u : s)
        for (int w : g.neighbors(u))
            if (s.contains(w)) return false;
    return true;
}

inline bool maximal_independent_set(const mck::UdgGraph& g, const mck::NodeSet& s) {
    if (!independent_set(g, s)) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (s.contains(v)) continue;
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (s.contains(w)) dominated = true;
        if (!dominated) return false;
    }
    return true;
}

inline int dominator_neighbors(const mck::UdgGraph& g, const mck::NodeSet& d, int v) {
    int count = 0;
    for (int w : g.neighbors(v))
        if (d.contains(w)) ++count;
    return count;
}

}  // namespace fx
