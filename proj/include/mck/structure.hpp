// Structural predicates over unit disk graphs: hop-shortest paths with a
// total tie-break order, biconnected-component decomposition, k-domination,
// m-connectivity and bad/good point classification.
#pragma once

#include <optional>
#include <vector>

#include "mck/udg.hpp"

namespace mck {

struct BlockDecomposition {
    std::vector<NodeSet> blocks;  // sorted members, blocks in lexicographic order
    NodeSet cut_vertices;
    std::vector<int> leaf_blocks;  // indices of blocks containing exactly one cut vertex
};

enum class PathWeighting {
    weighted,   // min hops, then min sum of intermediate node weights, then lex
    hops_only,  // min hops, then lexicographically smallest id sequence
};

// Minimum-hop path from u to v, or nullopt when disconnected. The tie-break
// chain is a total order, so identical inputs always yield the same path.
std::optional<std::vector<int>> shortest_hop_path(const UdgGraph& g, int u, int v,
                                                  PathWeighting weighting = PathWeighting::weighted);

// Same, but every intermediate node w must satisfy interior_ok[w] != 0
// (endpoints are exempt). interior_ok may be empty meaning "no restriction".
std::optional<std::vector<int>> shortest_hop_path_filtered(const UdgGraph& g, int u, int v,
                                                           PathWeighting weighting,
                                                           const std::vector<char>& interior_ok);

// BFS hop distances from source; -1 = unreachable.
std::vector<int> hop_distances(const UdgGraph& g, int source);

bool induced_connected(const UdgGraph& g, const NodeSet& d);
bool induced_complete(const UdgGraph& g, const NodeSet& d);

// Biconnected components of the induced subgraph. The subset must be
// nonempty and induce a connected subgraph (StructuralError otherwise).
BlockDecomposition block_decomposition(const UdgGraph& g, const NodeSet& subset);

// Every node outside d has at least k neighbors inside d.
bool is_k_dominating(const UdgGraph& g, const NodeSet& d, int k);

// Induced subgraph on d stays connected after removal of any (m-1)-subset,
// checked exhaustively for m in {1,2,3}. Convention for |d| <= m: true iff
// the induced subgraph is complete.
bool is_m_connected(const UdgGraph& g, const NodeSet& d, int m);

enum class PointKind { bad, good };

// Requires v in subset and a 2-connected induced subgraph; a point is bad
// when its removal destroys 2-connectivity.
PointKind classify_point(const UdgGraph& g, const NodeSet& subset, int v);

// 2-connectivity with the small-set convention (<= 2 nodes: complete),
// computed via articulation points; empty sets count as 2-connected.
// Equivalent to is_m_connected(g, set, 2) but O(V+E).
bool two_connected(const UdgGraph& g, const NodeSet& set);

// Members of d whose removal leaves a not-2-connected induced subgraph.
std::vector<int> bad_points(const UdgGraph& g, const NodeSet& d);

}  // namespace mck
