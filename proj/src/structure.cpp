#include "mck/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mck {

namespace {

// BFS in g where intermediates are restricted: a node may be expanded only
// if it is the source or interior_ok permits it; the target still receives
// a distance when touched. Returns -1 for unreached nodes.
std::vector<int> restricted_bfs(const UdgGraph& g, int source, int target,
                                const std::vector<char>& interior_ok) {
    std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] != -1) continue;
            bool passable = interior_ok.empty() || interior_ok[static_cast<std::size_t>(w)];
            if (w != target && !passable) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            if (w != target) queue.push_back(w);
        }
    }
    return dist;
}

}  // namespace

std::vector<int> hop_distances(const UdgGraph& g, int source) {
    return restricted_bfs(g, source, -1, {});
}

std::optional<std::vector<int>> shortest_hop_path_filtered(const UdgGraph& g, int u, int v,
                                                           PathWeighting weighting,
                                                           const std::vector<char>& interior_ok) {
    const int n = g.size();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("invalid-parameter: path endpoint outside graph");
    if (u == v) return std::vector<int>{u};

    std::vector<int> du = restricted_bfs(g, u, v, interior_ok);
    if (du[static_cast<std::size_t>(v)] < 0) return std::nullopt;
    std::vector<int> dv = restricted_bfs(g, v, u, interior_ok);
    const int hops = du[static_cast<std::size_t>(v)];

    auto on_dag = [&](int w) {
        return du[static_cast<std::size_t>(w)] >= 0 && dv[static_cast<std::size_t>(w)] >= 0 &&
               du[static_cast<std::size_t>(w)] + dv[static_cast<std::size_t>(w)] == hops;
    };
    auto contribution = [&](int w) {
        if (w == v) return 0.0;
        return weighting == PathWeighting::weighted ? g.weight(w) : 0.0;
    };

    // Cheapest completion cost from each on-DAG node to v, counting the
    // weights of nodes strictly after it. Processed by descending layer so
    // successors are final before predecessors.
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(hops) + 1);
    for (int w = 0; w < n; ++w)
        if (on_dag(w)) layers[static_cast<std::size_t>(du[static_cast<std::size_t>(w)])].push_back(w);
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> completion(static_cast<std::size_t>(n), kInf);
    completion[static_cast<std::size_t>(v)] = 0.0;
    for (int layer = hops - 1; layer >= 0; --layer) {
        for (int w : layers[static_cast<std::size_t>(layer)]) {
            double best = kInf;
            for (int y : g.neighbors(w)) {
                if (!on_dag(y) || du[static_cast<std::size_t>(y)] != layer + 1) continue;
                double cand = contribution(y) + completion[static_cast<std::size_t>(y)];
                if (cand < best) best = cand;
            }
            completion[static_cast<std::size_t>(w)] = best;
        }
    }

    // Walk forward, always taking the smallest id that still completes at
    // the optimal cost. The comparison is exact: completion[cur] is bitwise
    // one of the candidate values.
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        int next = -1;
        for (int y : g.neighbors(cur)) {
            if (!on_dag(y) || du[static_cast<std::size_t>(y)] != du[static_cast<std::size_t>(cur)] + 1) continue;
            if (contribution(y) + completion[static_cast<std::size_t>(y)] ==
                completion[static_cast<std::size_t>(cur)]) {
                if (next < 0 || y < next) next = y;
            }
        }
        if (next < 0) throw std::logic_error("internal-invariant: path reconstruction lost the DAG");
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::optional<std::vector<int>> shortest_hop_path(const UdgGraph& g, int u, int v,
                                                  PathWeighting weighting) {
    return shortest_hop_path_filtered(g, u, v, weighting, {});
}

bool induced_connected(const UdgGraph& g, const NodeSet& d) {
    if (d.empty()) return true;
    std::vector<char> member(static_cast<std::size_t>(g.size()), 0);
    for (int v : d) member[static_cast<std::size_t>(v)] = 1;
    std::vector<int> stack{d.ids().front()};
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    seen[static_cast<std::size_t>(d.ids().front())] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (member[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == d.size();
}

bool induced_complete(const UdgGraph& g, const NodeSet& d) {
    const auto& ids = d.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!g.adjacent(ids[i], ids[j])) return false;
    return true;
}

namespace {

struct DfsFrame {
    int v;
    int parent;
    std::size_t next_neighbor;
};

// One pass over the induced subgraph: connectivity count, articulation
// vertices and (optionally) the biconnected components via an edge stack.
struct InducedDfs {
    const UdgGraph& g;
    std::vector<char> member;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    bool collect_blocks;
    int visited = 0;
    int timer = 0;

    InducedDfs(const UdgGraph& graph, const std::vector<int>& members, int excluded,
               bool want_blocks)
        : g(graph),
          member(static_cast<std::size_t>(graph.size()), 0),
          disc(static_cast<std::size_t>(graph.size()), -1),
          low(static_cast<std::size_t>(graph.size()), 0),
          is_cut(static_cast<std::size_t>(graph.size()), 0),
          collect_blocks(want_blocks) {
        for (int v : members)
            if (v != excluded) member[static_cast<std::size_t>(v)] = 1;
    }

    void pop_block(int v, int w) {
        std::vector<int> verts;
        auto add = [&](int x) {
            if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
        };
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            add(a);
            add(b);
            if (a == v && b == w) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    }

    void run(int root) {
        std::vector<DfsFrame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        ++visited;
        stack.push_back({root, -1, 0});
        int root_children = 0;
        while (!stack.empty()) {
            DfsFrame& fr = stack.back();
            const auto& nbrs = g.neighbors(fr.v);
            if (fr.next_neighbor < nbrs.size()) {
                int w = nbrs[fr.next_neighbor++];
                if (!member[static_cast<std::size_t>(w)] || w == fr.parent) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    if (collect_blocks) edge_stack.push_back({fr.v, w});
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    ++visited;
                    stack.push_back({w, fr.v, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(fr.v)]) {
                    if (collect_blocks) edge_stack.push_back({fr.v, w});
                    low[static_cast<std::size_t>(fr.v)] =
                        std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = fr.v;
                int parent = fr.parent;
                stack.pop_back();
                if (parent < 0) break;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
                    if (parent == root)
                        ++root_children;
                    else
                        is_cut[static_cast<std::size_t>(parent)] = 1;
                    if (collect_blocks) pop_block(parent, v);
                }
            }
        }
        if (root_children >= 2) is_cut[static_cast<std::size_t>(root)] = 1;
    }
};

int first_member(const std::vector<int>& members, int excluded) {
    for (int v : members)
        if (v != excluded) return v;
    return -1;
}

bool remaining_complete(const UdgGraph& g, const std::vector<int>& members, int excluded) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] == excluded) continue;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[j] == excluded) continue;
            if (!g.adjacent(members[i], members[j])) return false;
        }
    }
    return true;
}

bool two_connected_impl(const UdgGraph& g, const std::vector<int>& members, int excluded) {
    int count = static_cast<int>(members.size());
    if (excluded >= 0 && std::binary_search(members.begin(), members.end(), excluded)) --count;
    if (count <= 2) return remaining_complete(g, members, excluded);
    InducedDfs dfs(g, members, excluded, false);
    dfs.run(first_member(members, excluded));
    if (dfs.visited != count) return false;
    for (int v : members)
        if (v != excluded && dfs.is_cut[static_cast<std::size_t>(v)]) return false;
    return true;
}

}  // namespace

BlockDecomposition block_decomposition(const UdgGraph& g, const NodeSet& subset) {
    if (subset.empty()) throw StructuralError("structural: block decomposition of empty subset");
    for (int v : subset)
        if (v < 0 || v >= g.size())
            throw std::invalid_argument("invalid-parameter: subset member outside graph");
    if (!induced_connected(g, subset))
        throw StructuralError("structural: induced subgraph is disconnected");

    BlockDecomposition out;
    if (subset.size() == 1) {
        out.blocks.push_back(subset);
        return out;
    }

    InducedDfs dfs(g, subset.ids(), -1, true);
    dfs.run(subset.ids().front());

    std::sort(dfs.blocks.begin(), dfs.blocks.end());
    std::vector<int> cuts;
    for (int v : subset)
        if (dfs.is_cut[static_cast<std::size_t>(v)]) cuts.push_back(v);
    out.cut_vertices = NodeSet(cuts);
    for (std::size_t i = 0; i < dfs.blocks.size(); ++i) {
        int cut_count = 0;
        for (int v : dfs.blocks[i])
            if (out.cut_vertices.contains(v)) ++cut_count;
        out.blocks.push_back(NodeSet(dfs.blocks[i]));
        if (cut_count == 1) out.leaf_blocks.push_back(static_cast<int>(i));
    }
    return out;
}

bool is_k_dominating(const UdgGraph& g, const NodeSet& d, int k) {
    if (k < 1) throw std::invalid_argument("invalid-parameter: k must be >= 1");
    for (int v = 0; v < g.size(); ++v) {
        if (d.contains(v)) continue;
        int count = 0;
        for (int w : g.neighbors(v))
            if (d.contains(w) && ++count >= k) break;
        if (count < k) return false;
    }
    return true;
}

namespace {

bool connected_excluding(const UdgGraph& g, const std::vector<int>& members,
                         const std::vector<char>& member_mask, int skip_a, int skip_b,
                         std::vector<char>& seen, std::vector<int>& stack) {
    int remaining = static_cast<int>(members.size());
    if (skip_a >= 0) --remaining;
    if (skip_b >= 0) --remaining;
    if (remaining <= 0) return true;
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    int start = -1;
    for (int v : members)
        if (v != skip_a && v != skip_b) {
            start = v;
            break;
        }
    seen[static_cast<std::size_t>(start)] = 1;
    stack.push_back(start);
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (w == skip_a || w == skip_b) continue;
            if (!member_mask[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            ++count;
            stack.push_back(w);
        }
    }
    return count == remaining;
}

}  // namespace

bool is_m_connected(const UdgGraph& g, const NodeSet& d, int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("invalid-parameter: m must be in {1,2,3}");
    if (d.empty()) throw std::invalid_argument("invalid-parameter: dominator set must be nonempty");
    for (int v : d)
        if (v < 0 || v >= g.size())
            throw std::invalid_argument("invalid-parameter: set member outside graph");
    if (d.size() <= m) return induced_complete(g, d);

    const auto& members = d.ids();
    std::vector<char> member_mask(static_cast<std::size_t>(g.size()), 0);
    for (int v : members) member_mask[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> stack;

    if (m == 1) return connected_excluding(g, members, member_mask, -1, -1, seen, stack);
    if (m == 2) {
        for (int v : members)
            if (!connected_excluding(g, members, member_mask, v, -1, seen, stack)) return false;
        return true;
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!connected_excluding(g, members, member_mask, members[i], members[j], seen, stack))
                return false;
    return true;
}

bool two_connected(const UdgGraph& g, const NodeSet& set) {
    return two_connected_impl(g, set.ids(), -1);
}

PointKind classify_point(const UdgGraph& g, const NodeSet& subset, int v) {
    if (!subset.contains(v)) throw StructuralError("structural: point not in subset");
    if (!two_connected(g, subset))
        throw StructuralError("structural: subset is not 2-connected");
    return two_connected_impl(g, subset.ids(), v) ? PointKind::good : PointKind::bad;
}

std::vector<int> bad_points(const UdgGraph& g, const NodeSet& d) {
    std::vector<int> bad;
    for (int v : d)
        if (!two_connected_impl(g, d.ids(), v)) bad.push_back(v);
    return bad;
}

}  // namespace mck
