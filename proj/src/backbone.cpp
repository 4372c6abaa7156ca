#include "mck/backbone.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace mck {

namespace {

struct Trace {
    std::vector<int> events;
    long ticks = 0;
    void event(int v) { events.push_back(v); }
    void tick() { ++ticks; }
};

void validate_config(const BackboneConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("invalid-parameter: k must be >= 1");
    if (cfg.m < 1 || cfg.m > 3) throw std::invalid_argument("invalid-parameter: m must be in {1,2,3}");
    if (cfg.hop_threshold < 2)
        throw std::invalid_argument("invalid-parameter: hop threshold must be >= 2");
}

// Grey-neighbor greedy over an arbitrary universe of nodes. Color events are
// emitted only for the global round-1 run; residual layers are bookkeeping.
NodeSet greedy_mis(const UdgGraph& g, const std::vector<int>& universe, Trace* tr,
                   bool emit_events) {
    enum : char { WHITE = 0, GREY = 1, BLACK = 2 };
    const int n = g.size();
    std::vector<char> in_universe(static_cast<std::size_t>(n), 0);
    for (int v : universe) in_universe[static_cast<std::size_t>(v)] = 1;
    std::vector<char> color(static_cast<std::size_t>(n), WHITE);
    std::vector<int> grey_neighbors(static_cast<std::size_t>(n), 0);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int v : universe) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (in_universe[static_cast<std::size_t>(w)]) ++d;
        degree[static_cast<std::size_t>(v)] = d;
    }

    auto blacken = [&](int v) {
        color[static_cast<std::size_t>(v)] = BLACK;
        if (tr) {
            if (emit_events) tr->event(v);
            tr->tick();
        }
        for (int w : g.neighbors(v)) {
            if (!in_universe[static_cast<std::size_t>(w)] ||
                color[static_cast<std::size_t>(w)] != WHITE)
                continue;
            color[static_cast<std::size_t>(w)] = GREY;
            if (tr && emit_events) tr->event(w);
            for (int x : g.neighbors(w))
                if (in_universe[static_cast<std::size_t>(x)]) ++grey_neighbors[static_cast<std::size_t>(x)];
        }
    };

    // Root: max degree within the universe, ties by min weight then min id.
    int root = -1;
    for (int v : universe) {
        if (root < 0 || degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(root)] ||
            (degree[static_cast<std::size_t>(v)] == degree[static_cast<std::size_t>(root)] &&
             g.weight(v) < g.weight(root)))
            root = v;
    }
    if (root < 0) return NodeSet();

    std::vector<int> members{root};
    blacken(root);
    while (true) {
        int pick = -1;
        for (int v : universe) {
            if (color[static_cast<std::size_t>(v)] != WHITE) continue;
            if (pick < 0 ||
                grey_neighbors[static_cast<std::size_t>(v)] > grey_neighbors[static_cast<std::size_t>(pick)] ||
                (grey_neighbors[static_cast<std::size_t>(v)] == grey_neighbors[static_cast<std::size_t>(pick)] &&
                 g.weight(v) < g.weight(pick)))
                pick = v;
        }
        if (pick < 0) break;
        members.push_back(pick);
        blacken(pick);
    }
    return NodeSet(std::move(members));
}

void validate_mis(const UdgGraph& g, const NodeSet& mis) {
    for (int u : mis)
        for (int w : g.neighbors(u))
            if (mis.contains(w))
                throw std::invalid_argument("invalid-parameter: set is not independent");
    for (int v = 0; v < g.size(); ++v) {
        if (mis.contains(v)) continue;
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (mis.contains(w)) {
                dominated = true;
                break;
            }
        if (!dominated) throw std::invalid_argument("invalid-parameter: set is not a maximal independent set");
    }
}

PathWeighting weighting_for(const BackboneConfig& cfg) {
    return cfg.uncertainty_constraint ? PathWeighting::weighted : PathWeighting::hops_only;
}

// Ensures every outside node is adjacent to its cheapest neighbor; keeps the
// backbone connected by pulling the outside node in first when the cheap
// neighbor would otherwise dangle.
void cap_node_costs(const UdgGraph& g, NodeSet& d, std::vector<char>& in_d, Trace* tr) {
    auto add = [&](int w) {
        if (d.insert(w)) {
            in_d[static_cast<std::size_t>(w)] = 1;
            if (tr) {
                tr->event(w);
                tr->tick();
            }
        }
    };
    for (int v = 0; v < g.size(); ++v) {
        if (in_d[static_cast<std::size_t>(v)]) continue;
        int cheapest = -1;
        for (int w : g.neighbors(v)) {
            if (cheapest < 0 || g.weight(w) < g.weight(cheapest)) cheapest = w;
        }
        if (cheapest < 0 || in_d[static_cast<std::size_t>(cheapest)]) continue;
        bool anchored = false;
        for (int x : g.neighbors(cheapest))
            if (in_d[static_cast<std::size_t>(x)]) {
                anchored = true;
                break;
            }
        if (!anchored) add(v);
        add(cheapest);
    }
}

NodeSet connect_mis_impl(const UdgGraph& g, const NodeSet& mis, const BackboneConfig& cfg,
                         Trace* tr) {
    NodeSet d = mis;
    std::vector<char> in_d(static_cast<std::size_t>(g.size()), 0);
    for (int v : d) in_d[static_cast<std::size_t>(v)] = 1;

    const auto& members = mis.ids();
    std::vector<std::vector<int>> dist;
    dist.reserve(members.size());
    for (int u : members) dist.push_back(hop_distances(g, u));

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int hops = dist[i][static_cast<std::size_t>(members[j])];
            if (hops < 0 || hops > cfg.hop_threshold) continue;
            if (tr) tr->tick();
            auto path = shortest_hop_path(g, members[i], members[j], weighting_for(cfg));
            for (std::size_t t = 1; t + 1 < path->size(); ++t) {
                int w = (*path)[t];
                if (d.insert(w)) {
                    in_d[static_cast<std::size_t>(w)] = 1;
                    if (tr) tr->event(w);
                }
            }
        }
    }

    if (!induced_connected(g, d))
        throw std::logic_error("internal-invariant: connected backbone expected after pairing");
    if (!is_k_dominating(g, d, 1))
        throw std::logic_error("internal-invariant: dominating backbone expected after pairing");

    if (cfg.uncertainty_constraint) cap_node_costs(g, d, in_d, tr);
    return d;
}

// Guard path: joins components of the induced set through the same pairwise
// rule. Unreachable on sane inputs because every residual-layer node is
// adjacent to an M_1 member already inside the set.
void reconnect_components(const UdgGraph& g, NodeSet& d, const BackboneConfig& cfg, Trace* tr) {
    while (!induced_connected(g, d)) {
        std::vector<int> label(static_cast<std::size_t>(g.size()), -1);
        int comps = 0;
        for (int s : d) {
            if (label[static_cast<std::size_t>(s)] != -1) continue;
            std::vector<int> stack{s};
            label[static_cast<std::size_t>(s)] = comps;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v))
                    if (d.contains(w) && label[static_cast<std::size_t>(w)] == -1) {
                        label[static_cast<std::size_t>(w)] = comps;
                        stack.push_back(w);
                    }
            }
            ++comps;
        }
        bool added = false;
        const auto& members = d.ids();
        for (std::size_t i = 0; i < members.size() && !added; ++i) {
            std::vector<int> dist_i = hop_distances(g, members[i]);
            for (std::size_t j = i + 1; j < members.size() && !added; ++j) {
                if (label[static_cast<std::size_t>(members[i])] ==
                    label[static_cast<std::size_t>(members[j])])
                    continue;
                int hops = dist_i[static_cast<std::size_t>(members[j])];
                if (hops < 0 || hops > cfg.hop_threshold) continue;
                auto path = shortest_hop_path(g, members[i], members[j], weighting_for(cfg));
                if (tr) tr->tick();
                for (std::size_t t = 1; t + 1 < path->size(); ++t) {
                    int w = (*path)[t];
                    if (d.insert(w) && tr) tr->event(w);
                }
                added = true;
            }
        }
        if (!added)
            throw std::logic_error("internal-invariant: residual layer could not be reconnected");
    }
}

std::pair<NodeSet, std::vector<NodeSet>> extend_k_domination_impl(const UdgGraph& g,
                                                                  const NodeSet& d_in,
                                                                  const NodeSet& m1,
                                                                  const BackboneConfig& cfg,
                                                                  Trace* tr, int* promotions) {
    NodeSet d = d_in;
    std::vector<NodeSet> layers{m1};
    std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
    for (int v : m1) covered[static_cast<std::size_t>(v)] = 1;

    for (int layer = 2; layer <= cfg.k; ++layer) {
        std::vector<int> residual;
        for (int v = 0; v < g.size(); ++v)
            if (!covered[static_cast<std::size_t>(v)]) residual.push_back(v);
        if (residual.empty()) {
            layers.emplace_back();
            continue;
        }
        std::vector<char> in_residual(static_cast<std::size_t>(g.size()), 0);
        for (int v : residual) in_residual[static_cast<std::size_t>(v)] = 1;

        NodeSet mi = greedy_mis(g, residual, tr, false);
        for (int v : mi) {
            if (promotions) {
                int res_deg = 0;
                for (int w : g.neighbors(v))
                    if (in_residual[static_cast<std::size_t>(w)]) ++res_deg;
                if (res_deg == 0 && g.degree(v) < cfg.k) ++*promotions;
            }
            if (d.insert(v) && tr) tr->event(v);
            covered[static_cast<std::size_t>(v)] = 1;
        }
        layers.push_back(mi);
        if (!induced_connected(g, d)) reconnect_components(g, d, cfg, tr);
    }

    if (!is_k_dominating(g, d, cfg.k))
        throw std::logic_error("internal-invariant: k-domination expected after residual layers");
    return {std::move(d), std::move(layers)};
}

// Cheapest ear for the given leaf block: a path in g from a non-cut block
// member to a set member outside the block whose interior avoids the set.
std::optional<std::vector<int>> find_best_ear(const UdgGraph& g, const NodeSet& d,
                                              const NodeSet& leaf, int cut) {
    const int n = g.size();
    std::vector<char> interior_ok(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) interior_ok[static_cast<std::size_t>(v)] = !d.contains(v);

    std::vector<int> sources;
    for (int v : leaf)
        if (v != cut) sources.push_back(v);

    // Min hop count over all (source, target) pairs first.
    int best_hops = -1;
    std::vector<std::pair<int, int>> best_pairs;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int u : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{u};
        dist[static_cast<std::size_t>(u)] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] != -1) continue;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                if (interior_ok[static_cast<std::size_t>(w)]) queue.push_back(w);
            }
        }
        for (int t : d) {
            if (leaf.contains(t)) continue;
            int h = dist[static_cast<std::size_t>(t)];
            if (h < 1) continue;
            if (best_hops < 0 || h < best_hops) {
                best_hops = h;
                best_pairs.clear();
            }
            if (h == best_hops) best_pairs.push_back({u, t});
        }
    }
    if (best_hops < 0) return std::nullopt;

    std::optional<std::vector<int>> best;
    double best_weight = std::numeric_limits<double>::infinity();
    for (auto [u, t] : best_pairs) {
        auto path = shortest_hop_path_filtered(g, u, t, PathWeighting::weighted, interior_ok);
        if (!path) continue;
        double w = 0.0;
        for (std::size_t i = 1; i + 1 < path->size(); ++i) w += g.weight((*path)[i]);
        if (!best || w < best_weight || (w == best_weight && *path < *best)) {
            best = path;
            best_weight = w;
        }
    }
    return best;
}

NodeSet augment_biconnected_impl(const UdgGraph& g, const NodeSet& d_in, Trace* tr) {
    NodeSet d = d_in;
    int guard = 0;
    while (!two_connected(g, d)) {
        if (++guard > g.size() + 4)
            throw std::logic_error("internal-invariant: ear augmentation failed to converge");
        BlockDecomposition dec = block_decomposition(g, d);
        if (dec.leaf_blocks.empty())
            throw std::logic_error("internal-invariant: no leaf block in a non-2-connected set");
        int pick = -1;
        for (int idx : dec.leaf_blocks) {
            if (pick < 0) {
                pick = idx;
                continue;
            }
            const auto& a = dec.blocks[static_cast<std::size_t>(idx)];
            const auto& b = dec.blocks[static_cast<std::size_t>(pick)];
            if (a.size() < b.size() ||
                (a.size() == b.size() && a.ids().front() < b.ids().front()))
                pick = idx;
        }
        const NodeSet& leaf = dec.blocks[static_cast<std::size_t>(pick)];
        int cut = -1;
        for (int v : leaf)
            if (dec.cut_vertices.contains(v)) {
                cut = v;
                break;
            }
        auto ear = find_best_ear(g, d, leaf, cut);
        if (!ear) throw UnachievableConnectivity(2);
        if (tr) tr->tick();
        for (std::size_t i = 1; i + 1 < ear->size(); ++i) {
            int w = (*ear)[i];
            if (d.insert(w) && tr) tr->event(w);
        }
    }
    return d;
}

NodeSet augment_triconnected_impl(const UdgGraph& g, const NodeSet& d_in, Trace* tr) {
    NodeSet d = d_in;
    int iterations = 0;
    while (true) {
        std::vector<int> bads = bad_points(g, d);
        if (bads.empty()) break;
        if (++iterations > g.size()) throw UnachievableConnectivity(3);
        const int b = bads.front();

        // Candidates sorted by (weight, id); first one that strictly lowers
        // the bad-point count without creating new bad points wins.
        std::vector<int> candidates;
        for (int w = 0; w < g.size(); ++w) {
            if (d.contains(w)) continue;
            int anchors = 0;
            for (int x : g.neighbors(w))
                if (x != b && d.contains(x)) ++anchors;
            if (anchors >= 2) candidates.push_back(w);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int c) {
            if (g.weight(a) != g.weight(c)) return g.weight(a) < g.weight(c);
            return a < c;
        });

        int chosen = -1;
        for (int w : candidates) {
            std::vector<int> after = bad_points(g, d.with(w));
            if (after.size() >= bads.size()) continue;
            bool created = false;
            for (int x : after)
                if (!std::binary_search(bads.begin(), bads.end(), x)) {
                    created = true;
                    break;
                }
            if (!created) {
                chosen = w;
                break;
            }
        }
        if (chosen >= 0) {
            if (tr) {
                tr->tick();
                tr->event(chosen);
            }
            d.insert(chosen);
            continue;
        }

        // Fallback: flood the blocking pair (b, c) with all their common
        // outside neighbors; c is the smallest cut vertex left by removing b.
        BlockDecomposition dec = block_decomposition(g, d.without(b));
        if (dec.cut_vertices.empty())
            throw std::logic_error("internal-invariant: bad point without a blocking cut vertex");
        int c = dec.cut_vertices.ids().front();
        std::vector<int> common;
        for (int w : g.neighbors(b))
            if (!d.contains(w) && g.adjacent(w, c)) common.push_back(w);
        if (common.empty()) throw UnachievableConnectivity(3);
        if (tr) tr->tick();
        for (int w : common)
            if (d.insert(w) && tr) tr->event(w);
    }
    if (!two_connected(g, d))
        throw std::logic_error("internal-invariant: 2-connectivity lost while clearing bad points");
    return d;
}

}  // namespace

NodeSet build_mis(const UdgGraph& g) {
    if (g.size() == 0) throw std::invalid_argument("invalid-parameter: empty graph");
    std::vector<int> universe = NodeSet::full(g.size()).ids();
    return greedy_mis(g, universe, nullptr, false);
}

NodeSet connect_mis(const UdgGraph& g, const NodeSet& mis, const BackboneConfig& cfg) {
    validate_config(cfg);
    if (mis.empty()) throw std::invalid_argument("invalid-parameter: empty independent set");
    if (!g.connected()) throw std::invalid_argument("invalid-parameter: graph must be connected");
    validate_mis(g, mis);
    return connect_mis_impl(g, mis, cfg, nullptr);
}

std::pair<NodeSet, std::vector<NodeSet>> extend_k_domination(const UdgGraph& g, const NodeSet& d,
                                                             const BackboneConfig& cfg) {
    validate_config(cfg);
    NodeSet m1 = build_mis(g);
    if (!m1.is_subset_of(d))
        throw std::invalid_argument("invalid-parameter: set does not contain the round-1 MIS");
    if (!induced_connected(g, d) || !is_k_dominating(g, d, 1))
        throw std::invalid_argument("invalid-parameter: set is not a connected dominating set");
    return extend_k_domination_impl(g, d, m1, cfg, nullptr, nullptr);
}

NodeSet augment_biconnected(const UdgGraph& g, const NodeSet& d) {
    if (d.empty()) throw std::invalid_argument("invalid-parameter: empty set");
    if (!induced_connected(g, d))
        throw StructuralError("structural: induced subgraph must be connected");
    return augment_biconnected_impl(g, d, nullptr);
}

NodeSet augment_triconnected(const UdgGraph& g, const NodeSet& d) {
    if (d.empty()) throw std::invalid_argument("invalid-parameter: empty set");
    if (!two_connected(g, d))
        throw StructuralError("structural: induced subgraph must be 2-connected");
    return augment_triconnected_impl(g, d, nullptr);
}

double max_uncertainty_cost(const UdgGraph& g, const NodeSet& d) {
    double worst = 0.0;
    for (int v = 0; v < g.size(); ++v) {
        if (d.contains(v)) continue;
        double best = std::numeric_limits<double>::infinity();
        for (int w : g.neighbors(v))
            if (d.contains(w)) best = std::min(best, g.weight(w));
        if (best != std::numeric_limits<double>::infinity()) worst = std::max(worst, best);
    }
    return worst;
}

BackboneResult build_backbone(const UdgGraph& g, const BackboneConfig& cfg) {
    validate_config(cfg);
    if (g.size() == 0) throw std::invalid_argument("invalid-parameter: empty graph");
    if (!g.connected()) throw std::invalid_argument("invalid-parameter: graph must be connected");

    BackboneResult res;
    Trace tr;
    std::vector<int> universe = NodeSet::full(g.size()).ids();
    NodeSet m1 = greedy_mis(g, universe, &tr, true);
    res.snapshots[1] = m1;
    res.mis_layers = {m1};

    NodeSet d = connect_mis_impl(g, m1, cfg, &tr);
    res.snapshots[2] = d;

    if (cfg.k >= 2) {
        auto [grown, layers] =
            extend_k_domination_impl(g, d, m1, cfg, &tr, &res.degree_deficient_promotions);
        d = std::move(grown);
        res.mis_layers = std::move(layers);
        res.snapshots[3] = d;
    }

    try {
        if (cfg.m >= 2) {
            d = augment_biconnected_impl(g, d, &tr);
            res.snapshots[4] = d;
        }
        if (cfg.m >= 3) {
            d = augment_triconnected_impl(g, d, &tr);
            res.snapshots[5] = d;
        }
    } catch (const UnachievableConnectivity& e) {
        res.status = BackboneStatus::unachievable;
        res.failed_target_m = e.target_m;
    }

    res.dominators = d;
    res.color_events = static_cast<long>(tr.events.size());
    res.event_nodes = std::move(tr.events);
    res.ticks = tr.ticks;
    res.max_node_cost = max_uncertainty_cost(g, d);

    // achieved_k: minimum dominator-neighbor count over outside nodes; the
    // target value when no node is outside.
    int outside = 0;
    int min_cover = std::numeric_limits<int>::max();
    for (int v = 0; v < g.size(); ++v) {
        if (d.contains(v)) continue;
        ++outside;
        int count = 0;
        for (int w : g.neighbors(v))
            if (d.contains(w)) ++count;
        min_cover = std::min(min_cover, count);
    }
    res.achieved_k = outside == 0 ? cfg.k : min_cover;

    // achieved_m is probed up to the configured target only.
    res.achieved_m = 0;
    for (int probe = 1; probe <= cfg.m; ++probe) {
        if (!is_m_connected(g, d, probe)) break;
        res.achieved_m = probe;
    }

    if (res.status == BackboneStatus::ok &&
        (res.achieved_k < cfg.k || res.achieved_m < cfg.m))
        throw std::logic_error("internal-invariant: targets not met despite successful rounds");
    return res;
}

std::string format_report(const BackboneResult& r) {
    std::ostringstream out;
    for (const auto& [round, snap] : r.snapshots) {
        out << "round " << round << ":";
        for (int v : snap) out << " " << v;
        out << "\n";
    }
    out << "achieved_m: " << r.achieved_m << "\n";
    out << "achieved_k: " << r.achieved_k << "\n";
    out << "color_events: " << r.color_events << "\n";
    out << "max_node_cost: " << fmt_double(r.max_node_cost) << "\n";
    out << "status: ";
    if (r.status == BackboneStatus::ok)
        out << "ok";
    else
        out << "unachievable_m" << r.failed_target_m;
    out << "\n";
    return out.str();
}

}  // namespace mck
