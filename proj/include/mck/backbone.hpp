// Five-round greedy construction of an m-connected k-dominating backbone:
//   1. maximal independent set by grey-neighbor greedy
//   2. pairwise shortest-path connection of MIS nodes (hop threshold)
//   3. k-1 further MIS layers over the residual graph
//   4. leaf-block ear augmentation to 2-connectivity
//   5. bad-point elimination to 3-connectivity
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mck/structure.hpp"
#include "mck/udg.hpp"

namespace mck {

struct BackboneConfig {
    int k = 1;                            // domination target, >= 1
    int m = 1;                            // connectivity target, in {1,2,3}
    int hop_threshold = 4;                // pairwise connection distance bound
    bool uncertainty_constraint = false;  // weight-aware paths + per-node cost capping
};

enum class BackboneStatus { ok, unachievable };

struct BackboneResult {
    NodeSet dominators;
    std::map<int, NodeSet> snapshots;  // round number -> dominators after that round
    std::vector<NodeSet> mis_layers;   // M_1 .. M_k, pairwise disjoint
    int achieved_k = 0;
    int achieved_m = 0;
    long color_events = 0;
    double max_node_cost = 0.0;
    BackboneStatus status = BackboneStatus::ok;
    int failed_target_m = 0;  // connectivity target that could not be met
    long ticks = 0;                // loop-body executions across all rounds
    std::vector<int> event_nodes;  // recolored node per color event, in order
    int degree_deficient_promotions = 0;
};

// Round 1. Root is the max-degree node (ties: min weight, then min id); the
// loop blackens the white node with the most grey neighbors (same ties).
NodeSet build_mis(const UdgGraph& g);

// Round 2. Joins every MIS pair within cfg.hop_threshold hops through its
// shortest path; with the uncertainty flag the tie-break minimizes summed
// node weight and each outside node additionally gets its cheapest neighbor
// promoted into the set.
NodeSet connect_mis(const UdgGraph& g, const NodeSet& mis, const BackboneConfig& cfg);

// Round 3. Adds MIS layers M_2..M_k over the residual graph. Nodes whose
// degree is below k end up inside the set (isolated-residual rule); their
// count is reported through BackboneResult. Returns the grown set and all
// layers including M_1.
std::pair<NodeSet, std::vector<NodeSet>> extend_k_domination(const UdgGraph& g, const NodeSet& d,
                                                             const BackboneConfig& cfg);

// Round 4. Repeatedly attaches the cheapest ear from the smallest leaf
// block to the rest of the set; throws UnachievableConnectivity(2) when no
// ear exists.
NodeSet augment_biconnected(const UdgGraph& g, const NodeSet& d);

// Round 5. While bad points remain, admits the best outside candidate that
// strictly reduces the bad-point count without creating new ones; falls
// back to all common neighbors of the blocking pair. Throws
// UnachievableConnectivity(3) when the count cannot reach zero.
NodeSet augment_triconnected(const UdgGraph& g, const NodeSet& d);

BackboneResult build_backbone(const UdgGraph& g, const BackboneConfig& cfg);

// Max over outside nodes of the min weight among their adjacent dominators.
double max_uncertainty_cost(const UdgGraph& g, const NodeSet& d);

// Line-oriented report: one line per executed round (sorted snapshot ids),
// then achieved_m, achieved_k, color_events, max_node_cost, status.
std::string format_report(const BackboneResult& r);

}  // namespace mck
