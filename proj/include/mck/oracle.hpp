// Exact minimum m-connected k-dominating set by size-ordered exhaustive
// search; ground truth for the greedy construction on small graphs.
#pragma once

#include <optional>

#include "mck/structure.hpp"
#include "mck/udg.hpp"

namespace mck {

struct OracleResult {
    std::optional<NodeSet> optimum;  // lexicographically first among the smallest
    int size = 0;
    bool feasible = false;
    long explored = 0;  // subsets examined, including pruned ones
};

// Enumerates subsets by increasing cardinality (lexicographic within each
// cardinality) and returns the first one that is k-dominating and
// m-connected. Requires n <= 20; subsets whose closed neighborhoods fail to
// cover the graph are skipped before the expensive checks.
OracleResult min_mck_set(const UdgGraph& g, int m, int k, int size_cap);

}  // namespace mck
