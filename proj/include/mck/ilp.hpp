// Integer-program builders for the backbone problem and a CPLEX-LP-format
// serializer. Models are exported for external solvers; nothing is solved
// in-process.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mck/udg.hpp"

namespace mck {

enum class VarKind { binary, continuous };

struct IlpVariable {
    std::string name;
    VarKind kind = VarKind::binary;
    std::optional<double> lower;
    std::optional<double> upper;
};

struct LinTerm {
    double coef = 0.0;
    int var = -1;
};

enum class Relation { le, ge, eq };

struct IlpConstraint {
    std::string name;
    std::string comment;  // emitted as a "\ ..." line when nonempty
    std::vector<LinTerm> terms;
    Relation rel = Relation::le;
    double rhs = 0.0;
};

class IlpModel {
  public:
    explicit IlpModel(std::string title = {}) : title_(std::move(title)) {}

    int add_variable(std::string name, VarKind kind, std::optional<double> lower = {},
                     std::optional<double> upper = {});
    int var(const std::string& name) const;
    void set_objective(std::vector<LinTerm> terms);
    void add_constraint(std::string name, std::vector<LinTerm> terms, Relation rel, double rhs,
                        std::string comment = {});

    const std::string& title() const { return title_; }
    const std::vector<IlpVariable>& variables() const { return vars_; }
    const std::vector<LinTerm>& objective() const { return objective_; }
    const std::vector<IlpConstraint>& constraints() const { return constraints_; }

    // Unique names; every referenced variable declared.
    void validate() const;

  private:
    std::string title_;
    std::vector<IlpVariable> vars_;
    std::map<std::string, int> index_;
    std::vector<LinTerm> objective_;
    std::vector<IlpConstraint> constraints_;
};

// Spanning-tree formulation: arcs leave selected nodes (the root may keep a
// single outgoing arc as a leaf), every non-root has exactly one parent, the
// tree has n-1 arcs and an MTZ ordering kills cycles. Minimizes the number
// of selected (internal) nodes subject to the size bound.
IlpModel build_cds_tree_model(const UdgGraph& g, int cds_size_bound);

// Degree formulation: one binary per node; selected nodes keep m-1 selected
// neighbors (the node itself counts toward m), outside nodes see at least k
// selected neighbors. This is the adjacency-count relaxation of true
// m-vertex-connectivity; the gap is deliberate and surfaced in tests.
IlpModel build_mck_model(const UdgGraph& g, int m, int k);

// CPLEX LP text: Minimize / Subject To / Bounds / Binaries / End, in
// declaration order; deterministic output.
std::string export_lp(const IlpModel& model);

struct LpSummary {
    int variables = 0;
    int constraints = 0;
    int binaries = 0;
};

// Minimal reader for the exported grammar; used for round-trip checks.
LpSummary parse_lp(const std::string& text);

}  // namespace mck
