#include "mck/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mck/common.hpp"

namespace mck {

int IlpModel::add_variable(std::string name, VarKind kind, std::optional<double> lower,
                           std::optional<double> upper) {
    if (index_.count(name)) throw std::invalid_argument("invalid-parameter: duplicate variable " + name);
    int id = static_cast<int>(vars_.size());
    index_[name] = id;
    vars_.push_back({std::move(name), kind, lower, upper});
    return id;
}

int IlpModel::var(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("invalid-parameter: unknown variable " + name);
    return it->second;
}

void IlpModel::set_objective(std::vector<LinTerm> terms) { objective_ = std::move(terms); }

void IlpModel::add_constraint(std::string name, std::vector<LinTerm> terms, Relation rel,
                              double rhs, std::string comment) {
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const LinTerm& t) { return t.coef == 0.0; }),
                terms.end());
    if (terms.empty()) return;  // nothing to state
    constraints_.push_back({std::move(name), std::move(comment), std::move(terms), rel, rhs});
}

void IlpModel::validate() const {
    std::set<std::string> names;
    for (const auto& v : vars_)
        if (!names.insert(v.name).second)
            throw std::logic_error("internal-invariant: duplicate variable name " + v.name);
    names.clear();
    auto check_terms = [&](const std::vector<LinTerm>& terms) {
        for (const auto& t : terms)
            if (t.var < 0 || t.var >= static_cast<int>(vars_.size()))
                throw std::logic_error("internal-invariant: constraint references unknown variable");
    };
    check_terms(objective_);
    for (const auto& c : constraints_) {
        if (!names.insert(c.name).second)
            throw std::logic_error("internal-invariant: duplicate constraint name " + c.name);
        check_terms(c.terms);
    }
}

IlpModel build_cds_tree_model(const UdgGraph& g, int cds_size_bound) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("invalid-parameter: empty graph");
    if (cds_size_bound < 1) throw std::invalid_argument("invalid-parameter: size bound must be >= 1");
    if (!g.connected()) throw std::invalid_argument("invalid-parameter: graph must be connected");

    IlpModel model("spanning-tree backbone model");
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i)] = model.add_variable("a_" + std::to_string(i), VarKind::binary);
    // one arc variable per direction of each edge
    std::map<std::pair<int, int>, int> b;
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i))
            b[{i, j}] = model.add_variable("b_" + std::to_string(i) + "_" + std::to_string(j),
                                           VarKind::binary);
    std::vector<int> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<std::size_t>(i)] =
            model.add_variable("u_" + std::to_string(i), VarKind::continuous, 1.0, double(n));
    int c = model.add_variable("c", VarKind::continuous, 0.0, double(n));

    model.set_objective({{1.0, c}});

    std::vector<LinTerm> cost{{1.0, c}};
    for (int i = 0; i < n; ++i) cost.push_back({-1.0, a[static_cast<std::size_t>(i)]});
    model.add_constraint("cost_link", cost, Relation::eq, 0.0,
                         "cost equals the number of selected nodes");

    std::vector<LinTerm> bound;
    for (int i = 0; i < n; ++i) bound.push_back({1.0, a[static_cast<std::size_t>(i)]});
    model.add_constraint("size_bound", bound, Relation::le, double(cds_size_bound),
                         "selected set stays within the size budget");

    if (n == 1) {
        model.add_constraint("select_root", {{1.0, a[0]}}, Relation::eq, 1.0,
                             "a single node must select itself");
        model.validate();
        return model;
    }

    const int root = 0;
    bool first = true;
    for (const auto& [arc, var] : b) {
        if (arc.first == root) continue;
        model.add_constraint("arc_" + std::to_string(arc.first) + "_" + std::to_string(arc.second),
                             {{1.0, var}, {-1.0, a[static_cast<std::size_t>(arc.first)]}},
                             Relation::le, 0.0,
                             first ? "arcs leave selected nodes only (root exempt)" : "");
        first = false;
    }

    std::vector<LinTerm> root_out;
    for (int j : g.neighbors(root)) root_out.push_back({1.0, b[{root, j}]});
    model.add_constraint("root_out_min", root_out, Relation::ge, 1.0,
                         "the root sends at least one arc even as a leaf");
    std::vector<LinTerm> root_cap = root_out;
    root_cap.push_back({-double(n - 1), a[static_cast<std::size_t>(root)]});
    model.add_constraint("root_leaf_cap", root_cap, Relation::le, 1.0,
                         "an unselected root keeps a single outgoing arc");

    first = true;
    for (int j = 0; j < n; ++j) {
        std::vector<LinTerm> parent;
        for (int i : g.neighbors(j)) parent.push_back({1.0, b[{i, j}]});
        if (j == root) {
            model.add_constraint("parent_root", parent, Relation::eq, 0.0,
                                 "the root has no parent");
        } else {
            model.add_constraint("parent_" + std::to_string(j), parent, Relation::eq, 1.0,
                                 first ? "every other node has exactly one parent" : "");
            first = false;
        }
    }

    std::vector<LinTerm> tree;
    for (const auto& [arc, var] : b) tree.push_back({1.0, var});
    model.add_constraint("tree_edges", tree, Relation::eq, double(n - 1),
                         "the spanning tree uses n-1 arcs");

    model.add_constraint("order_root", {{1.0, u[static_cast<std::size_t>(root)]}}, Relation::eq,
                         1.0, "root ordering value");
    first = true;
    for (const auto& [arc, var] : b) {
        model.add_constraint(
            "order_" + std::to_string(arc.first) + "_" + std::to_string(arc.second),
            {{1.0, u[static_cast<std::size_t>(arc.first)]},
             {-1.0, u[static_cast<std::size_t>(arc.second)]},
             {double(n), var}},
            Relation::le, double(n - 1),
            first ? "ordering values increase along arcs, which forbids cycles" : "");
        first = false;
    }

    model.validate();
    return model;
}

IlpModel build_mck_model(const UdgGraph& g, int m, int k) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("invalid-parameter: empty graph");
    if (m < 1) throw std::invalid_argument("invalid-parameter: m must be >= 1");
    if (k < 1) throw std::invalid_argument("invalid-parameter: k must be >= 1");

    IlpModel model("degree-form backbone model");
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        x[static_cast<std::size_t>(s)] = model.add_variable("x_" + std::to_string(s), VarKind::binary);

    std::vector<LinTerm> obj;
    for (int s = 0; s < n; ++s) obj.push_back({1.0, x[static_cast<std::size_t>(s)]});
    model.set_objective(obj);

    bool first = true;
    for (int s = 0; s < n; ++s) {
        std::vector<LinTerm> terms;
        for (int t : g.neighbors(s)) terms.push_back({1.0, x[static_cast<std::size_t>(t)]});
        terms.push_back({1.0 - double(m), x[static_cast<std::size_t>(s)]});
        model.add_constraint(
            "conn_" + std::to_string(s), terms, Relation::ge, 0.0,
            first ? "selected nodes keep m-1 selected neighbors (self counts toward m)" : "");
        first = false;
    }
    first = true;
    for (int s = 0; s < n; ++s) {
        std::vector<LinTerm> terms;
        for (int t : g.neighbors(s)) terms.push_back({1.0, x[static_cast<std::size_t>(t)]});
        terms.push_back({double(k), x[static_cast<std::size_t>(s)]});
        model.add_constraint("dom_" + std::to_string(s), terms, Relation::ge, double(k),
                             first ? "outside nodes see at least k selected neighbors" : "");
        first = false;
    }

    model.validate();
    return model;
}

namespace {

std::string format_term(const LinTerm& t, const IlpModel& model, bool leading) {
    const double mag = t.coef < 0 ? -t.coef : t.coef;
    std::string out;
    if (leading)
        out = t.coef < 0 ? "- " : "";
    else
        out = t.coef < 0 ? " - " : " + ";
    if (mag != 1.0) out += fmt_double(mag) + " ";
    out += model.variables()[static_cast<std::size_t>(t.var)].name;
    return out;
}

void append_wrapped(std::string& text, const std::string& piece, std::size_t& line_len) {
    if (line_len + piece.size() > 220) {
        text += "\n     ";
        line_len = 5;
    }
    text += piece;
    line_len += piece.size();
}

std::string expression(const std::vector<LinTerm>& terms, const IlpModel& model,
                       std::size_t start_len) {
    std::string out;
    std::size_t len = start_len;
    for (std::size_t i = 0; i < terms.size(); ++i)
        append_wrapped(out, format_term(terms[i], model, i == 0), len);
    return out;
}

const char* relation_text(Relation rel) {
    switch (rel) {
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
        case Relation::eq: return "=";
    }
    return "=";
}

}  // namespace

std::string export_lp(const IlpModel& model) {
    model.validate();
    std::string out;
    if (!model.title().empty()) out += "\\ " + model.title() + "\n";
    out += "Minimize\n obj:";
    if (!model.objective().empty()) out += " " + expression(model.objective(), model, 6);
    out += "\nSubject To\n";
    for (const auto& c : model.constraints()) {
        if (!c.comment.empty()) out += "\\ " + c.comment + "\n";
        std::string line = " " + c.name + ": ";
        line += expression(c.terms, model, line.size());
        line += " ";
        line += relation_text(c.rel);
        line += " " + fmt_double(c.rhs) + "\n";
        out += line;
    }
    std::string bounds;
    for (const auto& v : model.variables()) {
        if (v.kind != VarKind::continuous) continue;
        if (v.lower && v.upper && *v.lower == *v.upper) {
            bounds += " " + v.name + " = " + fmt_double(*v.lower) + "\n";
        } else if (v.lower || v.upper) {
            bounds += " ";
            if (v.lower) bounds += fmt_double(*v.lower) + " <= ";
            bounds += v.name;
            if (v.upper) bounds += " <= " + fmt_double(*v.upper);
            bounds += "\n";
        }
    }
    if (!bounds.empty()) out += "Bounds\n" + bounds;
    std::string bins;
    std::size_t len = 0;
    for (const auto& v : model.variables()) {
        if (v.kind != VarKind::binary) continue;
        append_wrapped(bins, " " + v.name, len);
    }
    if (!bins.empty()) out += "Binaries\n" + bins + "\n";
    out += "End\n";
    return out;
}

LpSummary parse_lp(const std::string& text) {
    LpSummary summary;
    std::set<std::string> vars;
    std::set<std::string> bins;
    enum Section { none, objective, subject_to, bounds, binaries, done } section = none;
    std::istringstream in(text);
    std::string line;
    auto is_name = [](const std::string& tok) {
        return !tok.empty() && (std::isalpha(static_cast<unsigned char>(tok[0])) || tok[0] == '_');
    };
    auto keyword = [](const std::string& s) {
        std::string t;
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        return t;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '\\') continue;
        std::string kw = keyword(line);
        if (kw == "Minimize") {
            section = objective;
            continue;
        }
        if (kw == "SubjectTo") {
            section = subject_to;
            continue;
        }
        if (kw == "Bounds") {
            section = bounds;
            continue;
        }
        if (kw == "Binaries") {
            section = binaries;
            continue;
        }
        if (kw == "End") {
            section = done;
            break;
        }
        std::istringstream ls(line);
        std::string tok;
        bool fresh_statement = line.size() > 1 && line[0] == ' ' && line[1] != ' ';
        bool first_tok = true;
        while (ls >> tok) {
            if (first_tok && fresh_statement && tok.back() == ':') {
                if (section == subject_to) ++summary.constraints;
                first_tok = false;
                continue;
            }
            first_tok = false;
            if (tok == "+" || tok == "-" || tok == "<=" || tok == ">=" || tok == "=") continue;
            if (!is_name(tok)) continue;
            if (section == binaries)
                bins.insert(tok);
            else
                vars.insert(tok);
        }
    }
    if (section != done) throw std::invalid_argument("invalid-parameter: LP text missing End");
    for (const auto& b : bins) vars.insert(b);
    summary.variables = static_cast<int>(vars.size());
    summary.binaries = static_cast<int>(bins.size());
    return summary;
}

}  // namespace mck
