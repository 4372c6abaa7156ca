// Command line front end: topology generation, single backbone runs, exact
// search, LP export and the experiment sweeps.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mck/backbone.hpp"
#include "mck/experiments.hpp"
#include "mck/ilp.hpp"
#include "mck/oracle.hpp"
#include "mck/udg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnachievable = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("invalid-parameter: cannot write " + path);
    out << text;
}

struct GenOptions {
    std::string grid;
    int random_n = 0;
    double width = 100, height = 100;
    double radius = 0;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> weight_seed;
    bool allow_disconnected = false;
    int retries = 1000;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    if (opt.grid.empty() == (opt.random_n == 0))
        throw std::invalid_argument("invalid-parameter: choose exactly one of --grid / --random");
    mck::UdgGraph g = [&] {
        if (!opt.grid.empty()) {
            int rows = 0, cols = 0;
            double spacing = 0;
            if (std::sscanf(opt.grid.c_str(), "%dx%d:%lf", &rows, &cols, &spacing) != 3)
                throw std::invalid_argument("invalid-parameter: --grid expects RxC:S, e.g. 10x10:5");
            return mck::grid_topology(rows, cols, spacing, opt.radius, opt.weight_seed);
        }
        if (opt.allow_disconnected)
            return mck::random_topology(opt.random_n, opt.width, opt.height, opt.radius, opt.seed);
        return mck::random_connected_topology(opt.random_n, opt.width, opt.height, opt.radius,
                                              opt.seed, opt.retries);
    }();
    write_text(opt.out, mck::to_udg_text(g));
    return kExitOk;
}

struct RunOptions {
    std::string in;
    int m = 1, k = 1;
    int hop_threshold = 4;
    bool uncertainty = false;
    std::string out;
};

int run_backbone_cmd(const RunOptions& opt) {
    mck::UdgGraph g = mck::load_udg(opt.in);
    mck::BackboneConfig cfg{opt.k, opt.m, opt.hop_threshold, opt.uncertainty};
    mck::BackboneResult res = mck::build_backbone(g, cfg);
    write_text(opt.out, mck::format_report(res));
    return res.status == mck::BackboneStatus::ok ? kExitOk : kExitUnachievable;
}

struct OracleOptions {
    std::string in;
    int m = 1, k = 1;
    int size_cap = 0;  // 0 = graph size
};

int run_oracle(const OracleOptions& opt) {
    mck::UdgGraph g = mck::load_udg(opt.in);
    int cap = opt.size_cap == 0 ? g.size() : opt.size_cap;
    mck::OracleResult res = mck::min_mck_set(g, opt.m, opt.k, cap);
    std::ostringstream out;
    out << "feasible: " << (res.feasible ? "true" : "false") << "\n";
    out << "size: " << res.size << "\n";
    out << "optimum:";
    if (res.optimum)
        for (int v : *res.optimum) out << " " << v;
    out << "\n";
    out << "explored: " << res.explored << "\n";
    std::cout << out.str();
    return kExitOk;
}

struct IlpOptions {
    std::string in;
    bool cds_tree = false;
    bool mck_model = false;
    int bound = 0;  // 0 = graph size
    int m = 1, k = 1;
    std::string out;
};

int run_ilp(const IlpOptions& opt) {
    if (opt.cds_tree == opt.mck_model)
        throw std::invalid_argument("invalid-parameter: choose exactly one of --cds-tree / --mck");
    mck::UdgGraph g = mck::load_udg(opt.in);
    mck::IlpModel model = opt.cds_tree
                              ? mck::build_cds_tree_model(g, opt.bound == 0 ? g.size() : opt.bound)
                              : mck::build_mck_model(g, opt.m, opt.k);
    write_text(opt.out, mck::export_lp(model));
    return kExitOk;
}

struct ExpOptions {
    std::string config;
    std::string experiment;
    int trials = -1;
    long long seed = -1;
    std::string out;
};

int run_exp(const ExpOptions& opt) {
    mck::ExperimentConfig cfg;
    if (!opt.config.empty()) cfg = mck::load_experiment_config_file(opt.config);
    // flags win over the config file
    if (!opt.experiment.empty()) cfg.experiment = opt.experiment;
    if (opt.trials >= 1) cfg.trials = opt.trials;
    if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
    if (!opt.out.empty()) cfg.out = opt.out;
    if (cfg.experiment.empty())
        throw std::invalid_argument("invalid-parameter: no experiment selected");
    std::ostringstream csv;
    mck::run_experiment(cfg, csv);
    write_text(cfg.out, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-connected k-dominating backbone toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a topology file");
    cmd_gen->add_option("--grid", gen.grid, "grid spec RxC:S (rows x cols : spacing)");
    cmd_gen->add_option("--random", gen.random_n, "random topology with N nodes");
    cmd_gen->add_option("--width", gen.width, "plane width (random)");
    cmd_gen->add_option("--height", gen.height, "plane height (random)");
    cmd_gen->add_option("--radius", gen.radius, "transmission range")->required();
    cmd_gen->add_option("--seed", gen.seed, "generator seed");
    std::uint64_t wseed = 0;
    auto* wopt = cmd_gen->add_option("--weight-seed", wseed, "seeded grid weights");
    cmd_gen->add_flag("--allow-disconnected", gen.allow_disconnected,
                      "skip the connected-sample retry loop");
    cmd_gen->add_option("--retries", gen.retries, "connected-sample retry cap");
    cmd_gen->add_option("--out", gen.out, "output file (default stdout)");

    RunOptions run;
    auto* cmd_run = app.add_subcommand("run", "build a backbone and print the report");
    cmd_run->add_option("--in", run.in, "graph file")->required();
    cmd_run->add_option("--m", run.m, "connectivity target (1..3)");
    cmd_run->add_option("--k", run.k, "domination target (>= 1)");
    cmd_run->add_option("--hop-threshold", run.hop_threshold, "pairing distance bound");
    cmd_run->add_flag("--uncertainty", run.uncertainty, "enable the uncertainty cost constraint");
    cmd_run->add_option("--out", run.out, "report file (default stdout)");

    OracleOptions oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "exact minimum set (n <= 20)");
    cmd_oracle->add_option("--in", oracle.in, "graph file")->required();
    cmd_oracle->add_option("--m", oracle.m, "connectivity target (1..3)");
    cmd_oracle->add_option("--k", oracle.k, "domination target (>= 1)");
    cmd_oracle->add_option("--size-cap", oracle.size_cap, "largest cardinality to try");

    IlpOptions ilp;
    auto* cmd_ilp = app.add_subcommand("ilp", "export an LP model");
    cmd_ilp->add_option("--in", ilp.in, "graph file")->required();
    cmd_ilp->add_flag("--cds-tree", ilp.cds_tree, "spanning-tree backbone model");
    cmd_ilp->add_flag("--mck", ilp.mck_model, "degree-form m/k model");
    cmd_ilp->add_option("--bound", ilp.bound, "size bound for the tree model");
    cmd_ilp->add_option("--m", ilp.m, "connectivity target");
    cmd_ilp->add_option("--k", ilp.k, "domination target");
    cmd_ilp->add_option("--out", ilp.out, "output file (default stdout)");

    ExpOptions exp;
    auto* cmd_exp = app.add_subcommand("exp", "run an experiment sweep to CSV");
    cmd_exp->add_option("--config", exp.config, "key=value config file");
    cmd_exp->add_option("--experiment", exp.experiment, "experiment name override");
    cmd_exp->add_option("--trials", exp.trials, "trials per sweep point");
    cmd_exp->add_option("--seed", exp.seed, "base seed");
    cmd_exp->add_option("--out", exp.out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (wopt->count() > 0) gen.weight_seed = wseed;
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_run->parsed()) return run_backbone_cmd(run);
        if (cmd_oracle->parsed()) return run_oracle(oracle);
        if (cmd_ilp->parsed()) return run_ilp(ilp);
        if (cmd_exp->parsed()) return run_exp(exp);
    } catch (const mck::UnachievableConnectivity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnachievable;
    } catch (const mck::GenerationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mck::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
