#include "mck/experiments.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "mck/common.hpp"

namespace mck {

const char* kCsvHeader =
    "experiment,seed,topology,n,radius,spacing,packet_bytes,m_target,k_target,"
    "m_achieved,k_achieved,cds_size,dominator_fraction,overhead,latency,"
    "success_ratio,max_node_cost,status";

namespace {

struct CsvRow {
    std::string experiment;
    std::string seed;
    std::string topology;
    long n = 0;
    double radius = 0;
    double spacing = 0;
    long packet = 0;
    int m_target = 0;
    int k_target = 0;
    double m_achieved = 0;
    double k_achieved = 0;
    double cds = 0;
    double fraction = 0;
    double overhead = 0;
    double latency = 0;
    double success = 1.0;
    double maxcost = 0;
    std::string status;
};

void write_row(std::ostream& out, const CsvRow& r) {
    out << r.experiment << ',' << r.seed << ',' << r.topology << ',' << r.n << ','
        << fmt_double(r.radius) << ',' << fmt_double(r.spacing) << ',' << r.packet << ','
        << r.m_target << ',' << r.k_target << ',' << fmt_double(r.m_achieved) << ','
        << fmt_double(r.k_achieved) << ',' << fmt_double(r.cds) << ',' << fmt_double(r.fraction)
        << ',' << fmt_double(r.overhead) << ',' << fmt_double(r.latency) << ','
        << fmt_double(r.success) << ',' << fmt_double(r.maxcost) << ',' << r.status << '\n';
}

// Mean over the group's ok rows; skipped when none succeeded.
void append_mean(std::ostream& out, const std::vector<CsvRow>& group) {
    std::vector<const CsvRow*> ok;
    for (const auto& r : group)
        if (r.status == "ok") ok.push_back(&r);
    if (ok.empty()) return;
    CsvRow mean = *ok.front();
    mean.seed = "-";
    mean.status = "mean";
    double ma = 0, ka = 0, cds = 0, frac = 0, ov = 0, lat = 0, suc = 0, mc = 0;
    for (const CsvRow* r : ok) {
        ma += r->m_achieved;
        ka += r->k_achieved;
        cds += r->cds;
        frac += r->fraction;
        ov += r->overhead;
        lat += r->latency;
        suc += r->success;
        mc += r->maxcost;
    }
    const double c = static_cast<double>(ok.size());
    mean.m_achieved = ma / c;
    mean.k_achieved = ka / c;
    mean.cds = cds / c;
    mean.fraction = frac / c;
    mean.overhead = ov / c;
    mean.latency = lat / c;
    mean.success = suc / c;
    mean.maxcost = mc / c;
    write_row(out, mean);
}

std::string status_text(const BackboneResult& res) {
    if (res.status == BackboneStatus::ok) return "ok";
    return "unachievable_m" + std::to_string(res.failed_target_m);
}

int min_cover(const UdgGraph& g, const NodeSet& d) {
    int best = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (d.contains(v)) continue;
        int count = 0;
        for (int w : g.neighbors(v))
            if (d.contains(w)) ++count;
        if (best < 0 || count < best) best = count;
    }
    return best;
}

std::vector<int> sample_without_replacement(std::vector<int> pool, int count, std::uint64_t seed) {
    Rng rng(seed);
    count = std::min<int>(count, static_cast<int>(pool.size()));
    for (int i = 0; i < count; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(count));
    std::sort(pool.begin(), pool.end());
    return pool;
}

CsvRow backbone_row(const std::string& name, std::uint64_t seed, const std::string& topology,
                    const UdgGraph& g, const BackboneConfig& cfg, const BackboneResult& res,
                    const ConstructionCost& cost, double spacing, long packet) {
    CsvRow r;
    r.experiment = name;
    r.seed = std::to_string(seed);
    r.topology = topology;
    r.n = g.size();
    r.radius = g.radius();
    r.spacing = spacing;
    r.packet = packet;
    r.m_target = cfg.m;
    r.k_target = cfg.k;
    r.m_achieved = res.achieved_m;
    r.k_achieved = res.achieved_k;
    r.cds = res.dominators.size();
    r.fraction = static_cast<double>(res.dominators.size()) / g.size();
    r.overhead = static_cast<double>(cost.overhead);
    r.latency = static_cast<double>(cost.ticks);
    r.success = 1.0;  // no dissemination in construction-only studies
    r.maxcost = res.max_node_cost;
    r.status = status_text(res);
    return r;
}

CsvRow failure_row(const std::string& name, std::uint64_t seed, const std::string& topology,
                   long n, double radius, const BackboneConfig& cfg) {
    CsvRow r;
    r.experiment = name;
    r.seed = std::to_string(seed);
    r.topology = topology;
    r.n = n;
    r.radius = radius;
    r.m_target = cfg.m;
    r.k_target = cfg.k;
    r.success = 0.0;
    r.status = "gen_failure";
    return r;
}

void apply_sim(CsvRow& r, const SimMetrics& sm, long packet) {
    r.packet = packet;
    r.overhead = static_cast<double>(sm.overhead);
    r.latency = static_cast<double>(sm.latency);
    r.success = sm.success_ratio;
}

// ---- construction-size studies on the random plane -------------------------

void exp_cds_size(const ExperimentConfig& cfg, std::ostream& out) {
    int point = 0;
    for (int n : cfg.n_list) {
        for (double r : cfg.radius_list) {
            std::vector<CsvRow> group;
            for (int t = 0; t < cfg.trials; ++t) {
                std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(point),
                                              static_cast<std::uint64_t>(t));
                BackboneConfig bc{cfg.k, cfg.m, cfg.hop_threshold, false};
                try {
                    UdgGraph g = random_connected_topology(n, cfg.area_width, cfg.area_height, r, seed);
                    BackboneResult res = build_backbone(g, bc);
                    group.push_back(backbone_row("cds_size", seed, "random", g, bc, res,
                                                 construction_cost(res, g), 0.0, 0));
                } catch (const GenerationFailure&) {
                    group.push_back(failure_row("cds_size", seed, "random", n, r, bc));
                }
            }
            for (const auto& row : group) write_row(out, row);
            append_mean(out, group);
            ++point;
        }
    }
}

void exp_uncertainty(const ExperimentConfig& cfg, std::ostream& out, const std::string& name) {
    int point = 0;
    for (int n : cfg.n_list) {
        std::vector<CsvRow> off_rows, on_rows;
        for (int t = 0; t < cfg.trials; ++t) {
            std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(point),
                                          static_cast<std::uint64_t>(t));
            BackboneConfig off{cfg.k, cfg.m, cfg.hop_threshold, false};
            BackboneConfig on{cfg.k, cfg.m, cfg.hop_threshold, true};
            try {
                UdgGraph g =
                    random_connected_topology(n, cfg.area_width, cfg.area_height, cfg.radius, seed);
                BackboneResult r_off = build_backbone(g, off);
                BackboneResult r_on = build_backbone(g, on);
                off_rows.push_back(backbone_row(name + "_off", seed, "random", g, off, r_off,
                                                construction_cost(r_off, g), 0.0, 0));
                on_rows.push_back(backbone_row(name + "_on", seed, "random", g, on, r_on,
                                               construction_cost(r_on, g), 0.0, 0));
            } catch (const GenerationFailure&) {
                off_rows.push_back(failure_row(name + "_off", seed, "random", n, cfg.radius, off));
                on_rows.push_back(failure_row(name + "_on", seed, "random", n, cfg.radius, on));
            }
        }
        for (const auto& row : off_rows) write_row(out, row);
        append_mean(out, off_rows);
        for (const auto& row : on_rows) write_row(out, row);
        append_mean(out, on_rows);
        ++point;
    }
}

void exp_resilience_ladder(const ExperimentConfig& cfg, std::ostream& out) {
    for (std::size_t level = 0; level < cfg.ladder.size(); ++level) {
        auto [m, k] = cfg.ladder[level];
        BackboneConfig bc{k, m, cfg.hop_threshold, false};
        std::vector<CsvRow> group;
        for (int t = 0; t < cfg.trials; ++t) {
            // seeds shared across ladder levels: paired trials
            std::uint64_t seed = mix_seed(cfg.seed, 0, static_cast<std::uint64_t>(t));
            try {
                UdgGraph g = random_connected_topology(cfg.n_list.front(), cfg.area_width,
                                                       cfg.area_height, cfg.radius, seed);
                BackboneResult res = build_backbone(g, bc);
                group.push_back(backbone_row("resilience_ladder", seed, "random", g, bc, res,
                                             construction_cost(res, g), 0.0, 0));
            } catch (const GenerationFailure&) {
                group.push_back(failure_row("resilience_ladder", seed, "random",
                                            cfg.n_list.front(), cfg.radius, bc));
            }
        }
        for (const auto& row : group) write_row(out, row);
        append_mean(out, group);
    }
}

// ---- resilience studies -----------------------------------------------------

void sim_rows_for_backbone(const ExperimentConfig& cfg, std::ostream& out,
                           const std::string& name, const UdgGraph& g,
                           const BackboneConfig& bc, const BackboneResult& res,
                           double spacing, long packet, int point) {
    ConstructionCost cost = construction_cost(res, g);
    std::vector<CsvRow> group;
    for (int t = 0; t < cfg.sim_trials; ++t) {
        std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(point),
                                      static_cast<std::uint64_t>(t));
        SimMetrics sm = disseminate(g, res.dominators, packet, cfg.packet, seed, cost);
        CsvRow r = backbone_row(name, seed, spacing > 0 ? "grid" : "random", g, bc, res, cost,
                                spacing, packet);
        apply_sim(r, sm, packet);
        group.push_back(r);
    }
    for (const auto& row : group) write_row(out, row);
    append_mean(out, group);
}

void exp_network_size(const ExperimentConfig& cfg, std::ostream& out) {
    int point = 0;
    for (int dim : cfg.grid_dims) {
        UdgGraph g = grid_topology(dim, dim, cfg.grid_spacing,
                                   cfg.grid_radius_factor * cfg.grid_spacing);
        for (auto [m, k] : cfg.ladder) {
            BackboneConfig bc{k, m, cfg.hop_threshold, false};
            BackboneResult res = build_backbone(g, bc);
            sim_rows_for_backbone(cfg, out, "network_size", g, bc, res, cfg.grid_spacing,
                                  cfg.packet_bytes, point);
            ++point;
        }
    }
}

void exp_packet_size(const ExperimentConfig& cfg, std::ostream& out) {
    const int dim = cfg.grid_dims.front();
    UdgGraph g =
        grid_topology(dim, dim, cfg.grid_spacing, cfg.grid_radius_factor * cfg.grid_spacing);
    int point = 0;
    for (long packet : cfg.packet_list) {
        for (auto [m, k] : cfg.ladder) {
            BackboneConfig bc{k, m, cfg.hop_threshold, false};
            BackboneResult res = build_backbone(g, bc);
            sim_rows_for_backbone(cfg, out, "packet_size", g, bc, res, cfg.grid_spacing, packet,
                                  point);
            ++point;
        }
    }
}

void exp_density(const ExperimentConfig& cfg, std::ostream& out) {
    const int dim = cfg.grid_dims.front();
    int point = 0;
    for (double spacing : cfg.spacing_list) {
        UdgGraph g = grid_topology(dim, dim, spacing, cfg.density_radius);
        if (!g.connected()) {
            for (auto [m, k] : cfg.ladder) {
                BackboneConfig bc{k, m, cfg.hop_threshold, false};
                CsvRow r = failure_row("density", 0, "grid", g.size(), cfg.density_radius, bc);
                r.spacing = spacing;
                write_row(out, r);
                ++point;
            }
            continue;
        }
        for (auto [m, k] : cfg.ladder) {
            BackboneConfig bc{k, m, cfg.hop_threshold, false};
            BackboneResult res = build_backbone(g, bc);
            sim_rows_for_backbone(cfg, out, "density", g, bc, res, spacing, cfg.packet_bytes,
                                  point);
            ++point;
        }
    }
}

void exp_random_topology(const ExperimentConfig& cfg, std::ostream& out) {
    for (std::size_t level = 0; level < cfg.ladder.size(); ++level) {
        auto [m, k] = cfg.ladder[level];
        BackboneConfig bc{k, m, cfg.hop_threshold, false};
        std::vector<CsvRow> group;
        for (int t = 0; t < cfg.trials; ++t) {
            std::uint64_t seed = mix_seed(cfg.seed, 0, static_cast<std::uint64_t>(t));
            try {
                UdgGraph g = random_connected_topology(cfg.random_n, cfg.random_w, cfg.random_h,
                                                       cfg.random_radius, seed);
                BackboneResult res = build_backbone(g, bc);
                ConstructionCost cost = construction_cost(res, g);
                SimMetrics sm = disseminate(g, res.dominators, cfg.packet_bytes, cfg.packet,
                                            mix_seed(cfg.seed, 1, static_cast<std::uint64_t>(t)),
                                            cost);
                CsvRow r = backbone_row("random_topology", seed, "random", g, bc, res, cost, 0.0,
                                        cfg.packet_bytes);
                apply_sim(r, sm, cfg.packet_bytes);
                group.push_back(r);
            } catch (const GenerationFailure&) {
                group.push_back(failure_row("random_topology", seed, "random", cfg.random_n,
                                            cfg.random_radius, bc));
            }
        }
        for (const auto& row : group) write_row(out, row);
        append_mean(out, group);
    }
}

void exp_dominator_count(const ExperimentConfig& cfg, std::ostream& out) {
    const int dim = cfg.grid_dims.front();
    UdgGraph g =
        grid_topology(dim, dim, cfg.grid_spacing, cfg.grid_radius_factor * cfg.grid_spacing);
    BackboneConfig bc{cfg.k, cfg.m, cfg.hop_threshold, false};
    BackboneResult base = build_backbone(g, bc);
    ConstructionCost base_cost = construction_cost(base, g);
    int point = 0;
    for (int extra : cfg.dominator_extra) {
        std::vector<int> outside;
        for (int v = 0; v < g.size(); ++v)
            if (!base.dominators.contains(v)) outside.push_back(v);
        std::vector<int> promoted = sample_without_replacement(
            outside, extra, mix_seed(cfg.seed, 0xD0, static_cast<std::uint64_t>(extra)));
        NodeSet d = base.dominators;
        ConstructionCost cost = base_cost;
        for (int v : promoted) {
            d.insert(v);
            cost.overhead += 1 + g.degree(v);  // promoted nodes announce themselves
            cost.ticks += 1;
        }
        std::vector<CsvRow> group;
        for (int t = 0; t < cfg.sim_trials; ++t) {
            std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(point),
                                          static_cast<std::uint64_t>(t));
            SimMetrics sm = disseminate(g, d, cfg.packet_bytes, cfg.packet, seed, cost);
            CsvRow r = backbone_row("dominator_count", seed, "grid", g, bc, base, cost,
                                    cfg.grid_spacing, cfg.packet_bytes);
            r.cds = d.size();
            r.fraction = static_cast<double>(d.size()) / g.size();
            r.k_achieved = std::max(0, min_cover(g, d));
            r.maxcost = max_uncertainty_cost(g, d);
            apply_sim(r, sm, cfg.packet_bytes);
            group.push_back(r);
        }
        for (const auto& row : group) write_row(out, row);
        append_mean(out, group);
        ++point;
    }
}

void exp_dominatee_count(const ExperimentConfig& cfg, std::ostream& out) {
    const int dim = cfg.grid_dims.front();
    UdgGraph g =
        grid_topology(dim, dim, cfg.grid_spacing, cfg.grid_radius_factor * cfg.grid_spacing);
    BackboneConfig bc{cfg.k, cfg.m, cfg.hop_threshold, false};
    BackboneResult base = build_backbone(g, bc);
    ConstructionCost cost = construction_cost(base, g);
    std::vector<int> outside;
    for (int v = 0; v < g.size(); ++v)
        if (!base.dominators.contains(v)) outside.push_back(v);
    int point = 0;
    for (int count : cfg.dominatee_counts) {
        NodeSet receivers(sample_without_replacement(
            outside, count, mix_seed(cfg.seed, 0xEE, static_cast<std::uint64_t>(count))));
        std::vector<CsvRow> group;
        for (int t = 0; t < cfg.sim_trials; ++t) {
            std::uint64_t seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(point),
                                          static_cast<std::uint64_t>(t));
            SimMetrics sm =
                disseminate(g, base.dominators, cfg.packet_bytes, cfg.packet, seed, cost, &receivers);
            CsvRow r = backbone_row("dominatee_count", seed, "grid", g, bc, base, cost,
                                    cfg.grid_spacing, cfg.packet_bytes);
            apply_sim(r, sm, cfg.packet_bytes);
            group.push_back(r);
        }
        for (const auto& row : group) write_row(out, row);
        append_mean(out, group);
        ++point;
    }
}

}  // namespace

void run_experiment(const ExperimentConfig& cfg, std::ostream& csv) {
    csv << kCsvHeader << '\n';
    const std::string& e = cfg.experiment;
    if (e == "cds_size")
        exp_cds_size(cfg, csv);
    else if (e == "uncertainty" || e == "max_cost")
        exp_uncertainty(cfg, csv, e);
    else if (e == "resilience_ladder")
        exp_resilience_ladder(cfg, csv);
    else if (e == "network_size")
        exp_network_size(cfg, csv);
    else if (e == "packet_size")
        exp_packet_size(cfg, csv);
    else if (e == "density")
        exp_density(cfg, csv);
    else if (e == "random_topology")
        exp_random_topology(cfg, csv);
    else if (e == "dominator_count")
        exp_dominator_count(cfg, csv);
    else if (e == "dominatee_count")
        exp_dominatee_count(cfg, csv);
    else
        throw std::invalid_argument("invalid-parameter: unknown experiment " + e);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig load_experiment_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto pos = t.find('=');
        if (pos == std::string::npos)
            throw std::invalid_argument("invalid-parameter: config line " + std::to_string(lineno) +
                                        " is not key=value");
        std::string key = trim(t.substr(0, pos));
        std::string value = trim(t.substr(pos + 1));
        auto ints = [&] {
            std::vector<int> xs;
            for (const auto& p : split(value, ',')) xs.push_back(std::stoi(trim(p)));
            return xs;
        };
        auto doubles = [&] {
            std::vector<double> xs;
            for (const auto& p : split(value, ',')) xs.push_back(std::stod(trim(p)));
            return xs;
        };
        auto longs = [&] {
            std::vector<long> xs;
            for (const auto& p : split(value, ',')) xs.push_back(std::stol(trim(p)));
            return xs;
        };
        if (key == "experiment") cfg.experiment = value;
        else if (key == "trials") cfg.trials = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "n_list") cfg.n_list = ints();
        else if (key == "radius_list") cfg.radius_list = doubles();
        else if (key == "area_width") cfg.area_width = std::stod(value);
        else if (key == "area_height") cfg.area_height = std::stod(value);
        else if (key == "radius") cfg.radius = std::stod(value);
        else if (key == "m") cfg.m = std::stoi(value);
        else if (key == "k") cfg.k = std::stoi(value);
        else if (key == "hop_threshold") cfg.hop_threshold = std::stoi(value);
        else if (key == "grid_dims") cfg.grid_dims = ints();
        else if (key == "grid_spacing") cfg.grid_spacing = std::stod(value);
        else if (key == "grid_radius_factor") cfg.grid_radius_factor = std::stod(value);
        else if (key == "spacing_list") cfg.spacing_list = doubles();
        else if (key == "density_radius") cfg.density_radius = std::stod(value);
        else if (key == "packet_list") cfg.packet_list = longs();
        else if (key == "packet_bytes") cfg.packet_bytes = std::stol(value);
        else if (key == "chunk_size") cfg.packet.chunk_size = std::stol(value);
        else if (key == "alpha") cfg.packet.alpha = std::stod(value);
        else if (key == "beta") cfg.packet.beta = std::stod(value);
        else if (key == "retransmissions") cfg.packet.retransmissions = std::stoi(value);
        else if (key == "sim_trials") cfg.sim_trials = std::stoi(value);
        else if (key == "dominator_extra") cfg.dominator_extra = ints();
        else if (key == "dominatee_counts") cfg.dominatee_counts = ints();
        else if (key == "random_n") cfg.random_n = std::stoi(value);
        else if (key == "random_w") cfg.random_w = std::stod(value);
        else if (key == "random_h") cfg.random_h = std::stod(value);
        else if (key == "random_radius") cfg.random_radius = std::stod(value);
        else if (key == "ladder") {
            cfg.ladder.clear();
            for (const auto& p : split(value, ',')) {
                auto mk = split(trim(p), ':');
                if (mk.size() != 2)
                    throw std::invalid_argument("invalid-parameter: ladder entries are m:k");
                cfg.ladder.push_back({std::stoi(trim(mk[0])), std::stoi(trim(mk[1]))});
            }
        } else if (key == "out")
            cfg.out = value;
        else
            throw std::invalid_argument("invalid-parameter: unknown config key " + key);
    }
    if (cfg.trials < 1) throw std::invalid_argument("invalid-parameter: trials must be >= 1");
    return cfg;
}

ExperimentConfig load_experiment_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("invalid-parameter: cannot open config " + path);
    return load_experiment_config(in);
}

}  // namespace mck
