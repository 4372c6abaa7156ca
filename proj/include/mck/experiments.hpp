// Seeded experiment sweeps with a fixed CSV schema: backbone size studies on
// random topologies and resilience studies (overhead / latency / success
// ratio) on grid and random topologies.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mck/sim.hpp"

namespace mck {

struct ExperimentConfig {
    std::string experiment;  // cds_size | uncertainty | max_cost | resilience_ladder |
                             // network_size | packet_size | density | random_topology |
                             // dominator_count | dominatee_count
    int trials = 100;
    std::uint64_t seed = 1;

    // random plane studies
    std::vector<int> n_list{50, 100, 150};
    std::vector<double> radius_list{20, 25, 30};
    double area_width = 100, area_height = 100;
    double radius = 25;
    int m = 1, k = 1;
    int hop_threshold = 4;

    // grid studies
    std::vector<int> grid_dims{10, 15, 20, 25, 30};
    double grid_spacing = 5;
    double grid_radius_factor = 2.0;  // grid radius = factor * spacing
    std::vector<double> spacing_list{5, 10, 15, 20, 25};
    double density_radius = 26;  // fixed range while spacing grows

    // dissemination
    std::vector<long> packet_list{256, 512, 1024, 2048, 4096};
    long packet_bytes = 1024;
    PacketModel packet;
    int sim_trials = 20;

    // post-processing sweeps
    std::vector<int> dominator_extra{0, 5, 10, 15, 20};
    std::vector<int> dominatee_counts{10, 20, 30, 40};

    // uniform random topology study
    int random_n = 100;
    double random_w = 50, random_h = 100;
    double random_radius = 15;

    std::vector<std::pair<int, int>> ladder{{1, 1}, {1, 2}, {2, 2}, {3, 3}};

    std::string out;  // CSV path; empty = stdout
};

// key=value lines, lists comma-separated, '#' comments. Unknown keys fail.
ExperimentConfig load_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config_file(const std::string& path);

extern const char* kCsvHeader;

// Writes the header plus one row per trial, mean rows appended per sweep
// group. Re-running with the same config yields byte-identical output.
void run_experiment(const ExperimentConfig& cfg, std::ostream& csv);

}  // namespace mck
