#include "mck/sim.hpp"

#include <algorithm>
#include <cmath>

namespace mck {

double loss_probability(const PacketModel& pm, double distance, double radius) {
    if (distance <= 0.0) return 0.0;
    double p = pm.alpha * std::pow(distance / radius, pm.beta);
    return std::min(1.0, std::max(0.0, p));
}

ConstructionCost construction_cost(const BackboneResult& result, const UdgGraph& g) {
    ConstructionCost cost;
    for (int v : result.event_nodes) cost.overhead += 1 + g.degree(v);
    cost.ticks = result.ticks;
    return cost;
}

SimMetrics disseminate(const UdgGraph& g, const NodeSet& d, long packet_bytes,
                       const PacketModel& pm, std::uint64_t seed, ConstructionCost construction,
                       const NodeSet* receivers) {
    if (packet_bytes < 0) throw std::invalid_argument("invalid-parameter: packet size must be >= 0");
    if (pm.chunk_size < 1) throw std::invalid_argument("invalid-parameter: chunk size must be >= 1");
    if (pm.retransmissions < 0)
        throw std::invalid_argument("invalid-parameter: retransmissions must be >= 0");

    NodeSet all_outside;
    if (!receivers) {
        std::vector<int> outside;
        for (int v = 0; v < g.size(); ++v)
            if (!d.contains(v)) outside.push_back(v);
        all_outside = NodeSet(std::move(outside));
        receivers = &all_outside;
    }
    std::vector<char> is_receiver(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> receiver_slot(static_cast<std::size_t>(g.size()), -1);
    {
        int slot = 0;
        for (int v : *receivers) {
            if (d.contains(v))
                throw std::invalid_argument("invalid-parameter: receiver inside the dominator set");
            bool dominated = false;
            for (int w : g.neighbors(v))
                if (d.contains(w)) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                throw std::invalid_argument("invalid-parameter: receiver has no adjacent dominator");
            is_receiver[static_cast<std::size_t>(v)] = 1;
            receiver_slot[static_cast<std::size_t>(v)] = slot++;
        }
    }

    const long chunks = packet_bytes == 0 ? 0 : (packet_bytes + pm.chunk_size - 1) / pm.chunk_size;
    const int attempts_per_copy = 1 + pm.retransmissions;

    SimMetrics metrics;
    metrics.receivers = receivers->size();
    std::vector<std::vector<char>> arrived(static_cast<std::size_t>(receivers->size()),
                                           std::vector<char>(static_cast<std::size_t>(chunks), 0));
    Rng rng(seed);
    long busiest_link = 0;
    for (int u : d) {
        for (int v : g.neighbors(u)) {
            if (!is_receiver[static_cast<std::size_t>(v)]) continue;
            const double p = loss_probability(pm, g.distance(u, v), g.radius());
            auto& got = arrived[static_cast<std::size_t>(receiver_slot[static_cast<std::size_t>(v)])];
            long link_ticks = 0;
            for (long chunk = 0; chunk < chunks; ++chunk) {
                for (int attempt = 0; attempt < attempts_per_copy; ++attempt) {
                    ++metrics.packets_sent;
                    ++link_ticks;
                    if (rng.unit() >= p) {
                        got[static_cast<std::size_t>(chunk)] = 1;
                        break;
                    }
                }
            }
            busiest_link = std::max(busiest_link, link_ticks);
        }
    }

    for (const auto& got : arrived) {
        bool complete = std::all_of(got.begin(), got.end(), [](char c) { return c != 0; });
        if (complete) ++metrics.receivers_served;
    }
    metrics.success_ratio =
        metrics.receivers == 0
            ? 1.0
            : static_cast<double>(metrics.receivers_served) / static_cast<double>(metrics.receivers);
    metrics.overhead = construction.overhead + metrics.packets_sent;
    metrics.latency = construction.ticks + busiest_link;
    return metrics;
}

}  // namespace mck
