// Deterministic packet-level dissemination over a backbone: construction
// message cost plus a distance-dependent chunk loss model, yielding the
// overhead / latency / success-ratio triple.
#pragma once

#include <cstdint>

#include "mck/backbone.hpp"
#include "mck/udg.hpp"

namespace mck {

struct PacketModel {
    long chunk_size = 256;    // bytes per chunk
    double alpha = 0.3;       // loss coefficient
    double beta = 2.0;        // loss exponent
    int retransmissions = 0;  // extra attempts per chunk copy
};

// p(d) = min(1, alpha * (d / r)^beta): zero at distance zero, non-decreasing.
double loss_probability(const PacketModel& pm, double distance, double radius);

struct ConstructionCost {
    long overhead = 0;
    long ticks = 0;
};

// Each color event costs one announcement plus one notification per neighbor
// of the recolored node; ticks are the recorded round iterations.
ConstructionCost construction_cost(const BackboneResult& result, const UdgGraph& g);

struct SimMetrics {
    long overhead = 0;           // construction messages + data packets sent
    long latency = 0;            // construction ticks + busiest link's serialized ticks
    double success_ratio = 1.0;  // receivers that obtained the full payload
    long packets_sent = 0;       // data packets only
    long receivers = 0;
    long receivers_served = 0;
};

// Every dominator pushes ceil(packet_bytes / chunk_size) chunks to each
// adjacent receiver, one transmission per link per tick; a chunk copy is
// lost independently with probability p(distance). A receiver counts as
// served when every chunk index arrived through at least one adjacent
// dominator. `receivers` defaults to all nodes outside d; d must dominate
// them. Deterministic per seed.
SimMetrics disseminate(const UdgGraph& g, const NodeSet& d, long packet_bytes,
                       const PacketModel& pm, std::uint64_t seed,
                       ConstructionCost construction = {}, const NodeSet* receivers = nullptr);

}  // namespace mck
