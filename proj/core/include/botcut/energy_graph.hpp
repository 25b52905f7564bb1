#pragma once
// s-t flow network whose cut weights equal label-configuration energies.
// For each directed interaction edge with labeled energies
// theta_ab = labeled_link_energy(psi, {a=src label, b=dst label}) the
// construction adds
//   c(s,src) += theta00/2 + (theta01 - theta10)/4
//   c(src,t) += theta11/2 + (theta10 - theta01)/4
//   c(s,dst) += theta00/2 + (theta10 - theta01)/4
//   c(dst,t) += theta11/2 + (theta01 - theta10)/4
//   c(src,dst) = c(dst,src) += (theta10 + theta01 - theta00 - theta11)/2
// plus the node energies on the terminals. Cutting (s,u) puts u on the sink
// side (human); cutting (u,t) puts u on the source side (bot).

#include <cstdint>
#include <vector>

#include "botcut/energy.hpp"
#include "botcut/interaction_graph.hpp"

namespace botcut {

struct EnergyGraph {
    struct PairCapacity {
        std::uint32_t a;  // a < b
        std::uint32_t b;
        double capacity;  // symmetric: applies in both directions
    };

    std::size_t account_count = 0;
    std::vector<double> source_capacity;       // c(s, u_i)
    std::vector<double> sink_capacity;         // c(u_i, t)
    std::vector<PairCapacity> pair_capacities; // sorted by (a, b)

    double total_capacity() const;

    // Weight of the s-t cut induced by a labeling (bit set = bot = source
    // side). Equals configuration_energy for every labeling; the tests lean
    // on that identity.
    double cut_weight(const std::vector<std::uint8_t>& label_bits) const;
};

// Throws Error listing the violated constraints when params are invalid.
// All produced capacities are nonnegative for valid params; values within
// 1e-12 below zero (rounding) are clamped to 0.
EnergyGraph build_energy_graph(const InteractionGraph& g, const EnergyParams& params,
                               const NodePrior& prior = {});

}  // namespace botcut
