#pragma once
// MAP inference: exact min cut on the energy graph gives the optimal bot
// labeling; per-node min-marginals (re-solves with one terminal clamped by a
// large capacity) give the energies behind the marginal bot probability
// p = 1 / (1 + exp(E1 - E0)).

#include <cstdint>
#include <utility>
#include <vector>

#include "botcut/energy_graph.hpp"
#include "botcut/interaction_graph.hpp"

namespace botcut {

struct CutResult {
    std::vector<std::uint8_t> labels;  // bit set = bot = source side
    double min_cut_value = 0.0;
    double max_flow_value = 0.0;
};

// Exact max flow / min cut. Nodes indifferent between the two sides (for
// example isolated nodes without a prior) end up on the sink side, human.
CutResult solve_min_cut(const EnergyGraph& eg);

// (E0, E1): the minimum configuration energy with the node clamped to human
// respectively bot. min(E0, E1) equals the global min cut value. Throws
// Error for an out-of-range node.
std::pair<double, double> min_marginals(const EnergyGraph& eg, std::uint32_t node);

// p_bot = 1 / (1 + exp(E1 - E0)).
double marginal_probability(double e0, double e1);

struct DetectOptions {
    bool marginals = true;  // criterion-sized runs may skip the per-node solves
    unsigned workers = 0;   // 0 = hardware concurrency; used only for marginals
};

struct DetectionResult {
    std::vector<std::uint8_t> map_bot;  // per node, bit set = bot
    std::vector<double> p_bot;          // per node; empty when marginals are off
    double min_cut_value = 0.0;
    double max_flow_value = 0.0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double wall_seconds = 0.0;
};

// build_energy_graph + solve_min_cut + (optionally) one clamped re-solve per
// node. The clamped re-solves are independent and run on a worker pool;
// results are written by node index, so the output is deterministic.
DetectionResult detect(const InteractionGraph& g, const EnergyParams& params,
                       const NodePrior& prior = {}, const DetectOptions& options = {});

}  // namespace botcut
