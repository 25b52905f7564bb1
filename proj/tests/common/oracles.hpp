#pragma once
// Test-only oracles, deliberately independent of the solver path: exhaustive
// enumeration over label configurations for MAP and min-marginals, a
// quadratic ECDF sup-difference for the KS statistic, pairwise concordance
// for AUC, and random graph / parameter generators.

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "botcut/energy.hpp"
#include "botcut/interaction_graph.hpp"

namespace botcut::testing {

struct RandomGraphSpec {
    std::uint32_t min_nodes = 1;
    std::uint32_t max_nodes = 8;
    std::uint64_t max_weight = 20;
    double edge_probability = 0.3;
};

// Every node is registered (via a dropped self-loop record), so isolated
// nodes occur naturally.
InteractionGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

// Rejection-samples until validate() accepts; delta drawn from the given
// choices (subject to feasibility).
EnergyParams random_valid_params(std::mt19937_64& rng, std::span<const double> delta_choices);

struct BruteForceResult {
    double min_energy;
    std::vector<std::uint8_t> labeling;  // first minimizer in enumeration order
};

BruteForceResult brute_force_map(const InteractionGraph& g, const EnergyParams& params,
                                 const NodePrior& prior = {});

// (E0, E1) for one node by constrained enumeration.
std::pair<double, double> brute_force_min_marginals(const InteractionGraph& g,
                                                    const EnergyParams& params,
                                                    std::uint32_t node,
                                                    const NodePrior& prior = {});

// sup over all sample points of |ECDF_a - ECDF_b|, evaluated quadratically.
double quadratic_ks(const std::vector<double>& a, const std::vector<double>& b);

// Mann-Whitney concordance with half credit for ties: P(score_pos > score_neg).
double concordance_auc(std::span<const std::pair<double, bool>> scored);

}  // namespace botcut::testing
