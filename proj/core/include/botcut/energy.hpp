#pragma once
// Ising energy model over the interaction graph: a sigmoid-gated base link
// energy per directed retweet edge, four label-pair multipliers subject to a
// heterophily ordering, and node energies that are zero unless a prior bot
// probability is supplied. All functions here are pure.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "botcut/interaction_graph.hpp"

namespace botcut {

// Feasible parameter region (checked by validate()):
//   heterophily    0 < epsilon < lambda2 < lambda1 < 1
//   submodularity  epsilon == lambda2 + lambda1 - 1 + delta,  delta >= 0
//   positivity     3*lambda2 + lambda1 >= 2
struct EnergyParams {
    double gamma = 1.0;    // link-energy weight
    double lambda1 = 0.8;  // bot-retweets-bot multiplier
    double lambda2 = 0.6;  // human-retweets-human multiplier
    double epsilon = 0.4;  // bot-retweets-human multiplier
    double delta = 0.0;    // submodularity slack; pairwise capacities vanish at 0
    double alpha1 = 100.0; // retweeter out-strength threshold
    double alpha2 = 100.0; // target in-strength threshold

    // Fills epsilon from (lambda1, lambda2, delta) via the submodularity
    // equality; use when epsilon is not given explicitly.
    static EnergyParams with_derived_epsilon(double gamma, double lambda1, double lambda2,
                                             double delta, double alpha1, double alpha2);
};

enum class Constraint : std::uint8_t {
    heterophily,    // 0 < eps < lambda2 < lambda1 < 1
    submodularity,  // eps = lambda2 + lambda1 - 1 + delta, delta >= 0
    positivity,     // 3*lambda2 + lambda1 >= 2
    gamma,          // gamma > 0
    alpha1,         // alpha1 > 0
    alpha2,         // alpha2 > 0
};

const char* constraint_name(Constraint c);

struct Violation {
    Constraint constraint;
    std::string detail;
};

// Returns every violated constraint; empty means the parameters are valid.
// The submodularity equality is checked to 1e-12.
std::vector<Violation> validate(const EnergyParams& params);

inline bool is_valid(const EnergyParams& params) { return validate(params).empty(); }

// Label pair for one directed edge; `src` is the retweeter, `dst` the target.
struct LabelPair {
    Label src;
    Label dst;
};

// psi = w * gamma / (1 + exp((alpha1/z_out - 1) + (alpha2/z_in - 1))).
// Strictly increasing in w and in each strength; bounded by (0, w*gamma).
// Throws Error on zero strengths (cannot occur for a real edge).
double base_link_energy(std::uint64_t weight, std::uint64_t z_out_src,
                        std::uint64_t z_in_dst, const EnergyParams& params);

// Scales psi by the label-pair multiplier: 1 for (human,bot), lambda1 for
// (bot,bot), lambda2 for (human,human), epsilon for (bot,human).
double labeled_link_energy(double psi, LabelPair pair, const EnergyParams& params);

// Prior bot probabilities, strictly inside (0,1); accounts without an entry
// get the uninformative zero energy for both labels.
struct NodePrior {
    std::unordered_map<AccountId, double> p_bot;

    bool empty() const { return p_bot.empty(); }
};

// phi(account, 1) = -ln p, phi(account, 0) = -ln(1-p); 0 without a prior.
// Throws Error when a prior is not strictly inside (0,1).
double node_energy(const AccountId& account, Label label, const NodePrior& prior);

// Turns hard labels into soft priors: bot -> strength, human -> 1-strength.
// Strength must be strictly inside (0,1).
NodePrior prior_from_labels(const GroundTruth& labels, double strength);

// Total energy of one label configuration: sum of node energies plus the
// labeled link energy of every directed edge (reciprocal pairs contribute
// both directions). Throws Error naming the first node missing a label.
double configuration_energy(const InteractionGraph& g,
                            const std::unordered_map<AccountId, Label>& labels,
                            const EnergyParams& params, const NodePrior& prior = {});

// Same configuration energy with labels indexed by node id, label_bits[i]
// nonzero meaning bot. Used on hot paths and by the test oracles.
double configuration_energy(const InteractionGraph& g, const std::vector<std::uint8_t>& label_bits,
                            const EnergyParams& params, const NodePrior& prior = {});

}  // namespace botcut
