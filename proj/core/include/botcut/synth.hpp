#pragma once
// Synthetic retweet graphs with planted bot/human classes. Each account
// emits a fixed number of retweet events; every event picks the target
// class by a class-conditional probability, then a target inside that class
// by a Zipf draw over a fixed popularity order, so a few accounts per class
// absorb most retweets and cross the link-energy strength gates.

#include <cstdint>
#include <string>

#include "botcut/interaction_graph.hpp"

namespace botcut {

struct SynthConfig {
    std::size_t n_accounts = 5000;
    double bot_fraction = 0.1;          // in (0,1); at least one account per class
    std::uint32_t events_per_bot = 50;
    std::uint32_t events_per_human = 10;
    double p_bot_targets_human = 0.9;
    double p_human_targets_human = 0.9;
    double popularity_skew = 1.2;       // Zipf exponent, > 0
    std::uint64_t seed = 7;
};

// Throws Error naming the offending field.
void validate_config(const SynthConfig& config);

struct SynthOutput {
    InteractionGraph graph;
    GroundTruth truth;        // covers exactly the generated accounts
    std::size_t bot_count = 0;
    std::size_t human_count = 0;
};

// Deterministic for a fixed config (mt19937_64 with explicit inverse-CDF
// sampling, no distribution library). Self-targets are re-drawn, so events
// never vanish: total edge weight equals the emitted event count.
SynthOutput generate(const SynthConfig& config);

// Account ids are zero-padded ("a0000000", ...), so lexicographic order is
// generation order; bots occupy the first bot_count indices.
AccountId synth_account_id(std::size_t index);

}  // namespace botcut
