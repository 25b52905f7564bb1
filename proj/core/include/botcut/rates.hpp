#pragma once
// Retweet rate: an account's total retweets to a target class divided by the
// number of unique accounts of that class it retweets. Each labeled account
// contributes at most one sample per (own class, target class) pair;
// accounts with no targets in a class contribute nothing there.

#include <cstdint>
#include <vector>

#include "botcut/interaction_graph.hpp"

namespace botcut {

struct RateSample {
    double rate;                    // total_retweets / unique_targets, >= 1
    std::uint32_t unique_targets;
    std::uint64_t total_retweets;
};

struct RateDistributions {
    std::vector<RateSample> bot_to_human;
    std::vector<RateSample> bot_to_bot;
    std::vector<RateSample> human_to_human;
    std::vector<RateSample> human_to_bot;

    static std::vector<double> values(const std::vector<RateSample>& samples);
    static double mean(const std::vector<RateSample>& samples);  // NaN when empty
};

// Edge endpoints without a label are excluded from both numerator and
// denominator. Samples appear in canonical node order.
RateDistributions retweet_rates(const InteractionGraph& g, const GroundTruth& labels);

}  // namespace botcut
