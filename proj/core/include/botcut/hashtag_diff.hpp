#pragma once
// Differential hashtag analysis: tags used by at least one predicted bot and
// by no predicted human, ranked by bot usage count.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "botcut/interaction_graph.hpp"

namespace botcut {

// Per-account hashtag multiset (normalized tag -> usage count).
using HashtagCounts = std::unordered_map<std::string, std::uint64_t>;
using AccountHashtags = std::unordered_map<AccountId, HashtagCounts>;

// Strips leading '#' characters and lower-cases ASCII letters. No stemming,
// no language-specific folding.
std::string normalize_hashtag(std::string_view tag);

struct HashtagCount {
    std::string tag;
    std::uint64_t count;

    bool operator==(const HashtagCount&) const = default;
};

// Tags are compared after normalization; accounts without a prediction are
// ignored. Output sorted by count descending, ties by tag ascending.
std::vector<HashtagCount> hashtag_diff(const AccountHashtags& tweets,
                                       const GroundTruth& predicted);

}  // namespace botcut
