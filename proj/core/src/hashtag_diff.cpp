#include "botcut/hashtag_diff.hpp"

#include <algorithm>
#include <unordered_set>

namespace botcut {

std::string normalize_hashtag(std::string_view tag) {
    std::size_t start = 0;
    while (start < tag.size() && tag[start] == '#') ++start;
    std::string out;
    out.reserve(tag.size() - start);
    for (char c : tag.substr(start))
        out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

std::vector<HashtagCount> hashtag_diff(const AccountHashtags& tweets,
                                       const GroundTruth& predicted) {
    std::unordered_map<std::string, std::uint64_t> bot_counts;
    std::unordered_set<std::string> human_tags;

    for (const auto& [account, tags] : tweets) {
        const auto label = predicted.label_of(account);
        if (!label) continue;
        for (const auto& [tag, count] : tags) {
            const std::string norm = normalize_hashtag(tag);
            if (norm.empty()) continue;
            if (*label == Label::bot)
                bot_counts[norm] += count;
            else
                human_tags.insert(norm);
        }
    }

    std::vector<HashtagCount> out;
    for (const auto& [tag, count] : bot_counts)
        if (!human_tags.contains(tag)) out.push_back({tag, count});
    std::sort(out.begin(), out.end(), [](const HashtagCount& a, const HashtagCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.tag < b.tag;
    });
    return out;
}

}  // namespace botcut
