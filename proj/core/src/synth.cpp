#include "botcut/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

namespace botcut {

namespace {

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw in [0,1); identical on every platform.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF Zipf sampler over member indices 0..m-1 with rank weights
// (k+1)^-s.
class ZipfSampler {
public:
    ZipfSampler(std::size_t members, double skew) {
        cumulative_.reserve(members);
        double total = 0.0;
        for (std::size_t k = 0; k < members; ++k) {
            total += std::pow(static_cast<double>(k + 1), -skew);
            cumulative_.push_back(total);
        }
    }

    std::size_t draw(double u) const {
        const double x = u * cumulative_.back();
        const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
        return std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
    }

private:
    std::vector<double> cumulative_;
};

}  // namespace

void validate_config(const SynthConfig& c) {
    if (c.n_accounts < 4) throw Error("synth config: n_accounts must be >= 4");
    if (!(c.bot_fraction > 0.0 && c.bot_fraction < 1.0))
        throw Error("synth config: bot_fraction must be in (0,1)");
    if (c.events_per_bot == 0) throw Error("synth config: events_per_bot must be positive");
    if (c.events_per_human == 0) throw Error("synth config: events_per_human must be positive");
    if (!(c.p_bot_targets_human >= 0.0 && c.p_bot_targets_human <= 1.0))
        throw Error("synth config: p_bot_targets_human must be in [0,1]");
    if (!(c.p_human_targets_human >= 0.0 && c.p_human_targets_human <= 1.0))
        throw Error("synth config: p_human_targets_human must be in [0,1]");
    if (!(c.popularity_skew > 0.0)) throw Error("synth config: popularity_skew must be positive");
}

AccountId synth_account_id(std::size_t index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "a%07zu", index);
    return buf;
}

SynthOutput generate(const SynthConfig& config) {
    validate_config(config);

    const std::size_t n = config.n_accounts;
    std::size_t bots = static_cast<std::size_t>(
        std::floor(config.bot_fraction * static_cast<double>(n)));
    bots = std::clamp<std::size_t>(bots, 1, n - 1);
    const std::size_t humans = n - bots;

    // Popularity order inside a class is index order: member k of the bot
    // class is account k, member k of the human class is account bots+k.
    const ZipfSampler bot_targets(bots, config.popularity_skew);
    const ZipfSampler human_targets(humans, config.popularity_skew);

    std::mt19937_64 rng(config.seed);
    std::unordered_map<std::uint64_t, std::uint64_t> weights;  // (src<<32|dst) -> count
    weights.reserve(n * 8);

    for (std::size_t src = 0; src < n; ++src) {
        const bool src_is_bot = src < bots;
        const double p_human = src_is_bot ? config.p_bot_targets_human
                                          : config.p_human_targets_human;
        const std::uint32_t events = src_is_bot ? config.events_per_bot : config.events_per_human;

        for (std::uint32_t e = 0; e < events; ++e) {
            std::size_t dst;
            while (true) {
                bool to_human = uniform01(rng) < p_human;
                // A class whose sole member is the emitter cannot be
                // targeted; divert to the other class.
                if ((to_human ? humans : bots) == 1 && (to_human ? bots : std::size_t{0}) == src)
                    to_human = !to_human;
                const std::size_t class_base = to_human ? bots : 0;
                dst = class_base + (to_human ? human_targets : bot_targets).draw(uniform01(rng));
                if (dst != src) break;  // self-target: re-draw the event
            }
            ++weights[(static_cast<std::uint64_t>(src) << 32) | static_cast<std::uint32_t>(dst)];
        }
    }

    std::vector<EdgeRecord> records;
    records.reserve(weights.size());
    for (const auto& [key, count] : weights)
        records.push_back({synth_account_id(key >> 32),
                           synth_account_id(key & 0xffffffffu), count});

    SynthOutput out;
    out.graph = build_graph(records);
    out.bot_count = bots;
    out.human_count = humans;
    out.truth.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.truth.labels.emplace(synth_account_id(i), i < bots ? Label::bot : Label::human);
    return out;
}

}  // namespace botcut
