#include "botcut/rates.hpp"

#include <limits>

namespace botcut {

std::vector<double> RateDistributions::values(const std::vector<RateSample>& samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.rate);
    return out;
}

double RateDistributions::mean(const std::vector<RateSample>& samples) {
    if (samples.empty()) return std::numeric_limits<double>::quiet_NaN();
    double sum = 0.0;
    for (const auto& s : samples) sum += s.rate;
    return sum / static_cast<double>(samples.size());
}

RateDistributions retweet_rates(const InteractionGraph& g, const GroundTruth& labels) {
    RateDistributions out;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const auto own = labels.label_of(g.id_of(i));
        if (!own) continue;

        std::uint64_t weight_to[2] = {0, 0};  // indexed by target Label
        std::uint32_t unique_to[2] = {0, 0};
        for (const auto& e : g.out_edges(i)) {
            const auto target = labels.label_of(g.id_of(e.dst));
            if (!target) continue;
            weight_to[static_cast<int>(*target)] += e.weight;
            ++unique_to[static_cast<int>(*target)];
        }

        for (Label target : {Label::human, Label::bot}) {
            const int t = static_cast<int>(target);
            if (unique_to[t] == 0) continue;
            RateSample sample{static_cast<double>(weight_to[t]) / unique_to[t], unique_to[t],
                              weight_to[t]};
            if (*own == Label::bot)
                (target == Label::human ? out.bot_to_human : out.bot_to_bot).push_back(sample);
            else
                (target == Label::human ? out.human_to_human : out.human_to_bot).push_back(sample);
        }
    }
    return out;
}

}  // namespace botcut
