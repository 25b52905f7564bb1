#include "botcut/roc.hpp"

#include <algorithm>
#include <limits>

namespace botcut {

EvalReport roc_curve(const std::unordered_map<AccountId, double>& scores,
                     const GroundTruth& truth) {
    std::vector<std::pair<double, bool>> scored;  // (score, is_bot)
    scored.reserve(truth.labels.size());
    std::vector<AccountId> missing;
    for (const auto& [id, label] : truth.labels) {
        auto it = scores.find(id);
        if (it == scores.end()) {
            missing.push_back(id);
            continue;
        }
        scored.emplace_back(it->second, label == Label::bot);
    }
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        std::string msg = "roc_curve: no score for";
        for (const auto& id : missing) msg += " \"" + id + "\"";
        throw Error(msg);
    }

    EvalReport report;
    for (const auto& [score, is_bot] : scored) (is_bot ? report.positives : report.negatives)++;
    if (report.positives == 0 || report.negatives == 0)
        throw Error("roc_curve: needs at least one positive and one negative");

    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    const auto p = static_cast<double>(report.positives);
    const auto n = static_cast<double>(report.negatives);
    report.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});

    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < scored.size();) {
        const double threshold = scored[i].first;
        for (; i < scored.size() && scored[i].first == threshold; ++i)
            (scored[i].second ? tp : fp)++;
        report.points.push_back({static_cast<double>(fp) / n, static_cast<double>(tp) / p,
                                 threshold});
    }

    for (std::size_t k = 1; k < report.points.size(); ++k) {
        const auto& a = report.points[k - 1];
        const auto& b = report.points[k];
        report.auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return report;
}

}  // namespace botcut
