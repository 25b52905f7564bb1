#pragma once
// ROC curve and AUC for per-account bot scores against ground truth. The
// classifier convention is "predict bot when score >= threshold"; the sweep
// visits distinct score values descending with ties grouped, so the curve
// always starts at (0,0) (threshold +inf) and ends at (1,1).

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "botcut/interaction_graph.hpp"

namespace botcut {

struct RocPoint {
    double fpr;
    double tpr;
    double threshold;
};

struct EvalReport {
    std::vector<RocPoint> points;  // fpr nondecreasing
    double auc = 0.0;              // trapezoidal integral of points
    std::size_t positives = 0;     // bots in truth
    std::size_t negatives = 0;     // humans in truth
};

// Every truth account needs a score; throws Error listing missing ids, or
// when either class is empty. Scored accounts outside the truth are ignored.
EvalReport roc_curve(const std::unordered_map<AccountId, double>& scores,
                     const GroundTruth& truth);

}  // namespace botcut
