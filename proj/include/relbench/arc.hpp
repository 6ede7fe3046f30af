#pragma once

#include <vector>

#include "relbench/ranking.hpp"
#include "relbench/record.hpp"

namespace relbench {

/// Accuracy among the retained instances after rejecting the first k of an
/// order, for k = 0 ... n-1. The k = n point (empty retained set) is excluded.
struct AccuracyRejectionCurve {
    std::vector<double> accuracies;
    double auarc = 0.0;
};

AccuracyRejectionCurve arc(const RankOrder& order, const std::vector<bool>& correct);

/// Arithmetic mean of the curve's accuracies.
double au_arc(const AccuracyRejectionCurve& curve);

/// The best possible order: all wrong instances (ascending index) before all
/// correct instances (ascending index).
RankOrder ideal_order(const std::vector<bool>& correct);

}  // namespace relbench
