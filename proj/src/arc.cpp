#include "relbench/arc.hpp"

#include <numeric>
#include <stdexcept>

namespace relbench {

AccuracyRejectionCurve arc(const RankOrder& order, const std::vector<bool>& correct) {
    const std::size_t n = correct.size();
    if (n == 0) throw std::runtime_error("cannot build an ARC for zero instances");
    if (order.order.size() != n) {
        throw std::runtime_error("order length " + std::to_string(order.order.size()) +
                                 " does not match instance count " + std::to_string(n));
    }

    // suffix[k] = number of correct instances among order[k..n).
    std::vector<std::size_t> suffix(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) {
        suffix[k] = suffix[k + 1] + (correct[order.order[k]] ? 1 : 0);
    }

    AccuracyRejectionCurve curve;
    curve.accuracies.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        curve.accuracies[k] = static_cast<double>(suffix[k]) / static_cast<double>(n - k);
    }
    curve.auarc = au_arc(curve);
    return curve;
}

double au_arc(const AccuracyRejectionCurve& curve) {
    if (curve.accuracies.empty()) throw std::runtime_error("empty accuracy-rejection curve");
    const double sum = std::accumulate(curve.accuracies.begin(), curve.accuracies.end(), 0.0);
    return sum / static_cast<double>(curve.accuracies.size());
}

RankOrder ideal_order(const std::vector<bool>& correct) {
    std::vector<std::size_t> order;
    order.reserve(correct.size());
    for (std::size_t i = 0; i < correct.size(); ++i) {
        if (!correct[i]) order.push_back(i);
    }
    for (std::size_t i = 0; i < correct.size(); ++i) {
        if (correct[i]) order.push_back(i);
    }
    return make_rank_order(std::move(order));
}

}  // namespace relbench
