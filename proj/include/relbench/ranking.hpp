#pragma once

#include <cstdint>
#include <vector>

#include "relbench/metrics.hpp"
#include "relbench/record.hpp"

namespace relbench {

/// A reliability order: `order` lists instance indices least-reliable first,
/// `position` is its exact inverse (position[order[k]] == k).
struct RankOrder {
    std::vector<std::size_t> order;
    std::vector<std::size_t> position;
};

/// Builds the inverse map and validates that `order` is a permutation.
RankOrder make_rank_order(std::vector<std::size_t> order);

/// Descending by score (most uncertain first); ties by ascending index.
RankOrder order_by_uncertainty(const std::vector<double>& scores);

/// Ascending by score (least robust first); ties by ascending index.
RankOrder order_by_robustness(const std::vector<double>& scores);

/// Combines two orders by the weighted average of rank positions
/// h_i = gamma * n_u_i + (1 - gamma) * n_e_i, sorted ascending. Ties on h go
/// to the higher uncertainty score; residual ties to the lower index. gamma
/// is quantized to a 1e-6 rational so mathematically equal h values compare
/// equal exactly.
RankOrder hybrid_order(const RankOrder& rank_u, const RankOrder& rank_e,
                       const std::vector<double>& u_scores, double gamma);

struct HybridWeight {
    double gamma = 0.0;
    double grid_step = 0.01;
    double train_auarc = 0.0;
};

/// Grid-searches gamma over {0, step, 2*step, ..., 1} (endpoints always
/// present), maximizing the AU-ARC of the hybrid order on the given records;
/// ties go to the smallest gamma.
HybridWeight train_gamma(const std::vector<ReliabilityRecord>& train_records,
                         UncertaintyMetric u_metric, RobustnessMetric e_metric, double grid_step);

}  // namespace relbench
