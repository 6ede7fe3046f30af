#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relbench/metrics.hpp"
#include "relbench/nbc.hpp"

namespace relbench {

/// Shannon entropy in nats. Zero entries contribute nothing; a one-hot
/// distribution scores exactly 0.
double entropy(std::span<const double> p);

/// u_m = 1 - max_c p(c|f).
double max_prob_uncertainty(const PosteriorDistribution& dist);

/// u_H = H(p(.|f)).
double entropy_uncertainty(const PosteriorDistribution& dist);

struct EnsembleUncertainty {
    double total = 0.0;      // u_t = H(mean posterior)
    double aleatoric = 0.0;  // u_a = mean member entropy
    double epistemic = 0.0;  // u_e = u_t - u_a, clamped at 0
};

EnsembleUncertainty ensemble_uncertainty(const ModelEnsemble& ensemble,
                                         std::span<const std::uint32_t> f);

/// Uncertainty of one instance under the requested metric. Single-model
/// metrics read `model`; ensemble metrics read `ensemble`.
double uncertainty_score(UncertaintyMetric metric, const NaiveBayesModel& model,
                         const ModelEnsemble& ensemble, std::span<const std::uint32_t> f);

}  // namespace relbench
