#pragma once

#include <cstdint>
#include <span>

#include "relbench/nbc.hpp"

namespace relbench {

/// Per-instance contamination robustness. Both values live in [0, 1) and are
/// 0 exactly when the model's top-2 scores for the instance tie.
struct RobustnessScores {
    double eps_glob = 0.0;
    double eps_loc = 0.0;
};

/// Largest contamination of the joint class-feature distribution under which
/// the predicted class is unchanged. Closed form: with
/// delta = p(chat,f) - max_{c != chat} p(c,f), returns delta / (1 + delta)
/// (worst case is a point mass on the runner-up at f).
double eps_global(const NaiveBayesModel& model, std::span<const std::uint32_t> f);

/// Largest shared contamination of the prior and every per-class conditional
/// under which the predicted class is unchanged. Located by bisection on the
/// monotone predicate below; returns exactly 0.0 on a top-2 tie. `tol` bounds
/// the distance from the predicate's flip point.
double eps_local(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                 double tol = 1e-10);

/// The predicate eps_local bisects: for all c' != chat,
///   (1-e)^{N+1} prior(chat) prod_i cond(f_i|chat)
///     >= [(1-e) prior(c') + e] * prod_i [(1-e) cond(f_i|c') + e],
/// i.e. chat's all-lowered score still beats every competitor's all-raised
/// score. Evaluated in log space. Monotonically fails as e grows.
bool local_robustness_predicate(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                                double eps);

/// Brute-force estimate of eps_global: walks an epsilon grid, at each step
/// trying every point-mass contamination delta_{(c',f)}, and returns the
/// largest grid value with no prediction flip. Test oracle only.
double oracle_eps_global(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                         double grid_resolution);

/// Brute-force estimate of eps_local: walks an epsilon grid, enumerating
/// point-mass (vertex) contaminations of the prior and of each per-class
/// conditional, and returns the largest grid value with no flip. Intended for
/// tiny models only (the enumeration is exponential-ish). Test oracle only.
double oracle_eps_local(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                        double grid_resolution);

RobustnessScores robustness_scores(const NaiveBayesModel& model, std::span<const std::uint32_t> f,
                                   double tol = 1e-10);

}  // namespace relbench
