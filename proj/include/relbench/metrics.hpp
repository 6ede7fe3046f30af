#pragma once

#include <string>

namespace relbench {

enum class UncertaintyMetric { MaxProb, Entropy, Total, Aleatoric, Epistemic };
enum class RobustnessMetric { EpsGlobal, EpsLocal };

/// Short ids used in file names and CSV headers: u_m, u_H, u_t, u_a, u_e.
std::string metric_id(UncertaintyMetric m);
/// eps_glob, eps_loc.
std::string metric_id(RobustnessMetric m);

UncertaintyMetric parse_uncertainty_metric(const std::string& id);
RobustnessMetric parse_robustness_metric(const std::string& id);

/// True for the metrics that need an ensemble rather than a single model.
bool needs_ensemble(UncertaintyMetric m);

}  // namespace relbench
