#pragma once

#include <cstdint>

#include "relbench/metrics.hpp"

namespace relbench {

/// Everything the evaluation stage needs to know about one instance: what the
/// model predicted, whether it was right, and every reliability score.
struct ReliabilityRecord {
    std::size_t index = 0;
    std::uint32_t predicted = 0;
    std::uint32_t label = 0;
    bool correct = false;
    double u_m = 0.0;
    double u_H = 0.0;
    double u_t = 0.0;
    double u_a = 0.0;
    double u_e = 0.0;
    double eps_glob = 0.0;
    double eps_loc = 0.0;
};

double metric_value(const ReliabilityRecord& r, UncertaintyMetric m);
double metric_value(const ReliabilityRecord& r, RobustnessMetric m);

}  // namespace relbench
