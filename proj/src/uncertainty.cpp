#include "relbench/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relbench {

std::string metric_id(UncertaintyMetric m) {
    switch (m) {
        case UncertaintyMetric::MaxProb: return "u_m";
        case UncertaintyMetric::Entropy: return "u_H";
        case UncertaintyMetric::Total: return "u_t";
        case UncertaintyMetric::Aleatoric: return "u_a";
        case UncertaintyMetric::Epistemic: return "u_e";
    }
    throw std::runtime_error("unknown uncertainty metric");
}

std::string metric_id(RobustnessMetric m) {
    switch (m) {
        case RobustnessMetric::EpsGlobal: return "eps_glob";
        case RobustnessMetric::EpsLocal: return "eps_loc";
    }
    throw std::runtime_error("unknown robustness metric");
}

UncertaintyMetric parse_uncertainty_metric(const std::string& id) {
    if (id == "u_m") return UncertaintyMetric::MaxProb;
    if (id == "u_H") return UncertaintyMetric::Entropy;
    if (id == "u_t") return UncertaintyMetric::Total;
    if (id == "u_a") return UncertaintyMetric::Aleatoric;
    if (id == "u_e") return UncertaintyMetric::Epistemic;
    throw std::runtime_error("unknown uncertainty metric '" + id + "'");
}

RobustnessMetric parse_robustness_metric(const std::string& id) {
    if (id == "eps_glob") return RobustnessMetric::EpsGlobal;
    if (id == "eps_loc") return RobustnessMetric::EpsLocal;
    throw std::runtime_error("unknown robustness metric '" + id + "'");
}

bool needs_ensemble(UncertaintyMetric m) {
    return m == UncertaintyMetric::Total || m == UncertaintyMetric::Aleatoric ||
           m == UncertaintyMetric::Epistemic;
}

double entropy(std::span<const double> p) {
    double h = 0.0;
    for (double pi : p) {
        if (pi < 0.0) throw std::runtime_error("negative probability in entropy()");
        if (pi > 0.0) h -= pi * std::log(pi);
    }
    // Rounding can leave a tiny negative residue on one-hot inputs.
    return std::max(h, 0.0);
}

double max_prob_uncertainty(const PosteriorDistribution& dist) {
    return 1.0 - *std::max_element(dist.probabilities.begin(), dist.probabilities.end());
}

double entropy_uncertainty(const PosteriorDistribution& dist) {
    return entropy(dist.probabilities);
}

EnsembleUncertainty ensemble_uncertainty(const ModelEnsemble& ensemble,
                                         std::span<const std::uint32_t> f) {
    if (ensemble.members.size() < 2) throw std::runtime_error("ensemble needs at least 2 members");

    const std::size_t n_classes = ensemble.members.front().class_prior.size();
    std::vector<double> mean(n_classes, 0.0);
    double entropy_sum = 0.0;
    for (const NaiveBayesModel& member : ensemble.members) {
        if (member.class_prior.size() != n_classes)
            throw std::runtime_error("ensemble members disagree on the class count");
        const PosteriorDistribution dist = posterior(member, f);
        entropy_sum += entropy(dist.probabilities);
        for (std::size_t c = 0; c < n_classes; ++c) mean[c] += dist.probabilities[c];
    }
    const double m = static_cast<double>(ensemble.members.size());
    for (double& p : mean) p /= m;

    EnsembleUncertainty u;
    u.total = entropy(mean);
    u.aleatoric = entropy_sum / m;
    u.epistemic = std::max(u.total - u.aleatoric, 0.0);
    return u;
}

double uncertainty_score(UncertaintyMetric metric, const NaiveBayesModel& model,
                         const ModelEnsemble& ensemble, std::span<const std::uint32_t> f) {
    switch (metric) {
        case UncertaintyMetric::MaxProb: return max_prob_uncertainty(posterior(model, f));
        case UncertaintyMetric::Entropy: return entropy_uncertainty(posterior(model, f));
        case UncertaintyMetric::Total: return ensemble_uncertainty(ensemble, f).total;
        case UncertaintyMetric::Aleatoric: return ensemble_uncertainty(ensemble, f).aleatoric;
        case UncertaintyMetric::Epistemic: return ensemble_uncertainty(ensemble, f).epistemic;
    }
    throw std::runtime_error("unknown uncertainty metric");
}

}  // namespace relbench
