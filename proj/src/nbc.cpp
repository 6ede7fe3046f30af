#include "relbench/nbc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "relbench/rng.hpp"

namespace relbench {

namespace {

void check_vector(const FeatureDomain& domain, std::span<const std::uint32_t> f) {
    if (f.size() != domain.feature_names.size()) {
        throw std::runtime_error("feature vector has " + std::to_string(f.size()) +
                                 " values, model expects " +
                                 std::to_string(domain.feature_names.size()));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= domain.feature_values[i].size()) {
            throw std::runtime_error("feature " + std::to_string(i) + " index " +
                                     std::to_string(f[i]) + " out of range");
        }
    }
}

}  // namespace

NaiveBayesModel train(const DiscreteDataset& data, double alpha) {
    if (data.instances.empty()) throw std::runtime_error("cannot train on empty dataset");
    if (!(alpha > 0.0)) throw std::runtime_error("smoothing must be positive");

    const std::size_t n_classes = data.domain.class_labels.size();
    const std::size_t n_features = data.domain.feature_names.size();

    std::vector<std::size_t> class_count(n_classes, 0);
    for (const Instance& inst : data.instances) class_count.at(inst.label)++;

    NaiveBayesModel model;
    model.domain = data.domain;
    model.smoothing = alpha;

    const double n = static_cast<double>(data.instances.size());
    model.class_prior.resize(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        model.class_prior[c] =
            (static_cast<double>(class_count[c]) + alpha) / (n + alpha * static_cast<double>(n_classes));
    }

    model.conditionals.resize(n_features);
    for (std::size_t i = 0; i < n_features; ++i) {
        const std::size_t arity = data.domain.feature_values[i].size();
        std::vector<std::vector<std::size_t>> count(n_classes, std::vector<std::size_t>(arity, 0));
        for (const Instance& inst : data.instances) count[inst.label][inst.features[i]]++;

        model.conditionals[i].assign(n_classes, std::vector<double>(arity));
        for (std::size_t c = 0; c < n_classes; ++c) {
            const double denom =
                static_cast<double>(class_count[c]) + alpha * static_cast<double>(arity);
            for (std::size_t v = 0; v < arity; ++v) {
                model.conditionals[i][c][v] = (static_cast<double>(count[c][v]) + alpha) / denom;
            }
        }
    }
    return model;
}

PosteriorDistribution posterior(const NaiveBayesModel& model, std::span<const std::uint32_t> f) {
    check_vector(model.domain, f);
    const std::size_t n_classes = model.class_prior.size();

    std::vector<double> log_joint(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        double s = std::log(model.class_prior[c]);
        for (std::size_t i = 0; i < f.size(); ++i) s += std::log(model.conditionals[i][c][f[i]]);
        log_joint[c] = s;
    }

    const double mx = *std::max_element(log_joint.begin(), log_joint.end());
    PosteriorDistribution dist;
    dist.probabilities.resize(n_classes);
    double total = 0.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        dist.probabilities[c] = std::exp(log_joint[c] - mx);
        total += dist.probabilities[c];
    }
    for (double& p : dist.probabilities) p /= total;

    dist.predicted_class = 0;
    for (std::size_t c = 1; c < n_classes; ++c) {
        if (dist.probabilities[c] > dist.probabilities[dist.predicted_class]) {
            dist.predicted_class = static_cast<std::uint32_t>(c);
        }
    }
    return dist;
}

double joint_score(const NaiveBayesModel& model, std::uint32_t c, std::span<const std::uint32_t> f) {
    check_vector(model.domain, f);
    if (c >= model.class_prior.size()) throw std::runtime_error("class index out of range");
    double p = model.class_prior[c];
    for (std::size_t i = 0; i < f.size(); ++i) p *= model.conditionals[i][c][f[i]];
    return p;
}

std::vector<double> joint_scores(const NaiveBayesModel& model, std::span<const std::uint32_t> f) {
    std::vector<double> out(model.class_prior.size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] = joint_score(model, static_cast<std::uint32_t>(c), f);
    }
    return out;
}

double cross_validated_accuracy(const DiscreteDataset& data, double alpha, int folds,
                                std::uint64_t cv_seed) {
    if (folds < 2) throw std::runtime_error("cross-validation needs at least 2 folds");
    const std::size_t n = data.instances.size();
    if (n < static_cast<std::size_t>(folds)) {
        throw std::runtime_error("cross-validation fold would be empty: " + std::to_string(n) +
                                 " instances, " + std::to_string(folds) + " folds");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(cv_seed);
    fisher_yates_shuffle(order, rng);

    // Fold f takes the contiguous slice [f*n/k, (f+1)*n/k) of the shuffled
    // order, so sizes differ by at most one.
    double acc_sum = 0.0;
    for (int f = 0; f < folds; ++f) {
        const std::size_t lo = n * static_cast<std::size_t>(f) / static_cast<std::size_t>(folds);
        const std::size_t hi = n * static_cast<std::size_t>(f + 1) / static_cast<std::size_t>(folds);

        DiscreteDataset fit;
        fit.domain = data.domain;
        fit.instances.reserve(n - (hi - lo));
        for (std::size_t j = 0; j < n; ++j) {
            if (j < lo || j >= hi) fit.instances.push_back(data.instances[order[j]]);
        }
        if (fit.instances.empty()) throw std::runtime_error("cross-validation fold would be empty");

        const NaiveBayesModel model = train(fit, alpha);
        std::size_t correct = 0;
        for (std::size_t j = lo; j < hi; ++j) {
            const Instance& inst = data.instances[order[j]];
            if (posterior(model, inst.features).predicted_class == inst.label) correct++;
        }
        acc_sum += static_cast<double>(correct) / static_cast<double>(hi - lo);
    }
    return acc_sum / static_cast<double>(folds);
}

double select_smoothing(const DiscreteDataset& data, const std::vector<double>& grid, int folds,
                        std::uint64_t cv_seed) {
    if (grid.empty()) throw std::runtime_error("smoothing grid is empty");
    double best_alpha = 0.0;
    double best_acc = -1.0;
    for (double alpha : grid) {
        const double acc = cross_validated_accuracy(data, alpha, folds, cv_seed);
        if (acc > best_acc || (acc == best_acc && alpha < best_alpha)) {
            best_acc = acc;
            best_alpha = alpha;
        }
    }
    return best_alpha;
}

ModelEnsemble bootstrap_ensemble(const DiscreteDataset& data, double alpha, int members,
                                 std::uint64_t seed) {
    if (members < 2) throw std::runtime_error("ensemble needs at least 2 members");
    const std::size_t n = data.instances.size();
    if (n == 0) throw std::runtime_error("cannot train on empty dataset");

    ModelEnsemble ens;
    ens.bootstrap_seed = seed;
    ens.members.reserve(static_cast<std::size_t>(members));
    for (int m = 0; m < members; ++m) {
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(m));
        DiscreteDataset resample;
        resample.domain = data.domain;
        resample.instances.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            resample.instances.push_back(data.instances[uniform_below(rng, n)]);
        }
        ens.members.push_back(train(resample, alpha));
    }
    return ens;
}

void dump_model(const NaiveBayesModel& model, std::ostream& out) {
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };

    out << "smoothing " << fmt(model.smoothing) << "\n";
    out << "classes " << model.domain.class_labels.size() << "\n";
    for (std::size_t c = 0; c < model.class_prior.size(); ++c) {
        out << "prior " << model.domain.class_labels[c] << " " << fmt(model.class_prior[c]) << "\n";
    }
    for (std::size_t i = 0; i < model.conditionals.size(); ++i) {
        for (std::size_t c = 0; c < model.class_prior.size(); ++c) {
            for (std::size_t v = 0; v < model.conditionals[i][c].size(); ++v) {
                out << "cond " << model.domain.feature_names[i] << " "
                    << model.domain.class_labels[c] << " " << model.domain.feature_values[i][v]
                    << " " << fmt(model.conditionals[i][c][v]) << "\n";
            }
        }
    }
}

}  // namespace relbench
