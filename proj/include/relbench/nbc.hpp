#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "relbench/dataset.hpp"

namespace relbench {

/// Naive Bayes classifier with additive (Laplace/Dirichlet) smoothing. One
/// smoothing value alpha is shared by the class prior and every conditional
/// table. With alpha > 0 every stored probability is strictly positive.
struct NaiveBayesModel {
    FeatureDomain domain;
    double smoothing = 1.0;
    std::vector<double> class_prior;                            // [class]
    std::vector<std::vector<std::vector<double>>> conditionals; // [feature][class][value]
};

struct PosteriorDistribution {
    std::vector<double> probabilities;   // sums to 1
    std::uint32_t predicted_class = 0;   // argmax, ties broken by lowest index
};

struct ModelEnsemble {
    std::vector<NaiveBayesModel> members;
    std::uint64_t bootstrap_seed = 0;
};

/// prior(c) = (count(c) + a) / (n + a|C|),
/// cond(v|c) = (count(v,c) + a) / (count(c) + a|F_i|).
NaiveBayesModel train(const DiscreteDataset& data, double alpha);

/// Class posterior for a feature vector, computed in log space and
/// exponentiated after max-subtraction.
PosteriorDistribution posterior(const NaiveBayesModel& model, std::span<const std::uint32_t> f);

/// Joint mass p(c, f) = prior(c) * prod_i cond(f_i | c).
double joint_score(const NaiveBayesModel& model, std::uint32_t c, std::span<const std::uint32_t> f);

/// joint_score for every class at once.
std::vector<double> joint_scores(const NaiveBayesModel& model, std::span<const std::uint32_t> f);

/// Mean fold accuracy of an alpha over a seeded, shuffled, near-equal k-way
/// partition of `data`. The partition depends only on (data size, folds, seed).
double cross_validated_accuracy(const DiscreteDataset& data, double alpha, int folds,
                                std::uint64_t cv_seed);

/// Grid point with the highest cross-validated accuracy; ties go to the
/// smallest alpha.
double select_smoothing(const DiscreteDataset& data, const std::vector<double>& grid, int folds,
                        std::uint64_t cv_seed);

/// M models, each trained on a size-n resample drawn with replacement.
/// Member m draws from its own stream seeded with `seed ^ m`.
ModelEnsemble bootstrap_ensemble(const DiscreteDataset& data, double alpha, int members,
                                 std::uint64_t seed);

/// Plain-text table of priors and conditionals at 17 significant digits,
/// for golden-file tests.
void dump_model(const NaiveBayesModel& model, std::ostream& out);

}  // namespace relbench
