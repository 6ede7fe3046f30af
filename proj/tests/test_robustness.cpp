#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "relbench/robustness.hpp"
#include "test_support.hpp"

using namespace relbench;
namespace rt = relbench::testing;

namespace {

/// Feature-free model: the joint scores ARE the prior, which makes the
/// closed-form examples exact.
NaiveBayesModel prior_only(std::vector<double> prior) {
    NaiveBayesModel model;
    model.smoothing = 1.0;
    for (std::size_t c = 0; c < prior.size(); ++c)
        model.domain.class_labels.push_back("c" + std::to_string(c));
    model.class_prior = std::move(prior);
    return model;
}

const std::vector<std::uint32_t> kNoFeatures{};

}  // namespace

TEST_CASE("eps_global closed form on hand-checked joints") {
    // Joint scores (0.5, 0.3, 0.2): delta = 0.2, eps = 0.2 / 1.2.
    CHECK(eps_global(prior_only({0.5, 0.3, 0.2}), kNoFeatures) ==
          doctest::Approx(0.2 / 1.2).epsilon(1e-12));
    // (0.9, 0.1): delta = 0.8, eps = 0.8 / 1.8.
    CHECK(eps_global(prior_only({0.9, 0.1}), kNoFeatures) ==
          doctest::Approx(0.8 / 1.8).epsilon(1e-12));
    // Top-2 tie: exactly 0, not a small positive number.
    CHECK(eps_global(prior_only({0.4, 0.4, 0.2}), kNoFeatures) == 0.0);
    // All mass on the top class: delta = 1 gives the supremum 1/2.
    CHECK(eps_global(prior_only({1.0, 0.0}), kNoFeatures) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eps_global depends on the joints only through delta") {
    const double a = eps_global(prior_only({0.5, 0.3, 0.2}), kNoFeatures);
    const double b = eps_global(prior_only({0.55, 0.35, 0.10}), kNoFeatures);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("robustness rejects single-class models") {
    NaiveBayesModel one = prior_only({1.0});
    CHECK_THROWS_AS(eps_global(one, kNoFeatures), std::runtime_error);
    CHECK_THROWS_AS(eps_local(one, kNoFeatures, 1e-10), std::runtime_error);
    CHECK_THROWS_AS(oracle_eps_global(one, kNoFeatures, 1e-3), std::runtime_error);
    CHECK_THROWS_AS(oracle_eps_local(one, kNoFeatures, 1e-3), std::runtime_error);
}

TEST_CASE("eps_local solves the hand-derived quadratic") {
    // 2 classes, 1 feature, uniform prior, conditionals (0.8, 0.2) at the
    // observed value. The flip point solves
    //   (1-e)^2 * 0.4 = ((1-e) 0.5 + e)((1-e) 0.2 + e),
    // whose root in [0,1) is e = 3/13 (the quadratic terms cancel).
    const NaiveBayesModel model = rt::posterior_fixture(0.8);
    const std::vector<std::uint32_t> f{0};
    const double eps = eps_local(model, f, 1e-10);
    CHECK(eps == doctest::Approx(3.0 / 13.0).epsilon(1e-9));

    // Bisection contract: tighter and looser tolerances agree within the
    // looser one.
    CHECK(std::abs(eps_local(model, f, 1e-6) - eps) <= 1e-6);
}

TEST_CASE("eps_local is exactly zero on a tie") {
    const NaiveBayesModel model = rt::posterior_fixture(0.5);
    CHECK(eps_local(model, std::vector<std::uint32_t>{0}, 1e-10) == 0.0);
    CHECK_THROWS_AS(eps_local(model, std::vector<std::uint32_t>{0}, 0.0), std::runtime_error);
}

TEST_CASE("local predicate brackets the returned value") {
    std::mt19937_64 rng(404);
    const double tol = 1e-10;
    for (int round = 0; round < 40; ++round) {
        const NaiveBayesModel model = rt::random_model(rng, 3, 3, 4);
        const auto f = rt::random_instance(rng, model.domain);
        const double eps = eps_local(model, f, tol);
        CHECK(eps >= 0.0);
        CHECK(eps < 1.0);
        if (eps > 0.0) {
            // Holds strictly below the returned value, fails past it + tol.
            CHECK(local_robustness_predicate(model, f, std::max(eps - 2.0 * tol, 0.0)));
            CHECK_FALSE(local_robustness_predicate(model, f, eps + 2.0 * tol));
        }
    }
}

TEST_CASE("eps_global matches its brute-force oracle") {
    std::mt19937_64 rng(1001);
    const double grid = 1e-3;
    for (int round = 0; round < 60; ++round) {
        const NaiveBayesModel model = rt::random_model(rng, 3, 3, 4);
        const auto f = rt::random_instance(rng, model.domain);
        const double fast = eps_global(model, f);
        const double slow = oracle_eps_global(model, f, grid);
        CHECK(std::abs(fast - slow) <= grid);
    }
}

TEST_CASE("eps_local matches its brute-force oracle") {
    std::mt19937_64 rng(1002);
    const double grid = 1e-3;
    for (int round = 0; round < 30; ++round) {
        const NaiveBayesModel model = rt::random_model(rng, 3, 3, 4);
        const auto f = rt::random_instance(rng, model.domain);
        const double fast = eps_local(model, f, 1e-10);
        const double slow = oracle_eps_local(model, f, grid);
        CHECK(std::abs(fast - slow) <= grid);
    }
}

TEST_CASE("oracles return zero on a tie") {
    const NaiveBayesModel model = rt::posterior_fixture(0.5);
    const std::vector<std::uint32_t> f{0};
    CHECK(oracle_eps_global(model, f, 1e-3) == 0.0);
    CHECK(oracle_eps_local(model, f, 1e-3) == 0.0);
}

TEST_CASE("robustness is invariant under class and feature permutations") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 20; ++round) {
        const NaiveBayesModel model = rt::random_model(rng, 3, 3, 3);
        auto f = rt::random_instance(rng, model.domain);
        const double glob = eps_global(model, f);
        const double loc = eps_local(model, f, 1e-10);

        // Swap class labels 0 and 1.
        NaiveBayesModel by_class = model;
        std::swap(by_class.class_prior[0], by_class.class_prior[1]);
        std::swap(by_class.domain.class_labels[0], by_class.domain.class_labels[1]);
        for (auto& feature : by_class.conditionals) std::swap(feature[0], feature[1]);
        CHECK(eps_global(by_class, f) == doctest::Approx(glob).epsilon(1e-12));
        CHECK(eps_local(by_class, f, 1e-10) == doctest::Approx(loc).epsilon(1e-9));

        // Reverse the feature order (and the instance with it).
        NaiveBayesModel by_feature = model;
        std::reverse(by_feature.conditionals.begin(), by_feature.conditionals.end());
        std::reverse(by_feature.domain.feature_names.begin(), by_feature.domain.feature_names.end());
        std::reverse(by_feature.domain.feature_values.begin(), by_feature.domain.feature_values.end());
        auto rf = f;
        std::reverse(rf.begin(), rf.end());
        CHECK(eps_global(by_feature, rf) == doctest::Approx(glob).epsilon(1e-12));
        CHECK(eps_local(by_feature, rf, 1e-10) == doctest::Approx(loc).epsilon(1e-9));
    }
}

TEST_CASE("robustness_scores bundles both metrics") {
    std::mt19937_64 rng(5);
    const NaiveBayesModel model = rt::random_model(rng, 3, 2, 3);
    const auto f = rt::random_instance(rng, model.domain);
    const RobustnessScores s = robustness_scores(model, f, 1e-10);
    CHECK(s.eps_glob == eps_global(model, f));
    CHECK(s.eps_loc == eps_local(model, f, 1e-10));
}

TEST_CASE("trained models give in-range robustness") {
    std::mt19937_64 rng(17);
    const DiscreteDataset data = rt::random_dataset(rng, 80, 3, 3, 3);
    const NaiveBayesModel model = train(data, 0.5);
    for (std::size_t i = 0; i < 20; ++i) {
        const auto& f = data.instances[i].features;
        const double glob = eps_global(model, f);
        const double loc = eps_local(model, f, 1e-10);
        CHECK(glob >= 0.0);
        CHECK(glob < 1.0);
        CHECK(loc >= 0.0);
        CHECK(loc < 1.0);
    }
}
