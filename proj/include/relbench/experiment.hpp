#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "relbench/arc.hpp"
#include "relbench/dataset.hpp"
#include "relbench/metrics.hpp"
#include "relbench/nbc.hpp"
#include "relbench/ranking.hpp"
#include "relbench/record.hpp"

namespace relbench {

struct ExperimentConfig {
    std::vector<std::filesystem::path> manifest_paths;
    std::vector<double> smoothing_grid = {0.001, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    int cv_folds = 5;
    int ensemble_size = 25;
    double gamma_grid_step = 0.01;
    double eps_tol = 1e-10;
    std::uint64_t master_seed = 0;
    std::filesystem::path output_dir = "out";
    std::vector<UncertaintyMetric> uncertainty_metrics = {
        UncertaintyMetric::MaxProb, UncertaintyMetric::Entropy, UncertaintyMetric::Total,
        UncertaintyMetric::Aleatoric, UncertaintyMetric::Epistemic};
    std::vector<RobustnessMetric> robustness_metrics = {RobustnessMetric::EpsGlobal,
                                                        RobustnessMetric::EpsLocal};
    // Plumbing, not part of the config file: dataset-name filter (empty = all)
    // and worker thread count.
    std::vector<std::string> dataset_filter;
    int jobs = 1;
};

/// Parse a key-value config file. Relative manifest paths resolve against the
/// config file's directory; missing keys keep the defaults above.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// One (uncertainty, robustness) pair on one dataset.
struct MetricPairResult {
    UncertaintyMetric u_metric = UncertaintyMetric::Entropy;
    RobustnessMetric e_metric = RobustnessMetric::EpsGlobal;
    HybridWeight weight;  // trained on the train records
    double train_au_uncertainty = 0.0;
    double train_au_robustness = 0.0;
    AccuracyRejectionCurve test_ideal;
    AccuracyRejectionCurve test_uncertainty;
    AccuracyRejectionCurve test_robustness;
    AccuracyRejectionCurve test_hybrid;
};

struct DatasetResult {
    std::string name;
    double alpha = 0.0;
    double test_accuracy = 0.0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::vector<ReliabilityRecord> train_records;
    std::vector<ReliabilityRecord> test_records;
    std::vector<MetricPairResult> pairs;
};

/// fnv1a64(name) ^ master_seed.
std::uint64_t dataset_seed(const std::string& name, std::uint64_t master_seed);
/// Decorrelated per-stage stream: splitmix64(dataset_seed ^ fnv1a64(stage)).
std::uint64_t stage_seed(std::uint64_t dataset_seed, const std::string& stage);

/// All reliability scores for every instance of `data` under one final model
/// and its ensemble.
std::vector<ReliabilityRecord> compute_records(const NaiveBayesModel& model,
                                               const ModelEnsemble& ensemble,
                                               const DiscreteDataset& data, double eps_tol);

/// The per-dataset pipeline: split, smoothing selection, final model +
/// ensemble, records on train and test, gamma training and test curves for
/// every configured metric pair. Seeded by the dataset name and master seed;
/// the manifest's own split_seed is superseded.
DatasetResult run_dataset(const DatasetManifest& manifest, const ExperimentConfig& config);

/// 5-column curve file: header `rej_rate ideal robustness uncertainty hybrid`,
/// one 6-decimal row per rejection count.
void emit_arc_file(std::ostream& out, const AccuracyRejectionCurve& ideal,
                   const AccuracyRejectionCurve& robustness,
                   const AccuracyRejectionCurve& uncertainty,
                   const AccuracyRejectionCurve& hybrid);

/// Per-instance scatter data: x = ln(max(eps, 1e-15)), y = -ln(max(u, 1e-15)),
/// correct flag as 0/1.
void emit_point_cloud(std::ostream& out, const std::vector<ReliabilityRecord>& records,
                      UncertaintyMetric u_metric, RobustnessMetric e_metric);

/// One summary table per uncertainty metric: a row per dataset with the
/// test AU-ARCs and trained gammas under both robustness metrics. Pairs the
/// config did not request stay blank.
void emit_summary(std::ostream& out, UncertaintyMetric u_metric,
                  const std::vector<DatasetResult>& results);

/// Full pipeline over every configured dataset, writing summary_<metric>.csv,
/// <dataset>_<emetric>_<umetric>.dat and ..._cloud.dat into output_dir.
/// Returns 0 when every dataset succeeded; failures are logged and skipped.
int run_experiment(const ExperimentConfig& config);

/// Parse/check only: loads the config, every manifest, and every dataset, and
/// reports per-dataset problems without training anything. Returns 0 if clean.
int validate_experiment(const ExperimentConfig& config);

}  // namespace relbench
