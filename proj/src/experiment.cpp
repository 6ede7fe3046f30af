#include "relbench/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "relbench/kvfile.hpp"
#include "relbench/log.hpp"
#include "relbench/rng.hpp"
#include "relbench/robustness.hpp"
#include "relbench/uncertainty.hpp"

namespace fs = std::filesystem;

namespace relbench {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

double parse_positive_double(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(what + ": cannot parse `" + s + "` as a number");
    }
    if (pos != s.size()) throw std::runtime_error(what + ": cannot parse `" + s + "` as a number");
    if (!(v > 0.0)) throw std::runtime_error(what + ": `" + s + "` must be positive");
    return v;
}

void check_config_values(const ExperimentConfig& config) {
    if (config.manifest_paths.empty()) throw std::runtime_error("config lists no manifests");
    if (config.smoothing_grid.empty()) throw std::runtime_error("smoothing grid is empty");
    for (double a : config.smoothing_grid) {
        if (!(a > 0.0)) throw std::runtime_error("smoothing grid values must be positive");
    }
    if (config.cv_folds < 2) throw std::runtime_error("cv_folds must be at least 2");
    if (config.ensemble_size < 2) throw std::runtime_error("ensemble_size must be at least 2");
    if (!(config.gamma_grid_step > 0.0 && config.gamma_grid_step <= 1.0)) {
        throw std::runtime_error("gamma_grid_step must lie in (0,1]");
    }
    if (!(config.eps_tol > 0.0)) throw std::runtime_error("eps_tol must be positive");
    if (config.uncertainty_metrics.empty()) throw std::runtime_error("no uncertainty metrics");
    if (config.robustness_metrics.empty()) throw std::runtime_error("no robustness metrics");
    if (config.jobs < 1) throw std::runtime_error("jobs must be at least 1");
}

struct DatasetSlot {
    fs::path manifest_path;
    std::optional<DatasetManifest> manifest;  // empty when the manifest failed to load
    std::string error;
    bool selected = true;
    std::optional<DatasetResult> result;
};

/// Loads all manifests, applies the name filter, and reports broken
/// manifests. Throws on a filter name that matches nothing.
std::vector<DatasetSlot> prepare_slots(const ExperimentConfig& config) {
    std::vector<DatasetSlot> slots;
    slots.reserve(config.manifest_paths.size());
    for (const fs::path& p : config.manifest_paths) {
        DatasetSlot slot;
        slot.manifest_path = p;
        try {
            slot.manifest = load_manifest(p.string());
        } catch (const std::exception& e) {
            slot.error = e.what();
        }
        slots.push_back(std::move(slot));
    }

    if (!config.dataset_filter.empty()) {
        for (const std::string& want : config.dataset_filter) {
            bool found = false;
            for (const DatasetSlot& slot : slots) {
                if (slot.manifest && slot.manifest->name == want) found = true;
            }
            if (!found) {
                throw std::runtime_error("dataset filter names no configured dataset: `" + want +
                                         "`");
            }
        }
        for (DatasetSlot& slot : slots) {
            if (!slot.manifest) {
                // Cannot match a name we never learned; filtered runs skip it.
                log_warn("skipping unreadable manifest " + slot.manifest_path.string() + ": " +
                         slot.error);
                slot.selected = false;
                slot.error.clear();
            } else {
                slot.selected = false;
                for (const std::string& want : config.dataset_filter) {
                    if (slot.manifest->name == want) slot.selected = true;
                }
            }
        }
    }
    return slots;
}

void run_selected(std::vector<DatasetSlot>& slots, const ExperimentConfig& config) {
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].selected && slots[i].manifest) todo.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= todo.size()) return;
            DatasetSlot& slot = slots[todo[t]];
            try {
                slot.result = run_dataset(*slot.manifest, config);
                log_info("dataset " + slot.manifest->name + ": alpha " +
                         fixed(slot.result->alpha, 3) + ", test accuracy " +
                         fixed(slot.result->test_accuracy, 4) + " (" +
                         std::to_string(slot.result->train_size) + " train / " +
                         std::to_string(slot.result->test_size) + " test)");
            } catch (const std::exception& e) {
                slot.error = e.what();
            }
        }
    };

    const int n_threads = std::min<int>(config.jobs, static_cast<int>(todo.size() ? todo.size() : 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);  // \n endings everywhere
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

}  // namespace

std::uint64_t dataset_seed(const std::string& name, std::uint64_t master_seed) {
    return fnv1a64(name) ^ master_seed;
}

std::uint64_t stage_seed(std::uint64_t dataset_seed, const std::string& stage) {
    return splitmix64(dataset_seed ^ fnv1a64(stage));
}

ExperimentConfig load_experiment_config(const fs::path& path) {
    const KeyValueFile kv = KeyValueFile::parse_file(path.string());
    kv.require_known_keys({"manifests", "smoothing_grid", "cv_folds", "ensemble_size",
                           "gamma_grid_step", "eps_tol", "master_seed", "output_dir",
                           "uncertainty_metrics", "robustness_metrics"});

    ExperimentConfig config;
    const fs::path base = path.parent_path();

    const std::vector<std::string> manifest_list = kv.get_list_or("manifests");
    for (const std::string& m : manifest_list) {
        config.manifest_paths.push_back((base / m).lexically_normal());
    }
    if (config.manifest_paths.empty()) throw std::runtime_error("config lists no manifests");

    if (kv.has("smoothing_grid")) {
        config.smoothing_grid.clear();
        for (const std::string& s : kv.get_list_or("smoothing_grid")) {
            config.smoothing_grid.push_back(parse_positive_double(s, "smoothing_grid"));
        }
    }
    config.cv_folds = static_cast<int>(kv.get_int_or("cv_folds", 5));
    config.ensemble_size = static_cast<int>(kv.get_int_or("ensemble_size", 25));
    config.gamma_grid_step = kv.get_double_or("gamma_grid_step", 0.01);
    config.eps_tol = kv.get_double_or("eps_tol", 1e-10);
    config.master_seed = kv.get_uint64_or("master_seed", 0);
    config.output_dir = kv.get_string_or("output_dir", "out");

    if (kv.has("uncertainty_metrics")) {
        config.uncertainty_metrics.clear();
        for (const std::string& id : kv.get_list_or("uncertainty_metrics")) {
            const UncertaintyMetric m = parse_uncertainty_metric(id);
            for (UncertaintyMetric seen : config.uncertainty_metrics) {
                if (seen == m) throw std::runtime_error("duplicate uncertainty metric `" + id + "`");
            }
            config.uncertainty_metrics.push_back(m);
        }
    }
    if (kv.has("robustness_metrics")) {
        config.robustness_metrics.clear();
        for (const std::string& id : kv.get_list_or("robustness_metrics")) {
            const RobustnessMetric m = parse_robustness_metric(id);
            for (RobustnessMetric seen : config.robustness_metrics) {
                if (seen == m) throw std::runtime_error("duplicate robustness metric `" + id + "`");
            }
            config.robustness_metrics.push_back(m);
        }
    }
    check_config_values(config);
    return config;
}

std::vector<ReliabilityRecord> compute_records(const NaiveBayesModel& model,
                                               const ModelEnsemble& ensemble,
                                               const DiscreteDataset& data, double eps_tol) {
    std::vector<ReliabilityRecord> records;
    records.reserve(data.instances.size());
    for (std::size_t i = 0; i < data.instances.size(); ++i) {
        const Instance& inst = data.instances[i];
        const PosteriorDistribution dist = posterior(model, inst.features);
        const EnsembleUncertainty eu = ensemble_uncertainty(ensemble, inst.features);

        ReliabilityRecord r;
        r.index = i;
        r.predicted = dist.predicted_class;
        r.label = inst.label;
        r.correct = dist.predicted_class == inst.label;
        r.u_m = max_prob_uncertainty(dist);
        r.u_H = entropy_uncertainty(dist);
        r.u_t = eu.total;
        r.u_a = eu.aleatoric;
        r.u_e = eu.epistemic;
        r.eps_glob = eps_global(model, inst.features);
        r.eps_loc = eps_local(model, inst.features, eps_tol);
        records.push_back(r);
    }
    return records;
}

DatasetResult run_dataset(const DatasetManifest& manifest, const ExperimentConfig& config) {
    const std::uint64_t ds = dataset_seed(manifest.name, config.master_seed);

    DatasetManifest seeded = manifest;
    seeded.split_seed = stage_seed(ds, "split");

    const DiscreteDataset data = load_dataset(seeded);
    const DatasetSplit split = split_dataset(data, seeded);

    DatasetResult result;
    result.name = manifest.name;
    result.train_size = split.train.size();
    result.test_size = split.test.size();

    result.alpha =
        select_smoothing(split.train, config.smoothing_grid, config.cv_folds, stage_seed(ds, "cv"));
    const NaiveBayesModel model = train(split.train, result.alpha);
    const ModelEnsemble ensemble =
        bootstrap_ensemble(split.train, result.alpha, config.ensemble_size, stage_seed(ds, "ensemble"));

    result.train_records = compute_records(model, ensemble, split.train, config.eps_tol);
    result.test_records = compute_records(model, ensemble, split.test, config.eps_tol);

    std::size_t correct_count = 0;
    for (const ReliabilityRecord& r : result.test_records) correct_count += r.correct ? 1 : 0;
    result.test_accuracy =
        static_cast<double>(correct_count) / static_cast<double>(result.test_records.size());

    // Test-side score vectors, shared across metric pairs.
    std::vector<bool> test_correct(result.test_records.size());
    for (std::size_t i = 0; i < result.test_records.size(); ++i) {
        test_correct[i] = result.test_records[i].correct;
    }
    std::vector<bool> train_correct(result.train_records.size());
    for (std::size_t i = 0; i < result.train_records.size(); ++i) {
        train_correct[i] = result.train_records[i].correct;
    }

    for (UncertaintyMetric u : config.uncertainty_metrics) {
        for (RobustnessMetric e : config.robustness_metrics) {
            MetricPairResult pair;
            pair.u_metric = u;
            pair.e_metric = e;
            pair.weight = train_gamma(result.train_records, u, e, config.gamma_grid_step);

            std::vector<double> train_u(result.train_records.size());
            std::vector<double> train_e(result.train_records.size());
            for (std::size_t i = 0; i < result.train_records.size(); ++i) {
                train_u[i] = metric_value(result.train_records[i], u);
                train_e[i] = metric_value(result.train_records[i], e);
            }
            pair.train_au_uncertainty = arc(order_by_uncertainty(train_u), train_correct).auarc;
            pair.train_au_robustness = arc(order_by_robustness(train_e), train_correct).auarc;

            std::vector<double> test_u(result.test_records.size());
            std::vector<double> test_e(result.test_records.size());
            for (std::size_t i = 0; i < result.test_records.size(); ++i) {
                test_u[i] = metric_value(result.test_records[i], u);
                test_e[i] = metric_value(result.test_records[i], e);
            }
            const RankOrder rank_u = order_by_uncertainty(test_u);
            const RankOrder rank_e = order_by_robustness(test_e);

            pair.test_ideal = arc(ideal_order(test_correct), test_correct);
            pair.test_uncertainty = arc(rank_u, test_correct);
            pair.test_robustness = arc(rank_e, test_correct);
            pair.test_hybrid =
                arc(hybrid_order(rank_u, rank_e, test_u, pair.weight.gamma), test_correct);

            result.pairs.push_back(std::move(pair));
        }
    }
    return result;
}

void emit_arc_file(std::ostream& out, const AccuracyRejectionCurve& ideal,
                   const AccuracyRejectionCurve& robustness,
                   const AccuracyRejectionCurve& uncertainty,
                   const AccuracyRejectionCurve& hybrid) {
    const std::size_t n = ideal.accuracies.size();
    if (robustness.accuracies.size() != n || uncertainty.accuracies.size() != n ||
        hybrid.accuracies.size() != n) {
        throw std::runtime_error("ARC curves differ in length");
    }
    out << "rej_rate ideal robustness uncertainty hybrid\n";
    for (std::size_t k = 0; k < n; ++k) {
        const double rej = static_cast<double>(k) / static_cast<double>(n);
        out << fixed(rej, 6) << ' ' << fixed(ideal.accuracies[k], 6) << ' '
            << fixed(robustness.accuracies[k], 6) << ' ' << fixed(uncertainty.accuracies[k], 6)
            << ' ' << fixed(hybrid.accuracies[k], 6) << '\n';
    }
}

void emit_point_cloud(std::ostream& out, const std::vector<ReliabilityRecord>& records,
                      UncertaintyMetric u_metric, RobustnessMetric e_metric) {
    constexpr double kFloor = 1e-15;
    out << "x y correct\n";
    for (const ReliabilityRecord& r : records) {
        const double x = std::log(std::max(metric_value(r, e_metric), kFloor));
        const double y = -std::log(std::max(metric_value(r, u_metric), kFloor));
        out << fixed(x, 6) << ' ' << fixed(y, 6) << ' ' << (r.correct ? 1 : 0) << '\n';
    }
}

void emit_summary(std::ostream& out, UncertaintyMetric u_metric,
                  const std::vector<DatasetResult>& results) {
    out << "dataset,unc,glob,hybridA,mixingA,local,hybridB,mixingB\n";
    for (const DatasetResult& r : results) {
        const MetricPairResult* glob = nullptr;
        const MetricPairResult* local = nullptr;
        for (const MetricPairResult& pair : r.pairs) {
            if (pair.u_metric != u_metric) continue;
            if (pair.e_metric == RobustnessMetric::EpsGlobal) glob = &pair;
            if (pair.e_metric == RobustnessMetric::EpsLocal) local = &pair;
        }
        if (glob == nullptr && local == nullptr) continue;

        const MetricPairResult* any = glob != nullptr ? glob : local;
        out << r.name << ',' << fixed(any->test_uncertainty.auarc, 4);
        if (glob != nullptr) {
            out << ',' << fixed(glob->test_robustness.auarc, 4) << ','
                << fixed(glob->test_hybrid.auarc, 4) << ',' << fixed(glob->weight.gamma, 2);
        } else {
            out << ",,,";
        }
        if (local != nullptr) {
            out << ',' << fixed(local->test_robustness.auarc, 4) << ','
                << fixed(local->test_hybrid.auarc, 4) << ',' << fixed(local->weight.gamma, 2);
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

int run_experiment(const ExperimentConfig& config) {
    check_config_values(config);
    std::vector<DatasetSlot> slots = prepare_slots(config);
    fs::create_directories(config.output_dir);

    run_selected(slots, config);

    bool any_failed = false;
    std::vector<DatasetResult> results;
    for (DatasetSlot& slot : slots) {
        if (!slot.selected) continue;
        if (!slot.error.empty()) {
            log_error("dataset " +
                      (slot.manifest ? slot.manifest->name : slot.manifest_path.string()) +
                      " failed: " + slot.error);
            any_failed = true;
            continue;
        }
        if (slot.result) results.push_back(std::move(*slot.result));
    }

    for (const DatasetResult& r : results) {
        for (const MetricPairResult& pair : r.pairs) {
            const std::string stem =
                r.name + "_" + metric_id(pair.e_metric) + "_" + metric_id(pair.u_metric);
            std::ofstream arc_out = open_output(config.output_dir / (stem + ".dat"));
            emit_arc_file(arc_out, pair.test_ideal, pair.test_robustness, pair.test_uncertainty,
                          pair.test_hybrid);
            std::ofstream cloud_out = open_output(config.output_dir / (stem + "_cloud.dat"));
            emit_point_cloud(cloud_out, r.test_records, pair.u_metric, pair.e_metric);
        }
    }
    for (UncertaintyMetric u : config.uncertainty_metrics) {
        std::ofstream out = open_output(config.output_dir / ("summary_" + metric_id(u) + ".csv"));
        emit_summary(out, u, results);
    }

    log_info("wrote results for " + std::to_string(results.size()) + " dataset(s) to " +
             config.output_dir.string());
    return any_failed ? 1 : 0;
}

int validate_experiment(const ExperimentConfig& config) {
    check_config_values(config);
    std::vector<DatasetSlot> slots = prepare_slots(config);

    bool any_failed = false;
    for (DatasetSlot& slot : slots) {
        if (!slot.selected) continue;
        if (!slot.manifest) {
            log_error("manifest " + slot.manifest_path.string() + ": " + slot.error);
            any_failed = true;
            continue;
        }
        try {
            const DiscreteDataset data = load_dataset(*slot.manifest);
            const DatasetSplit split = split_dataset(data, *slot.manifest);
            log_info("dataset " + slot.manifest->name + ": ok (" +
                     std::to_string(split.train.size()) + " train / " +
                     std::to_string(split.test.size()) + " test, " +
                     std::to_string(data.feature_count()) + " features, " +
                     std::to_string(data.domain.class_count()) + " classes)");
        } catch (const std::exception& e) {
            log_error("dataset " + slot.manifest->name + ": " + std::string(e.what()));
            any_failed = true;
        }
    }
    return any_failed ? 1 : 0;
}

}  // namespace relbench
