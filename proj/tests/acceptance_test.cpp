// Release gate for the benchmark: eight end-to-end checks, one line each.
// Usage: acceptance_tests [repo_root]. Exit code = number of failed checks.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "relbench/arc.hpp"
#include "relbench/experiment.hpp"
#include "relbench/ranking.hpp"
#include "relbench/robustness.hpp"
#include "relbench/uncertainty.hpp"
#include "test_support.hpp"

using namespace relbench;
namespace rt = relbench::testing;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string evidence;
};

std::string num(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1e", v);
    return buf;
}

unsigned max_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------
// 1. Closed-form robustness against grid-walking enumeration.

Verdict check_oracle_equivalence() {
    std::mt19937_64 rng(20240817);
    const double grid = 1e-4;
    double worst_glob = 0.0;
    double worst_loc = 0.0;
    for (int round = 0; round < 200; ++round) {
        const NaiveBayesModel model = rt::random_model(rng, 3, 3, 4);
        const auto f = rt::random_instance(rng, model.domain);
        worst_glob = std::max(worst_glob,
                              std::abs(eps_global(model, f) - oracle_eps_global(model, f, grid)));
        worst_loc = std::max(worst_loc, std::abs(eps_local(model, f, 1e-10) -
                                                 oracle_eps_local(model, f, grid)));
    }
    // One grid cell of slack, plus bisection tolerance and rounding.
    const double bound = grid + 1e-8;
    Verdict v;
    v.pass = worst_glob <= bound && worst_loc <= bound;
    v.evidence = "200 random models at grid 1e-4: max |eps_glob - oracle| = " + sci(worst_glob) +
                 ", max |eps_loc - oracle| = " + sci(worst_loc);
    return v;
}

// ---------------------------------------------------------------------------
// 2. Hybrid order endpoints collapse to the pure orders.

Verdict check_order_endpoints() {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int mismatches = 0;
    for (int round = 0; round < 1000; ++round) {
        const std::size_t n = 2 + rng() % 49;
        std::vector<double> u(n), e(n);
        const bool coarse = round % 3 == 0;  // force ties in a third of the vectors
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = unif(rng);
            e[i] = unif(rng);
            if (coarse) {
                u[i] = std::round(u[i] * 10.0) / 10.0;
                e[i] = std::round(e[i] * 10.0) / 10.0;
            }
        }
        const RankOrder rank_u = order_by_uncertainty(u);
        const RankOrder rank_e = order_by_robustness(e);
        if (hybrid_order(rank_u, rank_e, u, 1.0).order != rank_u.order) ++mismatches;
        if (hybrid_order(rank_u, rank_e, u, 0.0).order != rank_e.order) ++mismatches;
    }
    Verdict v;
    v.pass = mismatches == 0;
    v.evidence = "1000 random score vectors: gamma=1 reproduced the uncertainty order and "
                 "gamma=0 the robustness order exactly (" +
                 std::to_string(mismatches) + " mismatches)";
    return v;
}

// ---------------------------------------------------------------------------
// 3. Trained mixture never loses to either pure order on its training set.
//    Runs the whole shipped configuration once; the per-dataset results are
//    reused by check 6.

struct PipelineRun {
    std::vector<DatasetResult> results;
    std::string error;
};

PipelineRun run_all_datasets(const ExperimentConfig& config) {
    PipelineRun run;
    std::vector<DatasetManifest> manifests;
    for (const fs::path& p : config.manifest_paths) manifests.push_back(load_manifest(p.string()));

    std::vector<std::optional<DatasetResult>> slots(manifests.size());
    std::vector<std::string> errors(manifests.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= manifests.size()) return;
            try {
                slots[i] = run_dataset(manifests[i], config);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned n_threads = std::min<unsigned>(max_jobs(), manifests.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            run.error = manifests[i].name + ": " + errors[i];
            return run;
        }
        run.results.push_back(std::move(*slots[i]));
    }
    return run;
}

Verdict check_train_dominance(const PipelineRun& run) {
    Verdict v;
    if (!run.error.empty()) {
        v.evidence = "pipeline failed on " + run.error;
        return v;
    }
    int total = 0;
    int violations = 0;
    for (const DatasetResult& r : run.results) {
        for (const MetricPairResult& pair : r.pairs) {
            ++total;
            const double floor = std::max(pair.train_au_uncertainty, pair.train_au_robustness);
            if (!(pair.weight.train_auarc >= floor)) ++violations;
        }
    }
    v.pass = violations == 0 && total > 0;
    v.evidence = std::to_string(total - violations) + "/" + std::to_string(total) +
                 " metric pairs across " + std::to_string(run.results.size()) +
                 " datasets have trained-hybrid train AU-ARC >= both pure orders";
    return v;
}

// ---------------------------------------------------------------------------
// 4. Entropy decomposition over random ensembles.

Verdict check_entropy_decomposition() {
    std::mt19937_64 rng(4);
    double worst_residual = 0.0;
    int negatives = 0;
    for (int round = 0; round < 10000; ++round) {
        const std::size_t classes = 2 + rng() % 3;
        const std::size_t features = 1 + rng() % 3;
        const std::size_t categories = 2 + rng() % 3;
        const FeatureDomain domain = rt::make_domain(features, categories, classes);

        ModelEnsemble ensemble;
        const std::size_t members = 2 + rng() % 7;
        for (std::size_t m = 0; m < members; ++m) {
            NaiveBayesModel member;
            member.domain = domain;
            member.smoothing = 1.0;
            member.class_prior = rt::random_distribution(rng, classes);
            for (std::size_t i = 0; i < features; ++i) {
                std::vector<std::vector<double>> per_class;
                for (std::size_t c = 0; c < classes; ++c) {
                    per_class.push_back(rt::random_distribution(rng, categories));
                }
                member.conditionals.push_back(std::move(per_class));
            }
            ensemble.members.push_back(std::move(member));
        }

        const auto f = rt::random_instance(rng, domain);
        const EnsembleUncertainty eu = ensemble_uncertainty(ensemble, f);
        if (eu.epistemic < 0.0) ++negatives;
        worst_residual =
            std::max(worst_residual, std::abs(eu.total - (eu.aleatoric + eu.epistemic)));
    }
    Verdict v;
    v.pass = negatives == 0 && worst_residual <= 1e-9;
    v.evidence = "10000 random ensembles: max |u_t - (u_a + u_e)| = " + sci(worst_residual) +
                 ", " + std::to_string(negatives) + " negative u_e";
    return v;
}

// ---------------------------------------------------------------------------
// 5. ARC fixture and ideal-order dominance.

Verdict check_arc_values() {
    // Rejecting the single mistake first gives 3/4, 3/3, 2/2, 1/1 and an
    // exactly-representable mean of 0.9375.
    const std::vector<bool> fixture{true, false, true, true};
    const AccuracyRejectionCurve curve = arc(ideal_order(fixture), fixture);
    const bool fixture_ok = curve.accuracies == std::vector<double>{0.75, 1.0, 1.0, 1.0} &&
                            curve.auarc == 0.9375 && au_arc(curve) == 0.9375;

    std::mt19937_64 rng(5);
    int perms = 0;
    int beaten = 0;
    std::vector<std::vector<bool>> fixtures{fixture};
    for (int extra = 0; extra < 5; ++extra) {
        std::vector<bool> correct(30);
        for (std::size_t i = 0; i < correct.size(); ++i) correct[i] = rng() % 2 == 0;
        fixtures.push_back(std::move(correct));
    }
    for (const std::vector<bool>& correct : fixtures) {
        const double best = arc(ideal_order(correct), correct).auarc;
        std::vector<std::size_t> perm(correct.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int round = 0; round < 1000; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            ++perms;
            if (arc(make_rank_order(perm), correct).auarc > best) ++beaten;
        }
    }
    Verdict v;
    v.pass = fixture_ok && beaten == 0;
    v.evidence = std::string("T,F,T,T fixture AU = 0.9375 ") +
                 (fixture_ok ? "exactly" : "MISMATCH") + "; ideal order dominated " +
                 std::to_string(perms - beaten) + "/" + std::to_string(perms) +
                 " random permutations";
    return v;
}

// ---------------------------------------------------------------------------
// 6. Entropy/global-robustness/hybrid quality on breast_cancer at the shipped
//    seed.

Verdict check_reference_dataset(const PipelineRun& run, const ExperimentConfig& config) {
    Verdict v;
    const DatasetResult* bc = nullptr;
    for (const DatasetResult& r : run.results) {
        if (r.name == "breast_cancer") bc = &r;
    }
    std::optional<DatasetResult> local;
    if (bc == nullptr) {  // pipeline run unavailable; compute just this dataset
        for (const fs::path& p : config.manifest_paths) {
            const DatasetManifest manifest = load_manifest(p.string());
            if (manifest.name == "breast_cancer") {
                local = run_dataset(manifest, config);
                bc = &*local;
            }
        }
    }
    if (bc == nullptr) {
        v.evidence = "no dataset named breast_cancer in the configuration";
        return v;
    }

    const MetricPairResult* pair = nullptr;
    for (const MetricPairResult& p : bc->pairs) {
        if (p.u_metric == UncertaintyMetric::Entropy && p.e_metric == RobustnessMetric::EpsGlobal) {
            pair = &p;
        }
    }
    if (pair == nullptr) {
        v.evidence = "entropy x global-robustness pair not configured";
        return v;
    }

    const double unc = pair->test_uncertainty.auarc;
    const double glob = pair->test_robustness.auarc;
    const double hyb = pair->test_hybrid.auarc;
    const double gamma = pair->weight.gamma;
    v.pass = unc >= 0.985 && glob >= 0.985 && hyb >= std::max(unc, glob) - 1e-9 && gamma >= 0.3 &&
             gamma <= 0.8;
    v.evidence = "breast_cancer test AU: u_H " + num(unc) + ", eps_glob " + num(glob) +
                 ", hybrid " + num(hyb) + " (>= max of the two - 1e-9), gamma = " + num(gamma, 2) +
                 " in [0.3, 0.8]";
    return v;
}

// ---------------------------------------------------------------------------
// 7. Summary table shape and bounds from a full run.

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

Verdict check_summary_tables(const fs::path& out_dir, std::size_t expected_rows) {
    Verdict v;
    const std::vector<std::string> metrics{"u_m", "u_H", "u_t", "u_a", "u_e"};
    double lo_au = 1.0;
    double hi_au = 0.0;
    std::size_t files = 0;
    for (const std::string& m : metrics) {
        const fs::path path = out_dir / ("summary_" + m + ".csv");
        if (!fs::exists(path)) {
            v.evidence = "missing " + path.filename().string();
            return v;
        }
        ++files;
        std::istringstream in(rt::read_file(path));
        std::string line;
        std::vector<std::string> rows;
        while (std::getline(in, line)) rows.push_back(line);
        if (rows.empty() || rows[0] != "dataset,unc,glob,hybridA,mixingA,local,hybridB,mixingB") {
            v.evidence = path.filename().string() + " has the wrong header";
            return v;
        }
        if (rows.size() != expected_rows + 1) {
            v.evidence = path.filename().string() + " has " + std::to_string(rows.size() - 1) +
                         " rows, expected " + std::to_string(expected_rows);
            return v;
        }
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const std::vector<std::string> fields = split_csv(rows[r]);
            if (fields.size() != 8) {
                v.evidence = path.filename().string() + " row " + std::to_string(r) + " has " +
                             std::to_string(fields.size()) + " columns, expected 8";
                return v;
            }
            for (std::size_t c : {1u, 2u, 3u, 5u, 6u}) {  // the AU-ARC columns
                const double au = std::stod(fields[c]);
                lo_au = std::min(lo_au, au);
                hi_au = std::max(hi_au, au);
            }
            for (std::size_t c : {4u, 7u}) {  // the trained gammas
                const double g = std::stod(fields[c]);
                if (g < 0.0 || g > 1.0) {
                    v.evidence = path.filename().string() + " row " + std::to_string(r) +
                                 " has gamma " + fields[c] + " outside [0,1]";
                    return v;
                }
            }
        }
    }
    v.pass = lo_au >= 0.5 && hi_au <= 1.0;
    v.evidence = std::to_string(files) + " summary tables x " + std::to_string(expected_rows) +
                 " rows x 8 columns; AU-ARC range [" + num(lo_au) + ", " + num(hi_au) + "]";
    return v;
}

// ---------------------------------------------------------------------------
// 8. Byte-identical output under repetition and maximal parallelism.

Verdict check_determinism(const fs::path& dir_a, const fs::path& dir_b, unsigned jobs_b) {
    Verdict v;
    auto names = [](const fs::path& dir) {
        std::vector<std::string> out;
        for (const auto& entry : fs::directory_iterator(dir)) {
            out.push_back(entry.path().filename().string());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    const std::vector<std::string> a = names(dir_a);
    const std::vector<std::string> b = names(dir_b);
    if (a != b) {
        v.evidence = "output directories list different files (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")";
        return v;
    }
    for (const std::string& name : a) {
        if (rt::read_file(dir_a / name) != rt::read_file(dir_b / name)) {
            v.evidence = name + " differs between the two runs";
            return v;
        }
    }
    v.pass = true;
    v.evidence = std::to_string(a.size()) + " output files byte-identical between jobs=1 and jobs=" +
                 std::to_string(jobs_b) + " runs";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    ::setenv("RELBENCH_LOG", "silent", 0);
    const fs::path repo = argc > 1 ? fs::path(argv[1]) : fs::path(".");
    const fs::path config_path = repo / "configs" / "experiment.cfg";

    int failures = 0;
    auto report = [&](int id, const Verdict& v) {
        std::printf("criterion %d: %s - %s\n", id, v.pass ? "PASS" : "FAIL", v.evidence.c_str());
        std::fflush(stdout);
        if (!v.pass) ++failures;
    };
    auto guarded = [&](int id, auto&& fn) {
        try {
            report(id, fn());
        } catch (const std::exception& e) {
            report(id, Verdict{false, std::string("exception: ") + e.what()});
        }
    };

    ExperimentConfig config;
    try {
        config = load_experiment_config(config_path);
    } catch (const std::exception& e) {
        std::printf("cannot load %s: %s\n", config_path.string().c_str(), e.what());
        return 8;
    }

    guarded(1, check_oracle_equivalence);
    guarded(2, check_order_endpoints);

    PipelineRun run;
    try {
        run = run_all_datasets(config);
    } catch (const std::exception& e) {
        run.error = e.what();
    }
    guarded(3, [&] { return check_train_dominance(run); });
    guarded(4, check_entropy_decomposition);
    guarded(5, check_arc_values);
    guarded(6, [&] { return check_reference_dataset(run, config); });

    // Criteria 7 and 8 need real output trees from the full pipeline.
    rt::TempDir scratch("relbench_accept");
    const unsigned jobs_b = std::max(2u, max_jobs());
    try {
        ExperimentConfig serial = config;
        serial.output_dir = scratch.file("outA");
        serial.jobs = 1;
        ExperimentConfig parallel = config;
        parallel.output_dir = scratch.file("outB");
        parallel.jobs = static_cast<int>(jobs_b);
        if (run_experiment(serial) != 0 || run_experiment(parallel) != 0) {
            report(7, Verdict{false, "full pipeline run reported failures"});
            report(8, Verdict{false, "full pipeline run reported failures"});
            return failures;
        }
        guarded(7, [&] { return check_summary_tables(serial.output_dir,
                                                     config.manifest_paths.size()); });
        guarded(8, [&] { return check_determinism(serial.output_dir, parallel.output_dir,
                                                  jobs_b); });
    } catch (const std::exception& e) {
        report(7, Verdict{false, std::string("exception: ") + e.what()});
        report(8, Verdict{false, std::string("exception: ") + e.what()});
    }

    return failures;
}
