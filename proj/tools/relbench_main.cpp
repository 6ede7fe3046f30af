#include <cstdint>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "relbench/experiment.hpp"
#include "relbench/kvfile.hpp"
#include "relbench/log.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string datasets;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--datasets", args.datasets,
                    "comma-separated dataset names; restricts the run to these");
}

relbench::ExperimentConfig load_config(const CommonArgs& args) {
    relbench::ExperimentConfig config = relbench::load_experiment_config(args.config_path);
    if (!args.datasets.empty()) {
        for (const std::string& name : relbench::split(args.datasets, ',')) {
            const std::string trimmed = relbench::trim(name);
            if (trimmed.empty()) throw std::runtime_error("empty name in --datasets");
            config.dataset_filter.push_back(trimmed);
        }
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Per-prediction reliability benchmark for Naive Bayes classifiers"};
    app.require_subcommand(1);

    CommonArgs run_args;
    std::uint64_t seed_override = 0;
    std::string out_override;
    int jobs = 1;
    CLI::App* run = app.add_subcommand("run", "run the experiment and write result files");
    add_common(run, run_args);
    CLI::Option* seed_opt =
        run->add_option("--seed", seed_override, "override the config's master_seed");
    CLI::Option* out_opt =
        run->add_option("--out", out_override, "override the config's output directory");
    run->add_option("--jobs", jobs, "datasets processed in parallel")
        ->check(CLI::PositiveNumber)
        ->default_val(1);

    CommonArgs validate_args;
    CLI::App* validate =
        app.add_subcommand("validate", "parse the config and datasets without running");
    add_common(validate, validate_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            relbench::ExperimentConfig config = load_config(run_args);
            if (seed_opt->count() > 0) config.master_seed = seed_override;
            if (out_opt->count() > 0) config.output_dir = out_override;
            config.jobs = jobs;
            return relbench::run_experiment(config);
        }
        relbench::ExperimentConfig config = load_config(validate_args);
        return relbench::validate_experiment(config);
    } catch (const std::exception& e) {
        relbench::log_error(e.what());
        return 2;
    }
}
