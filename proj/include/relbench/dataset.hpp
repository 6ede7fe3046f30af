#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relbench {

// Task rewrites applied to the raw table before encoding.
//   SolarFlareBinary: the columns c_class/m_class/x_class hold flare counts;
//     the target becomes "flare" iff their sum is >= 1, and the two count
//     columns that are not the target column are removed.
//   StudentPassFail: the target column holds a final grade on a 0-20 scale;
//     it becomes "pass" iff the grade is >= 10.
enum class TaskTransform { None, SolarFlareBinary, StudentPassFail };

TaskTransform parse_transform(const std::string& name);
std::string transform_name(TaskTransform t);

/// Per-dataset description of one raw delimited text file and how to turn it
/// into a discrete classification task. Loaded from a plain-text key/value
/// file; relative paths resolve against the manifest's own directory.
struct DatasetManifest {
    std::string name;
    std::string path;
    std::string target_column;
    std::vector<std::string> continuous_columns;  // dropped before encoding
    std::string missing_token = "?";
    TaskTransform transform = TaskTransform::None;
    std::optional<std::string> provided_test_path;
    std::uint64_t split_seed = 0;
    double train_fraction = 0.6;
    char delimiter = ',';
};

DatasetManifest load_manifest(const std::string& path);

/// Finite category domains shared by a train/test pair. Values are the
/// distinct strings seen in the union of both files, sorted lexicographically,
/// so encoded indices are stable across runs and no test value can be
/// out-of-vocabulary.
struct FeatureDomain {
    std::vector<std::string> feature_names;
    std::vector<std::vector<std::string>> feature_values;
    std::vector<std::string> class_labels;

    std::size_t feature_count() const { return feature_names.size(); }
    std::size_t category_count(std::size_t feature) const { return feature_values[feature].size(); }
    std::size_t class_count() const { return class_labels.size(); }

    bool operator==(const FeatureDomain&) const = default;
};

struct Instance {
    std::vector<std::uint32_t> features;
    std::uint32_t label = 0;

    bool operator==(const Instance&) const = default;
};

struct DiscreteDataset {
    FeatureDomain domain;
    std::vector<Instance> instances;

    std::size_t size() const { return instances.size(); }
    std::size_t feature_count() const { return domain.feature_count(); }
};

struct DatasetSplit {
    DiscreteDataset train;
    DiscreteDataset test;
};

/// Load and encode the file at manifest.path: drop the declared continuous
/// columns, apply the task transform, remove rows whose surviving fields
/// equal the missing token, and integer-encode the rest. Row order follows
/// the file.
DiscreteDataset load_dataset(const DatasetManifest& manifest);

/// Split into train/test. With provided_test_path set, that file is loaded
/// under the same manifest rules and becomes the test set verbatim (no
/// shuffle) and the domains of both files are merged. Otherwise a seeded
/// Fisher-Yates shuffle of the instance indices assigns the first
/// round(train_fraction * n) instances to train.
DatasetSplit split_dataset(const DiscreteDataset& data, const DatasetManifest& manifest);

}  // namespace relbench
