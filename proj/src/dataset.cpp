#include "relbench/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "relbench/kvfile.hpp"
#include "relbench/rng.hpp"

namespace relbench {

namespace {

struct RawTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name, const std::string& origin) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::runtime_error(origin + ": column `" + name + "` not found");
    }
};

RawTable read_delimited(const std::string& path, char delimiter) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    RawTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            for (const std::string& name : split(line, delimiter)) {
                std::string col = trim(name);
                if (col.empty())
                    throw std::runtime_error(path + ": header has an empty column name");
                if (std::find(table.columns.begin(), table.columns.end(), col) != table.columns.end())
                    throw std::runtime_error(path + ": duplicate column `" + col + "`");
                table.columns.push_back(std::move(col));
            }
            continue;
        }
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split(line, delimiter);
        if (fields.size() != table.columns.size())
            throw std::runtime_error(path + ": row " + std::to_string(lineno) + ": expected " +
                                     std::to_string(table.columns.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        for (std::string& f : fields) f = trim(f);
        table.rows.push_back(std::move(fields));
    }
    if (table.columns.empty())
        throw std::runtime_error(path + ": empty file (no header row)");
    return table;
}

long parse_count(const std::string& value, const std::string& path, int row, const std::string& column) {
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0' || v < 0)
        throw std::runtime_error(path + ": row " + std::to_string(row) + ", column `" + column +
                                 "`: expected a non-negative integer, got `" + value + "`");
    return v;
}

void apply_transform(RawTable& table, const DatasetManifest& manifest, const std::string& path) {
    if (manifest.transform == TaskTransform::None) return;

    if (manifest.transform == TaskTransform::StudentPassFail) {
        std::size_t t = table.column_index(manifest.target_column, path);
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            std::string& cell = table.rows[r][t];
            if (cell == manifest.missing_token) continue;
            long grade = parse_count(cell, path, static_cast<int>(r) + 2, manifest.target_column);
            cell = grade >= 10 ? "pass" : "fail";
        }
        return;
    }

    // SolarFlareBinary: sum the three flare-count columns into a binary class.
    static const char* kCounts[3] = {"c_class", "m_class", "x_class"};
    std::size_t idx[3];
    for (int i = 0; i < 3; ++i) idx[i] = table.column_index(kCounts[i], path);
    bool target_is_count = false;
    for (int i = 0; i < 3; ++i)
        if (manifest.target_column == kCounts[i]) target_is_count = true;
    if (!target_is_count)
        throw std::runtime_error(path + ": solar_flare_binary requires target_column to be one of "
                                        "c_class/m_class/x_class");

    std::size_t t = table.column_index(manifest.target_column, path);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        long sum = 0;
        bool missing = false;
        for (int i = 0; i < 3; ++i) {
            const std::string& cell = table.rows[r][idx[i]];
            if (cell == manifest.missing_token) { missing = true; break; }
            sum += parse_count(cell, path, static_cast<int>(r) + 2, kCounts[i]);
        }
        table.rows[r][t] = missing ? manifest.missing_token : (sum >= 1 ? "flare" : "no_flare");
    }

    // Drop the two count columns that are not the target.
    std::vector<std::size_t> to_drop;
    for (int i = 0; i < 3; ++i)
        if (idx[i] != t) to_drop.push_back(idx[i]);
    std::sort(to_drop.rbegin(), to_drop.rend());
    for (std::size_t col : to_drop) {
        table.columns.erase(table.columns.begin() + static_cast<std::ptrdiff_t>(col));
        for (auto& row : table.rows) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    }
}

// Raw feature/class strings after transform, column drops, and missing-row
// filtering; still unencoded.
struct FilteredTable {
    std::vector<std::string> feature_names;
    std::vector<std::vector<std::string>> rows;  // feature values per row
    std::vector<std::string> labels;
};

FilteredTable load_filtered(const DatasetManifest& manifest, const std::string& path) {
    RawTable table = read_delimited(path, manifest.delimiter);
    apply_transform(table, manifest, path);

    std::size_t target = table.column_index(manifest.target_column, path);

    std::vector<bool> keep(table.columns.size(), true);
    for (const std::string& col : manifest.continuous_columns) {
        std::size_t i = table.column_index(col, path);
        if (i == target)
            throw std::runtime_error(path + ": target column `" + col + "` is listed as continuous");
        keep[i] = false;
    }

    FilteredTable out;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        if (keep[i] && i != target) out.feature_names.push_back(table.columns[i]);

    for (const auto& row : table.rows) {
        bool missing = false;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!keep[i] && i != target) continue;
            if (row[i] == manifest.missing_token) { missing = true; break; }
        }
        if (missing) continue;
        std::vector<std::string> values;
        values.reserve(out.feature_names.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            if (keep[i] && i != target) values.push_back(row[i]);
        out.rows.push_back(std::move(values));
        out.labels.push_back(row[target]);
    }

    if (out.rows.empty())
        throw std::runtime_error(path + ": empty dataset after filtering");
    return out;
}

FeatureDomain build_domain(const FilteredTable& table) {
    FeatureDomain domain;
    domain.feature_names = table.feature_names;
    domain.feature_values.resize(table.feature_names.size());
    for (std::size_t i = 0; i < table.feature_names.size(); ++i) {
        std::set<std::string> values;
        for (const auto& row : table.rows) values.insert(row[i]);
        domain.feature_values[i].assign(values.begin(), values.end());
    }
    std::set<std::string> classes(table.labels.begin(), table.labels.end());
    domain.class_labels.assign(classes.begin(), classes.end());
    return domain;
}

std::uint32_t index_of(const std::vector<std::string>& values, const std::string& v) {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v)
        throw std::runtime_error("value `" + v + "` not in domain");
    return static_cast<std::uint32_t>(it - values.begin());
}

DiscreteDataset encode(const FilteredTable& table, FeatureDomain domain) {
    DiscreteDataset data;
    data.domain = std::move(domain);
    data.instances.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        Instance inst;
        inst.features.reserve(table.feature_names.size());
        for (std::size_t i = 0; i < table.feature_names.size(); ++i)
            inst.features.push_back(index_of(data.domain.feature_values[i], table.rows[r][i]));
        inst.label = index_of(data.domain.class_labels, table.labels[r]);
        data.instances.push_back(std::move(inst));
    }
    return data;
}

std::vector<std::string> merge_sorted(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> u(a.begin(), a.end());
    u.insert(b.begin(), b.end());
    return {u.begin(), u.end()};
}

}  // namespace

TaskTransform parse_transform(const std::string& name) {
    if (name == "none") return TaskTransform::None;
    if (name == "solar_flare_binary") return TaskTransform::SolarFlareBinary;
    if (name == "student_pass_fail") return TaskTransform::StudentPassFail;
    throw std::runtime_error("unknown transform: `" + name + "`");
}

std::string transform_name(TaskTransform t) {
    switch (t) {
        case TaskTransform::None: return "none";
        case TaskTransform::SolarFlareBinary: return "solar_flare_binary";
        case TaskTransform::StudentPassFail: return "student_pass_fail";
    }
    return "none";
}

DatasetManifest load_manifest(const std::string& path) {
    KeyValueFile kv = KeyValueFile::parse_file(path);
    kv.require_known_keys({"name", "path", "target_column", "continuous_columns", "missing_token",
                           "transform", "provided_test_path", "split_seed", "train_fraction",
                           "delimiter"});

    DatasetManifest m;
    m.name = kv.get_string("name");
    m.target_column = kv.get_string("target_column");
    m.continuous_columns = kv.get_list_or("continuous_columns");
    m.missing_token = kv.get_string_or("missing_token", "?");
    m.transform = parse_transform(kv.get_string_or("transform", "none"));
    m.split_seed = kv.get_uint64_or("split_seed", 0);
    m.train_fraction = kv.get_double_or("train_fraction", 0.6);

    std::string delim = kv.get_string_or("delimiter", ",");
    if (delim == "tab") delim = "\t";
    if (delim.size() != 1)
        throw std::runtime_error(path + ": delimiter must be a single character or `tab`");
    m.delimiter = delim[0];

    if (m.train_fraction <= 0.0 || m.train_fraction >= 1.0)
        throw std::runtime_error(path + ": train_fraction must lie in (0,1)");
    for (const std::string& col : m.continuous_columns)
        if (col == m.target_column)
            throw std::runtime_error(path + ": target_column may not appear in continuous_columns");

    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).lexically_normal().string();
    };
    m.path = resolve(kv.get_string("path"));
    if (auto test = kv.get_optional("provided_test_path"))
        m.provided_test_path = resolve(*test);
    return m;
}

DiscreteDataset load_dataset(const DatasetManifest& manifest) {
    FilteredTable table = load_filtered(manifest, manifest.path);
    return encode(table, build_domain(table));
}

DatasetSplit split_dataset(const DiscreteDataset& data, const DatasetManifest& manifest) {
    if (manifest.provided_test_path) {
        FilteredTable train_raw = load_filtered(manifest, manifest.path);
        FilteredTable test_raw = load_filtered(manifest, *manifest.provided_test_path);
        if (train_raw.feature_names != test_raw.feature_names)
            throw std::runtime_error("domain mismatch: feature columns of `" + manifest.path +
                                     "` and `" + *manifest.provided_test_path + "` differ");

        FeatureDomain train_dom = build_domain(train_raw);
        FeatureDomain test_dom = build_domain(test_raw);
        FeatureDomain merged;
        merged.feature_names = train_dom.feature_names;
        merged.feature_values.resize(merged.feature_names.size());
        for (std::size_t i = 0; i < merged.feature_names.size(); ++i)
            merged.feature_values[i] = merge_sorted(train_dom.feature_values[i], test_dom.feature_values[i]);
        merged.class_labels = merge_sorted(train_dom.class_labels, test_dom.class_labels);

        DatasetSplit out;
        out.train = encode(train_raw, merged);
        out.test = encode(test_raw, merged);
        return out;
    }

    const std::size_t n = data.size();
    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::mt19937_64 rng(manifest.split_seed);
    fisher_yates_shuffle(idx, rng);

    const auto train_size = static_cast<std::size_t>(std::llround(manifest.train_fraction * static_cast<double>(n)));
    if (train_size == 0 || train_size >= n)
        throw std::runtime_error("split of dataset `" + manifest.name + "` leaves train or test empty");

    DatasetSplit out;
    out.train.domain = data.domain;
    out.test.domain = data.domain;
    for (std::size_t i = 0; i < n; ++i) {
        const Instance& inst = data.instances[idx[i]];
        (i < train_size ? out.train : out.test).instances.push_back(inst);
    }
    return out;
}

}  // namespace relbench
