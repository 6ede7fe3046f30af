#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relbench {

// Plain-text key/value file: one `key = value` pair per line, `#` starts a
// comment, blank lines ignored. Keys must be unique. Used for dataset
// manifests and experiment configs.
class KeyValueFile {
public:
    static KeyValueFile parse_file(const std::string& path);
    static KeyValueFile parse_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    const std::string& origin() const { return origin_; }

    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    std::optional<std::string> get_optional(const std::string& key) const;

    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_uint64_or(const std::string& key, std::uint64_t fallback) const;

    // Comma-separated list value, each element trimmed; empty elements rejected.
    std::vector<std::string> get_list_or(const std::string& key) const;

    // Keys present in the file but not in `allowed` raise an error; catches typos.
    void require_known_keys(const std::vector<std::string>& allowed) const;

private:
    std::string origin_;
    std::vector<std::pair<std::string, std::string>> entries_;

    const std::string* find(const std::string& key) const;
    [[noreturn]] void fail(const std::string& message) const;
};

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char delim);

}  // namespace relbench
