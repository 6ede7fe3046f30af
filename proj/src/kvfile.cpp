#include "relbench/kvfile.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace relbench {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(s);
    while (std::getline(in, field, delim)) out.push_back(field);
    if (!s.empty() && s.back() == delim) out.push_back("");
    if (s.empty()) out.push_back("");
    return out;
}

void KeyValueFile::fail(const std::string& message) const {
    throw std::runtime_error(origin_ + ": " + message);
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

KeyValueFile KeyValueFile::parse_text(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            kv.fail("line " + std::to_string(lineno) + ": expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            kv.fail("line " + std::to_string(lineno) + ": empty key");
        if (kv.find(key) != nullptr)
            kv.fail("line " + std::to_string(lineno) + ": duplicate key `" + key + "`");
        kv.entries_.emplace_back(std::move(key), std::move(value));
    }
    return kv;
}

const std::string* KeyValueFile::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

bool KeyValueFile::has(const std::string& key) const { return find(key) != nullptr; }

std::string KeyValueFile::get_string(const std::string& key) const {
    const std::string* v = find(key);
    if (v == nullptr) fail("missing required key `" + key + "`");
    return *v;
}

std::string KeyValueFile::get_string_or(const std::string& key, const std::string& fallback) const {
    const std::string* v = find(key);
    return v != nullptr ? *v : fallback;
}

std::optional<std::string> KeyValueFile::get_optional(const std::string& key) const {
    const std::string* v = find(key);
    if (v == nullptr) return std::nullopt;
    return *v;
}

double KeyValueFile::get_double(const std::string& key) const {
    const std::string raw = get_string(key);
    errno = 0;
    char* end = nullptr;
    double value = std::strtod(raw.c_str(), &end);
    if (errno != 0 || end == raw.c_str() || *end != '\0')
        fail("key `" + key + "`: not a number: `" + raw + "`");
    return value;
}

double KeyValueFile::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::int64_t KeyValueFile::get_int(const std::string& key) const {
    const std::string raw = get_string(key);
    errno = 0;
    char* end = nullptr;
    long long value = std::strtoll(raw.c_str(), &end, 10);
    if (errno != 0 || end == raw.c_str() || *end != '\0')
        fail("key `" + key + "`: not an integer: `" + raw + "`");
    return value;
}

std::int64_t KeyValueFile::get_int_or(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValueFile::get_uint64_or(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string raw = get_string(key);
    errno = 0;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw.c_str(), &end, 10);
    if (errno != 0 || end == raw.c_str() || *end != '\0')
        fail("key `" + key + "`: not an unsigned integer: `" + raw + "`");
    return value;
}

std::vector<std::string> KeyValueFile::get_list_or(const std::string& key) const {
    std::vector<std::string> out;
    const std::string* v = find(key);
    if (v == nullptr || trim(*v).empty()) return out;
    for (const std::string& piece : split(*v, ',')) {
        std::string item = trim(piece);
        if (item.empty()) fail("key `" + key + "`: empty list element");
        out.push_back(std::move(item));
    }
    return out;
}

void KeyValueFile::require_known_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [k, v] : entries_) {
        bool known = false;
        for (const std::string& a : allowed)
            if (k == a) { known = true; break; }
        if (!known) fail("unknown key `" + k + "`");
    }
}

}  // namespace relbench
