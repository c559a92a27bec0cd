#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace antijam {

// Validation failure with a stable machine-readable kind in front of the
// human-readable detail, e.g. "missing_field: [network] noise_density".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(kind) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// INI-style configuration text: [section] headers, key = value lines, '#'
// starts a comment. Values are scalars or whitespace-separated lists.
// See configs/default.ini for the documented schema.
class Config {
public:
    Config() = default;

    static Config parse(const std::string& text);
    static Config parse_file(const std::string& path);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;
    /// Keys of a section in file order.
    std::vector<std::string> keys(const std::string& section) const;

    const std::string& get_string(const std::string& section, const std::string& key) const;
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key, double fallback) const;
    long long get_int(const std::string& section, const std::string& key) const;
    long long get_int_or(const std::string& section, const std::string& key, long long fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key) const;
    std::uint64_t get_u64_or(const std::string& section, const std::string& key,
                             std::uint64_t fallback) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

    /// Insert or overwrite a key (used by sweep parameter overrides).
    void set(const std::string& section, const std::string& key, const std::string& value);

private:
    struct Entry {
        std::string section;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries_;

    const Entry* find(const std::string& section, const std::string& key) const;
};

}  // namespace antijam
