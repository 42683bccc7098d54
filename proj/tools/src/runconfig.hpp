#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ringwalk::cli {

/// Canonical key = value view of one CLI invocation. Flags override config
/// file entries; defaults are materialized before execution so the emitted
/// header always records the effective configuration. Serializing and
/// re-parsing a config reproduces it exactly.
struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> options;

    std::string text() const;
    static RunConfig parse_text(const std::string& text);

    bool has(const std::string& key) const { return options.count(key) > 0; }
    const std::string& raw(const std::string& key) const;

    int get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    const std::string& get_string(const std::string& key) const;

    /// "a:b" inclusive integer range
    std::pair<int, int> get_range(const std::string& key) const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string format_double(double value);
std::string format_int(long long value);

}  // namespace ringwalk::cli
