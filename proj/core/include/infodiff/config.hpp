#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infodiff {

/// Minimal TOML-style configuration: `[section]` headers (dotted names are
/// kept verbatim), `key = value` pairs, `#` comments. Values may be quoted;
/// lists are comma separated, optionally wrapped in brackets.
class Config {
public:
    static Config parse(std::string_view text);
    static Config load(const std::string& path);

    /// Sections in order of first appearance. Keys before any header belong
    /// to the "" section.
    const std::vector<std::string>& sections() const { return order_; }
    bool has_section(const std::string& section) const { return values_.count(section) != 0; }
    bool has(const std::string& section, const std::string& key) const;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<std::string> get_list(const std::string& section, const std::string& key) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

    /// Keys of a section, in file order.
    std::vector<std::string> keys(const std::string& section) const;

private:
    std::vector<std::string> order_;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> values_;
};

} // namespace infodiff
