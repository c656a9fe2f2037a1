#include "infodiff/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "infodiff/errors.hpp"
#include "infodiff/graph_io.hpp"

namespace infodiff {
namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string unquote(std::string s)
{
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

// Strip a trailing comment that is not inside quotes.
std::string strip_comment(const std::string& line)
{
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

} // namespace

Config Config::parse(std::string_view text)
{
    Config cfg;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config line " + std::to_string(number) + ": unterminated section");
            }
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (!cfg.values_.count(section)) {
                cfg.values_[section];
                cfg.order_.push_back(section);
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = unquote(trim(std::string_view(line).substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(number) + ": empty key");
        }
        if (!cfg.values_.count(section)) {
            cfg.order_.push_back(section);
        }
        auto& entries = cfg.values_[section];
        auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.first == key; });
        if (it != entries.end()) {
            it->second = value;
        } else {
            entries.emplace_back(key, value);
        }
    }
    return cfg;
}

Config Config::load(const std::string& path)
{
    return parse(read_file(path));
}

bool Config::has(const std::string& section, const std::string& key) const
{
    return get(section, key).has_value();
}

std::optional<std::string> Config::get(const std::string& section, const std::string& key) const
{
    auto s = values_.find(section);
    if (s == values_.end()) {
        return std::nullopt;
    }
    for (const auto& [k, v] : s->second) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const
{
    return get(section, key).value_or(fallback);
}

double Config::get_double(const std::string& section, const std::string& key, double fallback) const
{
    auto v = get(section, key);
    if (!v) {
        return fallback;
    }
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw ConfigError("[" + section + "] " + key + ": '" + *v + "' is not a number");
    }
    return out;
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key,
                              std::uint64_t fallback) const
{
    auto v = get(section, key);
    if (!v) {
        return fallback;
    }
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc() || ptr != v->data() + v->size()) {
        throw ConfigError("[" + section + "] " + key + ": '" + *v + "' is not a nonnegative integer");
    }
    return out;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const
{
    auto v = get(section, key);
    if (!v) {
        return fallback;
    }
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ConfigError("[" + section + "] " + key + ": '" + *v + "' is not a boolean");
}

std::vector<std::string> Config::get_list(const std::string& section, const std::string& key) const
{
    auto v = get(section, key);
    if (!v) {
        return {};
    }
    std::string body = *v;
    if (!body.empty() && body.front() == '[' && body.back() == ']') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string::npos) {
            comma = body.size();
        }
        std::string item = unquote(trim(std::string_view(body).substr(pos, comma - pos)));
        if (!item.empty()) {
            out.push_back(std::move(item));
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<double> Config::get_double_list(const std::string& section, const std::string& key) const
{
    std::vector<double> out;
    for (const auto& item : get_list(section, key)) {
        double x = 0.0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw ConfigError("[" + section + "] " + key + ": '" + item + "' is not a number");
        }
        out.push_back(x);
    }
    return out;
}

std::vector<std::string> Config::keys(const std::string& section) const
{
    std::vector<std::string> out;
    auto s = values_.find(section);
    if (s != values_.end()) {
        for (const auto& [k, v] : s->second) {
            out.push_back(k);
        }
    }
    return out;
}

} // namespace infodiff
