#include "infodiff/hdf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "infodiff/errors.hpp"
#include "number_format.hpp"

namespace infodiff {
namespace {

int count_blocks(const std::vector<SchemaBit>& pattern)
{
    int blocks = 0;
    bool inside = false;
    for (SchemaBit b : pattern) {
        const bool specified = b != SchemaBit::any;
        if (specified && !inside) {
            ++blocks;
        }
        inside = specified;
    }
    return blocks;
}

std::string format_score(double score)
{
    std::string s = detail::shortest_decimal(score);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

} // namespace

Schema::Schema(std::vector<SchemaBit> pattern, double score, int order)
    : pattern_(std::move(pattern)), score_(score), order_(order)
{
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (pattern_[i] != SchemaBit::any) {
            specified_.push_back({static_cast<std::uint32_t>(i),
                                  static_cast<std::uint8_t>(pattern_[i] == SchemaBit::one)});
        }
    }
    if (specified_.empty()) {
        throw ArgumentError("schema has no specified position");
    }
    if (!std::isfinite(score_)) {
        throw ArgumentError("schema score must be finite");
    }
    if (order_ <= 0) {
        order_ = count_blocks(pattern_);
    }
}

Schema Schema::parse(std::string_view text, double score)
{
    std::vector<SchemaBit> pattern;
    pattern.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': pattern.push_back(SchemaBit::zero); break;
        case '1': pattern.push_back(SchemaBit::one); break;
        case '*': pattern.push_back(SchemaBit::any); break;
        default:
            throw ParseError("schema pattern '" + std::string(text) + "' has invalid character '" +
                             std::string(1, c) + "'");
        }
    }
    return Schema(std::move(pattern), score);
}

bool Schema::matches(std::span<const std::uint8_t> bits) const
{
    return std::all_of(specified_.begin(), specified_.end(),
                       [&](const Position& p) { return bits[p.index] == p.bit; });
}

std::string Schema::to_string() const
{
    std::string s;
    s.reserve(pattern_.size());
    for (SchemaBit b : pattern_) {
        s.push_back(b == SchemaBit::zero ? '0' : b == SchemaBit::one ? '1' : '*');
    }
    return s;
}

HdfFunction::HdfFunction(std::size_t beta, std::vector<Schema> schemas)
    : beta_(beta), schemas_(std::move(schemas))
{
    if (beta_ == 0) {
        throw ArgumentError("HDF width beta must be positive");
    }
    if (schemas_.empty()) {
        throw ArgumentError("HDF needs at least one schema");
    }
    for (const Schema& s : schemas_) {
        if (s.width() != beta_) {
            throw ArgumentError("schema '" + s.to_string() + "' has width " +
                                std::to_string(s.width()) + ", expected " + std::to_string(beta_));
        }
    }
}

double HdfFunction::score_binary(std::span<const std::uint8_t> bits) const
{
    if (bits.size() != beta_) {
        throw ArgumentError("score_binary: vector length " + std::to_string(bits.size()) +
                            " != beta " + std::to_string(beta_));
    }
    double total = 0.0;
    for (const Schema& s : schemas_) {
        if (s.matches(bits)) {
            total += s.score();
        }
    }
    return total;
}

double HdfFunction::score_real(std::span<const double> values, RealScoring mode) const
{
    if (values.size() != beta_) {
        throw ArgumentError("score_real: vector length " + std::to_string(values.size()) +
                            " != beta " + std::to_string(beta_));
    }
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ArgumentError("score_real: entry " + std::to_string(v) + " outside [0, 1]");
        }
    }
    double total = 0.0;
    for (const Schema& s : schemas_) {
        double weight = 1.0;
        for (const auto& p : s.specified()) {
            const double diff = std::abs(static_cast<double>(p.bit) - values[p.index]);
            if (mode == RealScoring::match_factor) {
                weight *= 1.0 - diff;
            } else if (diff != 0.0) {
                weight *= diff;
            }
        }
        total += weight * s.score();
    }
    return total;
}

double HdfFunction::total_abs_score() const
{
    double total = 0.0;
    for (const Schema& s : schemas_) {
        total += std::abs(s.score());
    }
    return total;
}

HdfFunction build_random_hdf(const RandomHdfSpec& spec, Rng& rng)
{
    if (spec.beta < 2) {
        throw ArgumentError("build_random_hdf: beta must be at least 2 to place a block");
    }
    if (spec.n_order1 == 0) {
        throw ArgumentError("build_random_hdf: n_order1 must be positive");
    }
    if (!(spec.score_low < spec.score_high)) {
        throw ArgumentError("build_random_hdf: score_low must be below score_high");
    }
    if (spec.n_higher > 0 && spec.n_order1 < 2) {
        throw ArgumentError("build_random_hdf: higher-order schemas need at least two order-1 schemas");
    }

    auto draw_score = [&] {
        double s = 0.0;
        while (s == 0.0) {
            s = spec.score_low + (spec.score_high - spec.score_low) * rng.uniform01();
        }
        return s;
    };

    const std::size_t max_block = std::max<std::size_t>(2, spec.beta / 3);
    auto compatible = [&](const std::vector<SchemaBit>& a, const std::vector<SchemaBit>& b) {
        for (std::size_t i = 0; i < spec.beta; ++i) {
            if (a[i] != SchemaBit::any && b[i] != SchemaBit::any && a[i] != b[i]) {
                return false;
            }
        }
        return true;
    };

    // Draw the order-1 set; redraw it when no two blocks can be overlaid.
    constexpr std::size_t max_attempts = 10000;
    std::vector<std::vector<SchemaBit>> order1;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t attempt = 0;; ++attempt) {
        if (attempt == max_attempts) {
            throw ArgumentError("build_random_hdf: could not find compatible order-1 patterns to overlay");
        }
        order1.clear();
        for (std::size_t k = 0; k < spec.n_order1; ++k) {
            const std::size_t length = 2 + rng.uniform_index(max_block - 1);
            const std::size_t offset = rng.uniform_index(spec.beta - length + 1);
            std::vector<SchemaBit> pattern(spec.beta, SchemaBit::any);
            for (std::size_t i = 0; i < length; ++i) {
                pattern[offset + i] = rng.bernoulli(0.5) ? SchemaBit::one : SchemaBit::zero;
            }
            order1.push_back(std::move(pattern));
        }
        pairs.clear();
        for (std::size_t a = 0; a < order1.size(); ++a) {
            for (std::size_t b = a + 1; b < order1.size(); ++b) {
                if (compatible(order1[a], order1[b])) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        if (spec.n_higher == 0 || !pairs.empty()) {
            break;
        }
    }

    std::vector<Schema> schemas;
    for (const auto& pattern : order1) {
        schemas.emplace_back(pattern, draw_score(), 1);
    }

    for (std::size_t k = 0; k < spec.n_higher; ++k) {
        std::vector<std::size_t> chosen;
        for (std::size_t attempt = 0; attempt < max_attempts && chosen.empty(); ++attempt) {
            const std::size_t parts = std::min<std::size_t>(order1.size(), 2 + rng.uniform_index(2));
            std::vector<std::size_t> pick(order1.size());
            for (std::size_t i = 0; i < pick.size(); ++i) {
                pick[i] = i;
            }
            std::shuffle(pick.begin(), pick.end(), rng.engine());
            pick.resize(parts);
            bool ok = true;
            for (std::size_t a = 0; a < parts && ok; ++a) {
                for (std::size_t b = a + 1; b < parts && ok; ++b) {
                    ok = compatible(order1[pick[a]], order1[pick[b]]);
                }
            }
            if (ok) {
                chosen = std::move(pick);
            }
        }
        if (chosen.empty()) {
            const auto [a, b] = pairs[rng.uniform_index(pairs.size())];
            chosen = {a, b};
        }
        std::vector<SchemaBit> overlay(spec.beta, SchemaBit::any);
        for (std::size_t c : chosen) {
            for (std::size_t i = 0; i < spec.beta; ++i) {
                if (order1[c][i] != SchemaBit::any) {
                    overlay[i] = order1[c][i];
                }
            }
        }
        schemas.emplace_back(std::move(overlay), draw_score(), static_cast<int>(chosen.size()));
    }
    return HdfFunction(spec.beta, std::move(schemas));
}

HdfFunction example_hdf()
{
    return HdfFunction(10, {
                               Schema::parse("*01*******", 2.0),
                               Schema::parse("*****110**", 2.0),
                               Schema::parse("********10", 3.0),
                               Schema::parse("*01**110**", -4.0),
                               Schema::parse("*01*****10", 4.0),
                           });
}

std::string dump_hdf(const HdfFunction& f)
{
    std::ostringstream out;
    for (const Schema& s : f.schemas()) {
        out << s.to_string() << ' ' << format_score(s.score()) << '\n';
    }
    return out.str();
}

HdfFunction load_hdf(std::string_view text)
{
    std::vector<Schema> schemas;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        std::string pattern, score_text, extra;
        if (!(fields >> pattern) || pattern[0] == '#') {
            continue;
        }
        if (!(fields >> score_text) || (fields >> extra)) {
            throw FormatError("HDF line " + std::to_string(number) + ": expected `<pattern> <score>`");
        }
        double score = 0.0;
        auto [ptr, ec] = std::from_chars(score_text.data(), score_text.data() + score_text.size(), score);
        if (ec != std::errc() || ptr != score_text.data() + score_text.size()) {
            throw ParseError("HDF line " + std::to_string(number) + ": bad score '" + score_text + "'");
        }
        schemas.push_back(Schema::parse(pattern, score));
    }
    if (schemas.empty()) {
        throw FormatError("HDF file has no schemas");
    }
    const std::size_t beta = schemas.front().width();
    return HdfFunction(beta, std::move(schemas));
}

} // namespace infodiff
