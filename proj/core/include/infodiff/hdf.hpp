#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodiff/random.hpp"

namespace infodiff {

enum class SchemaBit : std::uint8_t { zero, one, any };

/// A scored pattern over {0, 1, *}.
class Schema {
public:
    /// A specified (non-*) position of the pattern.
    struct Position {
        std::uint32_t index;
        std::uint8_t bit;
    };

    Schema(std::vector<SchemaBit> pattern, double score, int order = 0);

    /// Parse a pattern string such as "**01******". Order defaults to the
    /// number of contiguous specified blocks.
    static Schema parse(std::string_view pattern, double score);

    std::size_t width() const { return pattern_.size(); }
    const std::vector<SchemaBit>& pattern() const { return pattern_; }
    std::span<const Position> specified() const { return specified_; }
    double score() const { return score_; }
    int order() const { return order_; }

    bool matches(std::span<const std::uint8_t> bits) const;
    std::string to_string() const;

private:
    std::vector<SchemaBit> pattern_;
    std::vector<Position> specified_;
    double score_;
    int order_;
};

enum class RealScoring {
    match_factor,        ///< weight = prod(1 - |s_i - v_i|)
    literal_difference,  ///< weight = prod of the nonzero |s_i - v_i|
};

/// Hyperplane-defined fitness: the sum of the scores of all matched schemas.
class HdfFunction {
public:
    HdfFunction(std::size_t beta, std::vector<Schema> schemas);

    std::size_t beta() const { return beta_; }
    const std::vector<Schema>& schemas() const { return schemas_; }

    /// Sum of scores of schemas whose every specified bit equals `bits`.
    double score_binary(std::span<const std::uint8_t> bits) const;

    /// Real-vector fitness; every entry must lie in [0, 1].
    double score_real(std::span<const double> values,
                      RealScoring mode = RealScoring::match_factor) const;

    /// Sum of |score| over schemas; bounds how fast score_real can change.
    double total_abs_score() const;

private:
    std::size_t beta_;
    std::vector<Schema> schemas_;
};

/// Parameters for build_random_hdf.
struct RandomHdfSpec {
    std::size_t beta = 10;
    std::size_t n_order1 = 3;
    std::size_t n_higher = 2;
    double score_low = -5.0;
    double score_high = 5.0;
};

/// Random function: `n_order1` single-block schemas plus `n_higher` overlays
/// of 2-3 compatible order-1 patterns.
HdfFunction build_random_hdf(const RandomHdfSpec& spec, Rng& rng);

/// The five-schema, width-10 function used as the running example and as the
/// default experiment fitness.
HdfFunction example_hdf();

/// One schema per line, `<pattern> <score>`; `#` comments allowed.
std::string dump_hdf(const HdfFunction& f);
HdfFunction load_hdf(std::string_view text);

} // namespace infodiff
