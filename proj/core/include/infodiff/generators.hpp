#pragma once

#include <cstdint>

#include "infodiff/graph.hpp"

namespace infodiff {

/// Girvan-Newman benchmark: 128 nodes in 4 blocks of 32, expected degree 16.
struct GnConfig {
    static constexpr std::size_t node_count = 128;
    static constexpr std::size_t community_count = 4;
    static constexpr std::size_t community_size = 32;
    static constexpr double expected_degree = 16.0;

    double mu = 0.0; ///< expected fraction of a node's degree crossing communities
    std::uint64_t seed = 0;
};

struct ErConfig {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

struct GeneratedGraph {
    Graph graph;
    CommunityCover truth;
};

/// Planted-partition realization: independent Bernoulli edges with
/// p_in = (1 - mu) * 16 / 31 and p_out = mu * 16 / 96.
GeneratedGraph generate_gn(const GnConfig& config);

/// G(n, p): each unordered pair independently with probability p.
Graph generate_er(const ErConfig& config);

} // namespace infodiff
