#pragma once

#include <cstdint>

#include "infodiff/graph.hpp"

namespace infodiff {

struct LpaConfig {
    std::size_t max_sweeps = 100;
    std::uint64_t seed = 0;
};

struct LpaResult {
    CommunityCover cover;
    std::size_t sweeps = 0;
    bool converged = false;
};

/// Asynchronous label propagation: unique initial labels, sweeps in random
/// order, each node adopts a most frequent neighbor label (uniform among
/// ties). Stops once every node holds a most frequent neighbor label.
LpaResult lpa_detect(const Graph& graph, const LpaConfig& config);

} // namespace infodiff
