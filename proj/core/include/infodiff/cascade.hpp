#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "infodiff/graph.hpp"
#include "infodiff/random.hpp"

namespace infodiff {

/// Settings shared by the Independent Cascade and Linear Threshold baselines.
struct CascadeConfig {
    std::vector<NodeId> seed_set;
    /// IC propagation probability p_{u,v}, used for every edge not listed
    /// in `edge_probability`.
    double p_edge = 0.1;
    std::map<std::pair<NodeId, NodeId>, double> edge_probability; ///< keyed (u -> v)
    /// LT influence weights b_{u,v}, keyed (u -> v). Missing weights default to
    /// 1 / deg(v).
    std::map<std::pair<NodeId, NodeId>, double> weights;
    std::uint64_t seed = 0;
};

/// Each newly active node gets one activation attempt per inactive neighbor.
std::vector<NodeId> run_independent_cascade(const Graph& graph, const CascadeConfig& config,
                                            Rng& rng);
std::vector<NodeId> run_independent_cascade(const Graph& graph, const CascadeConfig& config);

/// Thresholds theta_v ~ U(0, 1) drawn once; v activates when the summed
/// weight of its active neighbors reaches theta_v.
std::vector<NodeId> run_linear_threshold(const Graph& graph, const CascadeConfig& config, Rng& rng);
std::vector<NodeId> run_linear_threshold(const Graph& graph, const CascadeConfig& config);

/// LT activation with fixed thresholds (one per node). Deterministic.
std::vector<NodeId> linear_threshold_with(const Graph& graph, const CascadeConfig& config,
                                          const std::vector<double>& thresholds);

} // namespace infodiff
