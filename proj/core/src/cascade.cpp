#include "infodiff/cascade.hpp"

#include <algorithm>
#include <string>

#include "infodiff/errors.hpp"

namespace infodiff {
namespace {

std::vector<char> seed_mask(const Graph& graph, const CascadeConfig& config)
{
    std::vector<char> active(graph.node_count(), 0);
    for (NodeId s : config.seed_set) {
        if (s >= graph.node_count()) {
            throw RangeError("cascade seed " + std::to_string(s) + " outside the graph");
        }
        active[s] = 1;
    }
    return active;
}

std::vector<NodeId> collect(const std::vector<char>& active)
{
    std::vector<NodeId> out;
    for (NodeId v = 0; v < active.size(); ++v) {
        if (active[v]) {
            out.push_back(v);
        }
    }
    return out;
}

double probability(const CascadeConfig& config, NodeId u, NodeId v)
{
    auto it = config.edge_probability.find({u, v});
    return it == config.edge_probability.end() ? config.p_edge : it->second;
}

std::vector<double> incoming_weights(const Graph& graph, const CascadeConfig& config, NodeId v)
{
    auto nbrs = graph.neighbors(v);
    std::vector<double> w(nbrs.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
        auto it = config.weights.find({nbrs[k], v});
        w[k] = it == config.weights.end() ? 1.0 / static_cast<double>(nbrs.size()) : it->second;
        if (w[k] < 0.0) {
            throw ConfigError("LT weight must be nonnegative");
        }
        sum += w[k];
    }
    if (sum > 1.0 + 1e-12) {
        throw ConfigError("LT incoming weights of node " + std::to_string(v) + " sum to " +
                          std::to_string(sum) + " > 1");
    }
    return w;
}

} // namespace

std::vector<NodeId> run_independent_cascade(const Graph& graph, const CascadeConfig& config, Rng& rng)
{
    if (!(config.p_edge >= 0.0 && config.p_edge <= 1.0)) {
        throw ConfigError("IC probability must lie in [0, 1]");
    }
    auto active = seed_mask(graph, config);
    std::vector<NodeId> frontier = collect(active);
    std::vector<NodeId> next;
    while (!frontier.empty()) {
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : graph.neighbors(u)) {
                if (!active[v] && rng.bernoulli(probability(config, u, v))) {
                    active[v] = 1;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return collect(active);
}

std::vector<NodeId> run_independent_cascade(const Graph& graph, const CascadeConfig& config)
{
    Rng rng(config.seed);
    return run_independent_cascade(graph, config, rng);
}

std::vector<NodeId> linear_threshold_with(const Graph& graph, const CascadeConfig& config,
                                          const std::vector<double>& thresholds)
{
    const std::size_t n = graph.node_count();
    std::vector<std::vector<double>> weights(n);
    for (NodeId v = 0; v < n; ++v) {
        weights[v] = incoming_weights(graph, config, v);
    }
    auto active = seed_mask(graph, config);

    // Synchronous rounds: every inactive node compares its active-neighbor
    // weight against its threshold; at most n rounds.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<NodeId> newly;
        for (NodeId v = 0; v < n; ++v) {
            if (active[v]) {
                continue;
            }
            auto nbrs = graph.neighbors(v);
            double influence = 0.0;
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                if (active[nbrs[k]]) {
                    influence += weights[v][k];
                }
            }
            if (!nbrs.empty() && influence > 0.0 && influence >= thresholds[v]) {
                newly.push_back(v);
            }
        }
        for (NodeId v : newly) {
            active[v] = 1;
            changed = true;
        }
    }
    return collect(active);
}

std::vector<NodeId> run_linear_threshold(const Graph& graph, const CascadeConfig& config, Rng& rng)
{
    std::vector<double> thresholds(graph.node_count());
    for (double& t : thresholds) {
        t = rng.uniform01();
    }
    return linear_threshold_with(graph, config, thresholds);
}

std::vector<NodeId> run_linear_threshold(const Graph& graph, const CascadeConfig& config)
{
    Rng rng(config.seed);
    return run_linear_threshold(graph, config, rng);
}

} // namespace infodiff
