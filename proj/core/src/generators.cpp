#include "infodiff/generators.hpp"

#include <string>

#include "infodiff/errors.hpp"
#include "infodiff/random.hpp"

namespace infodiff {

GeneratedGraph generate_gn(const GnConfig& config)
{
    if (!(config.mu >= 0.0 && config.mu <= 1.0)) {
        throw ArgumentError("generate_gn: mu must lie in [0, 1], got " + std::to_string(config.mu));
    }
    constexpr std::size_t n = GnConfig::node_count;
    constexpr std::size_t size = GnConfig::community_size;
    const double k = GnConfig::expected_degree;
    const double p_in = (1.0 - config.mu) * k / static_cast<double>(size - 1);
    const double p_out = config.mu * k / static_cast<double>(n - size);

    Rng rng(config.seed);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const bool same = u / size == v / size;
            if (rng.bernoulli(same ? p_in : p_out)) {
                pairs.emplace_back(u, v);
            }
        }
    }

    std::vector<std::vector<NodeId>> blocks(GnConfig::community_count);
    for (NodeId v = 0; v < n; ++v) {
        blocks[v / size].push_back(v);
    }
    return {Graph(n, pairs), CommunityCover(std::move(blocks), n)};
}

Graph generate_er(const ErConfig& config)
{
    if (config.n == 0) {
        throw ArgumentError("generate_er: n must be positive");
    }
    if (!(config.p >= 0.0 && config.p <= 1.0)) {
        throw ArgumentError("generate_er: p must lie in [0, 1], got " + std::to_string(config.p));
    }
    Rng rng(config.seed);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < config.n; ++u) {
        for (NodeId v = u + 1; v < config.n; ++v) {
            if (rng.bernoulli(config.p)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return Graph(config.n, pairs);
}

} // namespace infodiff
