#include "infodiff/lpa.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "infodiff/errors.hpp"
#include "infodiff/random.hpp"

namespace infodiff {

LpaResult lpa_detect(const Graph& graph, const LpaConfig& config)
{
    if (config.max_sweeps == 0) {
        throw ArgumentError("lpa_detect: max_sweeps must be positive");
    }
    const std::size_t n = graph.node_count();
    std::vector<NodeId> label(n);
    std::iota(label.begin(), label.end(), NodeId{0});
    std::vector<NodeId> order(label);
    std::vector<std::size_t> count(n, 0);
    std::vector<NodeId> touched;
    std::vector<NodeId> best;
    Rng rng(config.seed);

    // Most frequent neighbor labels of v, in `best`.
    auto majority = [&](NodeId v) {
        touched.clear();
        best.clear();
        std::size_t top = 0;
        for (NodeId u : graph.neighbors(v)) {
            if (count[label[u]]++ == 0) {
                touched.push_back(label[u]);
            }
            top = std::max(top, count[label[u]]);
        }
        for (NodeId l : touched) {
            if (count[l] == top) {
                best.push_back(l);
            }
            count[l] = 0;
        }
        std::sort(best.begin(), best.end());
    };

    LpaResult result;
    while (result.sweeps < config.max_sweeps) {
        ++result.sweeps;
        std::shuffle(order.begin(), order.end(), rng.engine());
        for (NodeId v : order) {
            majority(v);
            if (!best.empty()) {
                label[v] = best[rng.uniform_index(best.size())];
            }
        }
        bool stable = true;
        for (NodeId v = 0; v < n && stable; ++v) {
            majority(v);
            stable = best.empty() || std::binary_search(best.begin(), best.end(), label[v]);
        }
        if (stable) {
            result.converged = true;
            break;
        }
    }
    result.cover = CommunityCover::from_labels(std::span<const NodeId>(label));
    return result;
}

} // namespace infodiff
