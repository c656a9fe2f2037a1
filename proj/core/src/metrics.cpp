#include "infodiff/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "infodiff/errors.hpp"

namespace infodiff {
namespace {

void check_members(const CommunityCover& cover, std::size_t n)
{
    for (const auto& c : cover.communities()) {
        if (!c.empty() && c.back() >= n) {
            throw RangeError("community member " + std::to_string(c.back()) + " >= n = " +
                             std::to_string(n));
        }
    }
}

// -p log2 p for p = count / n.
double h(std::size_t count, std::size_t n)
{
    if (count == 0) {
        return 0.0;
    }
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return -p * std::log2(p);
}

// Intersection sizes |X_k ∩ Y_l| for intersecting pairs.
std::map<std::pair<std::size_t, std::size_t>, std::size_t>
intersections(const CommunityCover& x, const CommunityCover& y, std::size_t n)
{
    std::vector<std::vector<std::size_t>> y_of(n);
    for (std::size_t l = 0; l < y.size(); ++l) {
        for (NodeId v : y[l]) {
            y_of[v].push_back(l);
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (std::size_t k = 0; k < x.size(); ++k) {
        for (NodeId v : x[k]) {
            for (std::size_t l : y_of[v]) {
                ++counts[{k, l}];
            }
        }
    }
    return counts;
}

// H(X|Y)_norm: mean over communities of X of H(X_k|Y) / H(X_k).
double normalized_conditional(const CommunityCover& x, const CommunityCover& y, std::size_t n,
                              bool lfk_constraint)
{
    const auto inter = intersections(x, y, n);
    double total = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const std::size_t xk = x[k].size();
        const double h_xk = h(xk, n) + h(n - xk, n);
        if (h_xk == 0.0) {
            const bool mirrored = std::find(y.communities().begin(), y.communities().end(), x[k]) !=
                                  y.communities().end();
            total += mirrored ? 0.0 : 1.0;
            continue;
        }
        double best = h_xk;
        for (std::size_t l = 0; l < y.size(); ++l) {
            const std::size_t yl = y[l].size();
            auto it = inter.find({k, l});
            const std::size_t d = it == inter.end() ? 0 : it->second; // in both
            const std::size_t c = xk - d;                             // X only
            const std::size_t b = yl - d;                             // Y only
            const std::size_t a = n - b - c - d;                      // neither
            if (lfk_constraint && h(a, n) + h(d, n) < h(b, n) + h(c, n)) {
                continue;
            }
            const double joint = h(a, n) + h(b, n) + h(c, n) + h(d, n);
            const double h_yl = h(b + d, n) + h(a + c, n);
            best = std::min(best, joint - h_yl);
        }
        total += std::max(0.0, best) / h_xk;
    }
    return total / static_cast<double>(x.size());
}

} // namespace

double nmi_overlapping(const CommunityCover& x, const CommunityCover& y, std::size_t n,
                       bool lfk_constraint)
{
    check_members(x, n);
    check_members(y, n);
    if (x.empty() || y.empty()) {
        return x.empty() && y.empty() ? 1.0 : 0.0;
    }
    const double hxy = normalized_conditional(x, y, n, lfk_constraint);
    const double hyx = normalized_conditional(y, x, n, lfk_constraint);
    return std::clamp(1.0 - 0.5 * (hxy + hyx), 0.0, 1.0);
}

double fccn(const CommunityCover& detected, const CommunityCover& truth, std::size_t n)
{
    check_members(detected, n);
    check_members(truth, n);
    if (n == 0) {
        return 0.0;
    }
    const auto inter = intersections(detected, truth, n);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs; // overlap, det, truth
    pairs.reserve(inter.size());
    for (const auto& [key, overlap] : inter) {
        pairs.emplace_back(overlap, key.first, key.second);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) {
            return std::get<0>(a) > std::get<0>(b);
        }
        return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    });
    std::vector<char> used_detected(detected.size(), 0);
    std::vector<char> used_truth(truth.size(), 0);
    std::size_t correct = 0;
    for (const auto& [overlap, k, l] : pairs) {
        if (used_detected[k] || used_truth[l]) {
            continue;
        }
        used_detected[k] = used_truth[l] = 1;
        correct += overlap;
    }
    return static_cast<double>(correct) / static_cast<double>(n);
}

double modularity(const Graph& graph, const CommunityCover& partition)
{
    if (!partition.is_partition() || partition.node_count() != graph.node_count()) {
        throw ModeError("modularity requires a partition of the graph's nodes");
    }
    const std::size_t L = graph.edge_count();
    if (L == 0) {
        return 0.0;
    }
    std::vector<std::size_t> community_of(graph.node_count());
    for (std::size_t s = 0; s < partition.size(); ++s) {
        for (NodeId v : partition[s]) {
            community_of[v] = s;
        }
    }
    std::vector<std::size_t> internal(partition.size(), 0);
    std::vector<std::size_t> degree_sum(partition.size(), 0);
    for (const Edge& e : graph.edges()) {
        if (community_of[e.u] == community_of[e.v]) {
            ++internal[community_of[e.u]];
        }
    }
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        degree_sum[community_of[v]] += graph.degree(v);
    }
    const double l = static_cast<double>(L);
    double q = 0.0;
    for (std::size_t s = 0; s < partition.size(); ++s) {
        const double frac = static_cast<double>(degree_sum[s]) / (2.0 * l);
        q += static_cast<double>(internal[s]) / l - frac * frac;
    }
    return q;
}

} // namespace infodiff
