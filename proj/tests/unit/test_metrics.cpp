#include <gtest/gtest.h>

#include <cmath>

#include "infodiff/errors.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/graph_io.hpp"
#include "infodiff/metrics.hpp"
#include "infodiff/random.hpp"

using namespace infodiff;

namespace {

// Brute-force LFK NMI over per-node indicator tables.
double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double cond_norm(const std::vector<std::vector<bool>>& X, const std::vector<std::vector<bool>>& Y,
                 std::size_t n)
{
    double sum = 0.0;
    for (const auto& xk : X) {
        double p1 = 0;
        for (std::size_t v = 0; v < n; ++v) p1 += xk[v];
        p1 /= n;
        const double hx = plogp(p1) + plogp(1 - p1);
        if (hx == 0.0) {
            bool same = false;
            for (const auto& yl : Y) same = same || yl == xk;
            sum += same ? 0.0 : 1.0;
            continue;
        }
        double best = hx;
        for (const auto& yl : Y) {
            double cell[2][2] = {{0, 0}, {0, 0}};
            for (std::size_t v = 0; v < n; ++v) cell[xk[v]][yl[v]] += 1.0 / n;
            const double a = plogp(cell[0][0]), b = plogp(cell[0][1]), c = plogp(cell[1][0]),
                         d = plogp(cell[1][1]);
            if (a + d < b + c) continue;
            const double hy = plogp(cell[0][1] + cell[1][1]) + plogp(cell[0][0] + cell[1][0]);
            best = std::min(best, a + b + c + d - hy);
        }
        sum += best / hx;
    }
    return sum / X.size();
}

std::vector<std::vector<bool>> table(const CommunityCover& c, std::size_t n)
{
    std::vector<std::vector<bool>> t;
    for (const auto& members : c.communities()) {
        std::vector<bool> row(n, false);
        for (NodeId v : members) row[v] = true;
        t.push_back(row);
    }
    return t;
}

double oracle_nmi(const CommunityCover& x, const CommunityCover& y, std::size_t n)
{
    return 1.0 - 0.5 * (cond_norm(table(x, n), table(y, n), n) + cond_norm(table(y, n), table(x, n), n));
}

CommunityCover random_cover(Rng& rng, std::size_t n)
{
    const std::size_t k = 1 + rng.uniform_index(6);
    std::vector<std::vector<NodeId>> groups(k);
    for (NodeId v = 0; v < n; ++v) {
        groups[rng.uniform_index(k)].push_back(v);
        if (rng.bernoulli(0.15)) groups[rng.uniform_index(k)].push_back(v);
    }
    return CommunityCover(groups, n);
}

CommunityCover whole(std::size_t n)
{
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) all[v] = v;
    return CommunityCover({all}, n);
}

// Direct count: for every pair (i, j) in the same community,
// (A_ij - k_i k_j / 2L) / 2L.
double oracle_modularity(const Graph& g, const std::vector<int>& label)
{
    const double L = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j = 0; j < g.node_count(); ++j) {
            if (label[i] != label[j]) continue;
            const double a = g.has_edge(i, j) ? 1.0 : 0.0;
            q += a - static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)) / (2.0 * L);
        }
    }
    return q / (2.0 * L);
}

} // namespace

TEST(Nmi, MatchesBruteForceOracle)
{
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 8 + rng.uniform_index(40);
        const auto x = random_cover(rng, n);
        const auto y = random_cover(rng, n);
        EXPECT_NEAR(nmi_overlapping(x, y, n), std::clamp(oracle_nmi(x, y, n), 0.0, 1.0), 1e-12);
    }
}

TEST(Nmi, IdentityAndSymmetry)
{
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 10 + rng.uniform_index(60);
        const auto x = random_cover(rng, n);
        const auto y = random_cover(rng, n);
        EXPECT_NEAR(nmi_overlapping(x, x, n), 1.0, 1e-9);
        EXPECT_NEAR(nmi_overlapping(x, y, n), nmi_overlapping(y, x, n), 1e-12);
        const double v = nmi_overlapping(x, y, n);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Nmi, IndependentCoversScoreLow)
{
    const std::size_t n = 16;
    // Halves vs alternating halves: every cell has probability 1/4.
    std::vector<NodeId> a, b, c, d;
    for (NodeId v = 0; v < n; ++v) {
        (v < 8 ? a : b).push_back(v);
        (v % 2 ? c : d).push_back(v);
    }
    EXPECT_NEAR(nmi_overlapping(CommunityCover({a, b}, n), CommunityCover({c, d}, n), n), 0.0, 1e-12);
}

TEST(Nmi, WholeGraphAgainstPlantedPartitionIsZero)
{
    const auto g = generate_gn({0.1, 1});
    EXPECT_EQ(nmi_overlapping(whole(128), g.truth, 128), 0.0);
    EXPECT_EQ(nmi_overlapping(whole(128), whole(128), 128), 1.0);
}

TEST(Nmi, RejectsOutOfRangeMembers)
{
    EXPECT_THROW(nmi_overlapping(CommunityCover({{0, 9}}, 10), CommunityCover({{0}}, 4), 4), RangeError);
}

TEST(Fccn, Oracles)
{
    const auto g = generate_gn({0.2, 4});
    EXPECT_EQ(fccn(g.truth, g.truth, 128), 1.0);
    EXPECT_EQ(fccn(whole(128), g.truth, 128), 0.25);
    // Greedy: {0,1,2} takes truth {0,1,2,3}; {3,4} then matches {4,5}.
    const CommunityCover det({{0, 1, 2}, {3, 4}}, 6);
    const CommunityCover truth({{0, 1, 2, 3}, {4, 5}}, 6);
    EXPECT_DOUBLE_EQ(fccn(det, truth, 6), 4.0 / 6.0);
}

TEST(Modularity, WholeGraphIsExactlyZero)
{
    const auto g = generate_gn({0.3, 2});
    EXPECT_EQ(modularity(g.graph, whole(128)), 0.0);
}

TEST(Modularity, PlantedPartitionClosedForm)
{
    const auto g = generate_gn({0.0, 6});
    std::vector<double> share;
    for (const auto& c : g.truth.communities()) {
        std::size_t internal = 0;
        for (const Edge& e : g.graph.edges()) {
            if (e.u >= c.front() && e.u <= c.back()) ++internal;
        }
        share.push_back(static_cast<double>(internal) / static_cast<double>(g.graph.edge_count()));
    }
    double expected = 1.0;
    for (double s : share) expected -= s * s;
    EXPECT_NEAR(modularity(g.graph, g.truth), expected, 1e-12);
    EXPECT_NEAR(modularity(g.graph, g.truth), 0.75, 0.01);
}

TEST(Modularity, SymmetricBlocksGiveThreeQuarters)
{
    const auto block = generate_gn({0.0, 12});
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const Edge& e : block.graph.edges()) {
        if (e.v < 32) {
            for (NodeId b = 0; b < 4; ++b) pairs.push_back({e.u + 32 * b, e.v + 32 * b});
        }
    }
    const Graph g(128, pairs);
    EXPECT_EQ(modularity(g, block.truth), 0.75);
}

TEST(Modularity, KarateSplitMatchesDirectCount)
{
    const Graph g = parse_graph(read_file(INFODIFF_TEST_DATA_DIR "/karate.edges"));
    const auto truth = parse_communities(read_file(INFODIFF_TEST_DATA_DIR "/karate.truth"),
                                         CommunityFormat::node_label, false, g.node_count());
    ASSERT_EQ(g.node_count(), 34u);
    ASSERT_EQ(g.edge_count(), 78u);
    std::vector<int> label(34);
    for (std::size_t s = 0; s < truth.size(); ++s) {
        for (NodeId v : truth[s]) label[v] = static_cast<int>(s);
    }
    EXPECT_NEAR(modularity(g, truth), oracle_modularity(g, label), 1e-12);
    EXPECT_NEAR(modularity(g, truth), 0.3582, 1e-4);
}

TEST(Modularity, RejectsNonPartitions)
{
    const Graph g(3, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}});
    EXPECT_THROW(modularity(g, CommunityCover({{0, 1}, {1, 2}}, 3)), ModeError);
    EXPECT_THROW(modularity(g, CommunityCover({{0, 1}}, 3)), ModeError);
    const Graph empty(2, {});
    EXPECT_EQ(modularity(empty, CommunityCover({{0}, {1}}, 2)), 0.0);
}
