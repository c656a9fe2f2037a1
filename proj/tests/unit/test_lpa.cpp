#include <gtest/gtest.h>

#include <map>

#include "infodiff/errors.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/lpa.hpp"

using namespace infodiff;

TEST(Lpa, TwoCliquesWithBridge)
{
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId base : {0u, 5u}) {
        for (NodeId a = 0; a < 5; ++a) {
            for (NodeId b = a + 1; b < 5; ++b) pairs.push_back({base + a, base + b});
        }
    }
    pairs.push_back({4, 5});
    const Graph g(10, pairs);
    const CommunityCover expected({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, 10);
    int hits = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto r = lpa_detect(g, {100, s});
        EXPECT_TRUE(r.converged);
        EXPECT_TRUE(r.cover.is_partition());
        hits += r.cover == expected;
    }
    EXPECT_GE(hits, 95);
}

TEST(Lpa, IsolatedNodesStaySingletons)
{
    const Graph g(4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}});
    const auto r = lpa_detect(g, {10, 1});
    EXPECT_EQ(r.cover.size(), 3u);
}

TEST(Lpa, ConvergedLabelsAreNeighborhoodMajorities)
{
    const auto gn = generate_gn({0.2, 3});
    const auto r = lpa_detect(gn.graph, {100, 7});
    ASSERT_TRUE(r.converged);
    std::vector<std::size_t> label(128);
    for (std::size_t c = 0; c < r.cover.size(); ++c) {
        for (NodeId v : r.cover[c]) label[v] = c;
    }
    for (NodeId v = 0; v < 128; ++v) {
        std::map<std::size_t, int> counts;
        int best = 0;
        for (NodeId w : gn.graph.neighbors(v)) best = std::max(best, ++counts[label[w]]);
        if (gn.graph.degree(v) > 0) EXPECT_EQ(counts[label[v]], best);
    }
}

TEST(Lpa, DeterministicAndValidated)
{
    const auto gn = generate_gn({0.3, 3});
    EXPECT_EQ(lpa_detect(gn.graph, {100, 5}).cover, lpa_detect(gn.graph, {100, 5}).cover);
    EXPECT_THROW(lpa_detect(gn.graph, {0, 5}), ArgumentError);
}
