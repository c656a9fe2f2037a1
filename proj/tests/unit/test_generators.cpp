#include <gtest/gtest.h>

#include "infodiff/errors.hpp"
#include "infodiff/generators.hpp"

using namespace infodiff;

namespace {

// Fraction of edge endpoints whose edge crosses communities.
double observed_mu(const GeneratedGraph& g)
{
    const auto membership = g.truth.memberships();
    std::size_t cross = 0;
    for (const Edge& e : g.graph.edges()) {
        if (membership[e.u][0] != membership[e.v][0]) ++cross;
    }
    return static_cast<double>(cross) / static_cast<double>(g.graph.edge_count());
}

} // namespace

TEST(GirvanNewman, ShapeAndTruth)
{
    const auto g = generate_gn({0.2, 5});
    EXPECT_EQ(g.graph.node_count(), 128u);
    ASSERT_EQ(g.truth.size(), 4u);
    for (const auto& c : g.truth.communities()) {
        EXPECT_EQ(c.size(), 32u);
    }
    EXPECT_TRUE(g.truth.is_partition());
}

TEST(GirvanNewman, ZeroMixingHasNoCrossEdges)
{
    const auto g = generate_gn({0.0, 9});
    EXPECT_EQ(observed_mu(g), 0.0);
}

TEST(GirvanNewman, ExpectedDegreeAndMixingOverSeeds)
{
    for (double mu : {0.1, 0.3, 0.5}) {
        double degree = 0.0, mixing = 0.0;
        const int seeds = 40;
        for (int s = 0; s < seeds; ++s) {
            const auto g = generate_gn({mu, static_cast<std::uint64_t>(s)});
            degree += 2.0 * static_cast<double>(g.graph.edge_count()) / 128.0;
            mixing += observed_mu(g);
        }
        EXPECT_NEAR(degree / seeds, 16.0, 0.25) << "mu " << mu;
        EXPECT_NEAR(mixing / seeds, mu, 0.02) << "mu " << mu;
    }
}

TEST(GirvanNewman, DeterministicPerSeed)
{
    const auto a = generate_gn({0.3, 77});
    const auto b = generate_gn({0.3, 77});
    ASSERT_EQ(a.graph.edge_count(), b.graph.edge_count());
    for (std::size_t k = 0; k < a.graph.edge_count(); ++k) {
        EXPECT_EQ(a.graph.edges()[k].u, b.graph.edges()[k].u);
        EXPECT_EQ(a.graph.edges()[k].v, b.graph.edges()[k].v);
    }
    EXPECT_THROW(generate_gn({1.5, 0}), ArgumentError);
}

TEST(ErdosRenyi, EdgeCountNearExpectation)
{
    double edges = 0.0;
    for (int s = 0; s < 30; ++s) {
        edges += static_cast<double>(generate_er({200, 0.05, static_cast<std::uint64_t>(s)}).edge_count());
    }
    EXPECT_NEAR(edges / 30.0, 0.05 * 200 * 199 / 2, 20.0);
}

TEST(ErdosRenyi, Extremes)
{
    EXPECT_EQ(generate_er({10, 0.0, 1}).edge_count(), 0u);
    EXPECT_EQ(generate_er({10, 1.0, 1}).edge_count(), 45u);
    EXPECT_THROW(generate_er({0, 0.5, 1}), ArgumentError);
    EXPECT_THROW(generate_er({5, -0.1, 1}), ArgumentError);
}
