#include <gtest/gtest.h>

#include "infodiff/errors.hpp"
#include "infodiff/game.hpp"
#include "infodiff/random.hpp"

using namespace infodiff;

namespace {

Graph graph_of(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) { return Graph(n, pairs); }

// Two 5-cliques {0..4} and {5..9} joined by the bridge 4-5.
Graph two_cliques()
{
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId base : {0u, 5u}) {
        for (NodeId a = 0; a < 5; ++a) {
            for (NodeId b = a + 1; b < 5; ++b) pairs.push_back({base + a, base + b});
        }
    }
    pairs.push_back({4, 5});
    return Graph(10, pairs);
}

InfoMatrix clique_info()
{
    InfoMatrix info(10);
    for (NodeId i = 0; i < 10; ++i) {
        for (NodeId j = 0; j < 10; ++j) {
            if (i != j && (i < 5) == (j < 5)) info.add(i, j, 1.0);
        }
    }
    info.finalize();
    return info;
}

} // namespace

TEST(Utility, ThreeNodeOracle)
{
    InfoMatrix info(3);
    info.add(0, 1, 4.0);
    info.add(0, 2, 1.0);
    info.finalize();
    GameState s(3, GameMode::disjoint, 2.0);
    EXPECT_EQ(utility(0, s, info), 0.0);
    s.join(1, 0);
    EXPECT_DOUBLE_EQ(utility(0, s, info), 2.0);
    s.join(2, 0);
    EXPECT_DOUBLE_EQ(utility(0, s, info), 2.5);
    // Only i's own row counts.
    EXPECT_EQ(utility(1, s, info), 0.0);
}

TEST(Utility, OverlappingModeChargesPerExtraLabel)
{
    InfoMatrix info(3);
    info.add(0, 1, 4.0);
    info.add(0, 2, 2.0);
    info.finalize();
    GameState s(3, GameMode::overlapping, 1.0, 0.5);
    s.join(0, 1);
    EXPECT_EQ(s.labels(0).size(), 2u);
    EXPECT_DOUBLE_EQ(utility(0, s, info), 4.0 - 0.5);
    s.join(0, 2);
    EXPECT_DOUBLE_EQ(utility(0, s, info), 6.0 - 1.0);
    EXPECT_FALSE(s.cover().is_partition());
}

TEST(Utility, AfterMoveMatchesAppliedMove)
{
    const Graph g = two_cliques();
    InfoMatrix info(10);
    for (NodeId i = 0; i < 10; ++i) {
        for (NodeId j = 0; j < 10; ++j) {
            if (i != j) info.add(i, j, 0.1 * ((i * 7 + j * 3) % 5));
        }
    }
    info.finalize();
    for (GameMode mode : {GameMode::disjoint, GameMode::overlapping}) {
        GameState s(10, mode, 3.0, 0.2);
        s.join(1, 0);
        s.join(2, 0);
        s.join(6, 5);
        for (NodeId i = 0; i < 10; ++i) {
            for (const Move& m : local_strategies(i, s, g)) {
                GameState copy = s;
                apply_move(i, m, copy);
                EXPECT_NEAR(utility_after(i, m, s, info), utility(i, copy, info), 1e-12);
            }
        }
    }
}

TEST(BestResponse, IsolatedNodeOnlyHasNoopAndLeave)
{
    const Graph g = graph_of(3, {{0, 1}});
    GameState s(3, GameMode::disjoint, 1.0);
    const auto moves = local_strategies(2, s, g);
    ASSERT_EQ(moves.size(), 2u);
    EXPECT_EQ(moves[0].kind, Move::Kind::noop);
    EXPECT_EQ(moves[1].kind, Move::Kind::leave);
}

TEST(BestResponse, WrongCliqueNodeJoinsItsOwn)
{
    const Graph g = two_cliques();
    const InfoMatrix info = clique_info();
    GameState s(10, GameMode::disjoint, 21.0);
    for (NodeId v = 1; v < 4; ++v) s.join(v, 0);
    for (NodeId v = 6; v < 10; ++v) s.join(v, 5);
    s.join(4, 5); // node 4 sits in the wrong clique's community
    EXPECT_EQ(utility(4, s, info), 0.0);
    const Move m = best_response(4, s, info, g);
    EXPECT_EQ(m.kind, Move::Kind::join);
    EXPECT_EQ(m.community, 0u);
    EXPECT_DOUBLE_EQ(utility_after(4, m, s, info), 4.0 / 21.0);
}

TEST(BestResponse, AllTiesReturnNoop)
{
    const Graph g = two_cliques();
    InfoMatrix zero(10);
    zero.finalize();
    GameState s(10, GameMode::disjoint, 1.0);
    for (NodeId i = 0; i < 10; ++i) {
        EXPECT_EQ(best_response(i, s, zero, g).kind, Move::Kind::noop);
    }
}

TEST(BestResponse, TiesPreferLowestCommunityId)
{
    const Graph g = graph_of(3, {{0, 1}, {0, 2}});
    InfoMatrix info(3);
    info.add(0, 1, 1.0);
    info.add(0, 2, 1.0);
    info.finalize();
    GameState s(3, GameMode::disjoint, 1.0);
    const Move m = best_response(0, s, info, g);
    EXPECT_EQ(m.kind, Move::Kind::join);
    EXPECT_EQ(m.community, 1u);
}

TEST(Detect, TwoCliquesRecoveredOverSeeds)
{
    const Graph g = two_cliques();
    const InfoMatrix info = clique_info();
    const CommunityCover expected({{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, 10);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GameConfig c;
        c.seed = seed;
        const auto r = detect_communities(g, info, c);
        EXPECT_EQ(r.cover, expected) << "seed " << seed;
        EXPECT_TRUE(r.converged);
        EXPECT_TRUE(r.verified_nash);
        EXPECT_LT(r.picks, 500u * 10u);
        EXPECT_TRUE(nash_violations(r.state, info, g).empty());
    }
}

TEST(Detect, ZeroInfoLeavesSingletons)
{
    const Graph g = two_cliques();
    InfoMatrix zero(10);
    zero.finalize();
    const auto r = detect_communities(g, zero, GameConfig{});
    EXPECT_EQ(r.cover.size(), 10u);
    EXPECT_EQ(r.moves, 0u);
    EXPECT_TRUE(r.verified_nash);
}

TEST(Detect, PickCapReportsNotConverged)
{
    const Graph g = two_cliques();
    GameConfig c;
    c.max_picks = 3;
    const auto r = detect_communities(g, clique_info(), c);
    EXPECT_FALSE(r.converged);
    EXPECT_FALSE(r.verified_nash);
    EXPECT_EQ(r.picks, 3u);
}

TEST(Detect, EveryAppliedMoveStrictlyImprovesTheMover)
{
    const Graph g = two_cliques();
    InfoMatrix info(10);
    for (const Edge& e : g.edges()) {
        info.add(e.u, e.v, 1.0 + (e.u % 3));
        info.add(e.v, e.u, 0.5 + (e.v % 2));
    }
    info.finalize();
    GameState s(10, GameMode::disjoint, 1.0);
    Rng rng(4);
    for (int k = 0; k < 500; ++k) {
        const auto i = static_cast<NodeId>(rng.uniform_index(10));
        const Move m = best_response(i, s, info, g);
        const double before = utility(i, s, info);
        apply_move(i, m, s);
        if (m.kind != Move::Kind::noop) {
            EXPECT_GT(utility(i, s, info), before);
        }
    }
    EXPECT_TRUE(s.cover().is_partition());
}

TEST(Detect, Preconditions)
{
    const Graph g = two_cliques();
    InfoMatrix open(10);
    EXPECT_THROW(detect_communities(g, open, GameConfig{}), StateError);
    InfoMatrix small(4);
    small.finalize();
    EXPECT_THROW(detect_communities(g, small, GameConfig{}), ArgumentError);
    EXPECT_THROW(GameState(3, GameMode::disjoint, 0.0), ArgumentError);
}

TEST(Detect, OverlappingModeProducesCover)
{
    const Graph g = two_cliques();
    GameConfig c;
    c.mode = GameMode::overlapping;
    const auto r = detect_communities(g, clique_info(), c);
    EXPECT_TRUE(r.verified_nash);
    for (const auto& labels : r.cover.memberships()) {
        EXPECT_GE(labels.size(), 1u);
    }
    EXPECT_TRUE(nash_violations(r.state, clique_info(), g).empty());
}
