#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infodiff/graph.hpp"
#include "infodiff/info_matrix.hpp"

namespace infodiff {

using CommunityId = std::uint32_t;

enum class GameMode { disjoint, overlapping };

struct GameConfig {
    GameMode mode = GameMode::disjoint;
    std::optional<double> m_norm;  ///< utility normalizer m; defaults to |E|
    std::optional<double> lambda;  ///< label cost (overlapping); defaults to mean nonzero I / m
    std::size_t max_picks = 0;     ///< 0 means 500 * n
    std::size_t stall_threshold = 0; ///< consecutive no-op picks before a full sweep; 0 means n
    std::size_t exact_sweep_n_max = 5000;
    std::uint64_t seed = 0;
};

/// Strategy profile: the community labels held by every agent.
///
/// Agents start as singletons labelled with their own node id. In disjoint
/// mode each agent holds exactly one label; in overlapping mode at least one.
class GameState {
public:
    GameState(std::size_t node_count, GameMode mode, double m_norm, double lambda = 0.0);

    std::size_t node_count() const { return labels_.size(); }
    GameMode mode() const { return mode_; }
    double m_norm() const { return m_norm_; }
    double lambda() const { return lambda_; }

    std::span<const CommunityId> labels(NodeId i) const { return labels_[i]; }
    bool holds(NodeId i, CommunityId c) const;
    bool shares(NodeId i, NodeId j) const;
    std::size_t community_size(CommunityId c) const { return c < sizes_.size() ? sizes_[c] : 0; }

    /// Disjoint mode leaves the current community first.
    void join(NodeId i, CommunityId c);
    /// Drop every label and become a fresh singleton.
    void leave(NodeId i);

    CommunityCover cover() const;

private:
    void add_label(NodeId i, CommunityId c);
    void drop_labels(NodeId i);

    GameMode mode_;
    double m_norm_;
    double lambda_;
    std::vector<std::vector<CommunityId>> labels_;
    std::vector<std::size_t> sizes_;
};

struct Move {
    enum class Kind { noop, join, leave };
    Kind kind = Kind::noop;
    CommunityId community = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// U_i = (1/m) * sum_{j != i} I[i][j] * delta_ij, minus lambda * (labels - 1)
/// in overlapping mode. delta_ij is 1 when i and j share a community.
double utility(NodeId i, const GameState& state, const InfoMatrix& info);

/// Utility i would have after `move`, everything else unchanged.
double utility_after(NodeId i, const Move& move, const GameState& state, const InfoMatrix& info);

/// The local strategy space: no-op, join each community held by a graph
/// neighbor (not already held by i), and leave.
std::vector<Move> local_strategies(NodeId i, const GameState& state, const Graph& graph);

/// Highest-utility local strategy; ties favor no-op, then the lowest
/// community id, then leave.
Move best_response(NodeId i, const GameState& state, const InfoMatrix& info, const Graph& graph);

void apply_move(NodeId i, const Move& move, GameState& state);

/// Agents whose local strategy space contains a strictly better move.
std::vector<NodeId> nash_violations(const GameState& state, const InfoMatrix& info,
                                    const Graph& graph);

struct DetectionResult {
    CommunityCover cover;
    GameState state;
    bool converged = false;       ///< stopped before max_picks
    bool verified_nash = false;   ///< terminated by a full sweep with no improving move
    std::size_t picks = 0;
    std::size_t moves = 0;
};

/// Best-response dynamics from all-singletons with uniformly random agent
/// picks, until a verified local Nash equilibrium, a stall (large n) or the
/// pick cap.
DetectionResult detect_communities(const Graph& graph, const InfoMatrix& info,
                                   const GameConfig& config);

} // namespace infodiff
