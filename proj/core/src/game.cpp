#include "infodiff/game.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "infodiff/errors.hpp"
#include "infodiff/random.hpp"

namespace infodiff {
namespace {

// A strict improvement must beat the incumbent by more than rounding noise.
bool improves(double candidate, double incumbent)
{
    return candidate > incumbent + 1e-12 * std::max(1.0, std::abs(incumbent));
}

} // namespace

GameState::GameState(std::size_t node_count, GameMode mode, double m_norm, double lambda)
    : mode_(mode), m_norm_(m_norm), lambda_(lambda), labels_(node_count), sizes_(node_count, 1)
{
    if (!(m_norm > 0.0)) {
        throw ArgumentError("game normalizer m must be positive");
    }
    if (!(lambda >= 0.0)) {
        throw ArgumentError("label cost lambda must be nonnegative");
    }
    for (NodeId i = 0; i < node_count; ++i) {
        labels_[i] = {i};
    }
}

bool GameState::holds(NodeId i, CommunityId c) const
{
    const auto& l = labels_[i];
    return std::binary_search(l.begin(), l.end(), c);
}

bool GameState::shares(NodeId i, NodeId j) const
{
    const auto& a = labels_[i];
    const auto& b = labels_[j];
    auto x = a.begin();
    auto y = b.begin();
    while (x != a.end() && y != b.end()) {
        if (*x == *y) {
            return true;
        }
        *x < *y ? ++x : ++y;
    }
    return false;
}

void GameState::add_label(NodeId i, CommunityId c)
{
    auto& l = labels_[i];
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it != l.end() && *it == c) {
        return;
    }
    l.insert(it, c);
    if (c >= sizes_.size()) {
        sizes_.resize(c + 1, 0);
    }
    ++sizes_[c];
}

void GameState::drop_labels(NodeId i)
{
    for (CommunityId c : labels_[i]) {
        --sizes_[c];
    }
    labels_[i].clear();
}

void GameState::join(NodeId i, CommunityId c)
{
    if (community_size(c) == 0) {
        throw StateError("join of a community that is not live");
    }
    if (mode_ == GameMode::disjoint) {
        if (holds(i, c)) {
            return;
        }
        drop_labels(i);
    }
    add_label(i, c);
}

void GameState::leave(NodeId i)
{
    drop_labels(i);
    const auto fresh = static_cast<CommunityId>(sizes_.size());
    add_label(i, fresh);
}

CommunityCover GameState::cover() const
{
    std::map<CommunityId, std::vector<NodeId>> groups;
    for (NodeId i = 0; i < labels_.size(); ++i) {
        for (CommunityId c : labels_[i]) {
            groups[c].push_back(i);
        }
    }
    std::vector<std::vector<NodeId>> communities;
    communities.reserve(groups.size());
    for (auto& [id, members] : groups) {
        communities.push_back(std::move(members));
    }
    return CommunityCover(std::move(communities), labels_.size());
}

double utility(NodeId i, const GameState& state, const InfoMatrix& info)
{
    return utility_after(i, Move{}, state, info);
}

double utility_after(NodeId i, const Move& move, const GameState& state, const InfoMatrix& info)
{
    // Labels i would hold after the move.
    std::vector<CommunityId> mine(state.labels(i).begin(), state.labels(i).end());
    bool isolated = false;
    switch (move.kind) {
    case Move::Kind::noop:
        break;
    case Move::Kind::join:
        if (state.mode() == GameMode::disjoint) {
            mine = {move.community};
        } else if (!std::binary_search(mine.begin(), mine.end(), move.community)) {
            mine.insert(std::lower_bound(mine.begin(), mine.end(), move.community), move.community);
        }
        break;
    case Move::Kind::leave:
        isolated = true;
        mine.assign(1, CommunityId(-1));
        break;
    }

    double sum = 0.0;
    if (!isolated) {
        for (const auto& e : info.row(i)) {
            if (e.column == i) {
                continue;
            }
            for (CommunityId c : mine) {
                if (state.holds(e.column, c)) {
                    sum += e.value;
                    break;
                }
            }
        }
    }
    double u = sum / state.m_norm();
    if (state.mode() == GameMode::overlapping) {
        u -= state.lambda() * static_cast<double>(mine.size() - 1);
    }
    return u;
}

std::vector<Move> local_strategies(NodeId i, const GameState& state, const Graph& graph)
{
    std::vector<CommunityId> candidates;
    for (NodeId j : graph.neighbors(i)) {
        for (CommunityId c : state.labels(j)) {
            if (!state.holds(i, c)) {
                candidates.push_back(c);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Move> moves;
    moves.reserve(candidates.size() + 2);
    moves.push_back(Move{});
    for (CommunityId c : candidates) {
        moves.push_back(Move{Move::Kind::join, c});
    }
    moves.push_back(Move{Move::Kind::leave, 0});
    return moves;
}

Move best_response(NodeId i, const GameState& state, const InfoMatrix& info, const Graph& graph)
{
    if (state.mode() == GameMode::overlapping) {
        const auto moves = local_strategies(i, state, graph);
        Move best = moves.front();
        double best_u = utility_after(i, best, state, info);
        for (std::size_t k = 1; k < moves.size(); ++k) {
            const double u = utility_after(i, moves[k], state, info);
            if (improves(u, best_u)) {
                best = moves[k];
                best_u = u;
            }
        }
        return best;
    }

    // Disjoint fast path: utility of joining c is the row mass inside c.
    const CommunityId current = state.labels(i).front();
    std::map<CommunityId, double> mass;
    for (NodeId j : graph.neighbors(i)) {
        const CommunityId c = state.labels(j).front();
        if (c != current) {
            mass.emplace(c, 0.0);
        }
    }
    double current_mass = 0.0;
    for (const auto& e : info.row(i)) {
        const CommunityId c = state.labels(e.column).front();
        if (c == current) {
            current_mass += e.value;
        } else if (auto it = mass.find(c); it != mass.end()) {
            it->second += e.value;
        }
    }
    const double m = state.m_norm();
    Move best{};
    double best_u = current_mass / m;
    for (const auto& [c, sum] : mass) {
        const double u = sum / m;
        if (improves(u, best_u)) {
            best = Move{Move::Kind::join, c};
            best_u = u;
        }
    }
    if (improves(0.0, best_u)) {
        best = Move{Move::Kind::leave, 0};
    }
    return best;
}

void apply_move(NodeId i, const Move& move, GameState& state)
{
    switch (move.kind) {
    case Move::Kind::noop: break;
    case Move::Kind::join: state.join(i, move.community); break;
    case Move::Kind::leave: state.leave(i); break;
    }
}

std::vector<NodeId> nash_violations(const GameState& state, const InfoMatrix& info, const Graph& graph)
{
    std::vector<NodeId> out;
    for (NodeId i = 0; i < state.node_count(); ++i) {
        const double current = utility(i, state, info);
        const double slack = 1e-9 * std::max(1.0, std::abs(current));
        for (const Move& mv : local_strategies(i, state, graph)) {
            if (utility_after(i, mv, state, info) > current + slack) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

DetectionResult detect_communities(const Graph& graph, const InfoMatrix& info, const GameConfig& config)
{
    if (!info.finalized()) {
        throw StateError("detect_communities needs a finalized InfoMatrix");
    }
    const std::size_t n = graph.node_count();
    if (info.node_count() != n) {
        throw ArgumentError("InfoMatrix dimension " + std::to_string(info.node_count()) +
                            " != node count " + std::to_string(n));
    }
    const double m = config.m_norm.value_or(
        graph.edge_count() > 0 ? static_cast<double>(graph.edge_count()) : 1.0);
    const double lambda = config.mode == GameMode::overlapping
                              ? config.lambda.value_or(info.mean_nonzero() / m)
                              : 0.0;

    DetectionResult result{CommunityCover{}, GameState(n, config.mode, m, lambda)};
    if (n == 0) {
        result.converged = result.verified_nash = true;
        return result;
    }
    GameState& state = result.state;
    const std::size_t max_picks = config.max_picks ? config.max_picks : 500 * n;
    const std::size_t stall_threshold = config.stall_threshold ? config.stall_threshold : n;
    Rng rng(config.seed);

    std::size_t stall = 0;
    while (result.picks < max_picks) {
        const auto i = static_cast<NodeId>(rng.uniform_index(n));
        ++result.picks;
        const Move mv = best_response(i, state, info, graph);
        if (mv.kind == Move::Kind::noop) {
            ++stall;
        } else {
            apply_move(i, mv, state);
            ++result.moves;
            stall = 0;
        }
        if (stall < stall_threshold) {
            continue;
        }
        if (n > config.exact_sweep_n_max) {
            result.converged = true;
            break;
        }
        bool improved = false;
        for (NodeId j = 0; j < n; ++j) {
            const Move sweep_move = best_response(j, state, info, graph);
            if (sweep_move.kind != Move::Kind::noop) {
                apply_move(j, sweep_move, state);
                ++result.moves;
                improved = true;
            }
        }
        if (!improved) {
            result.converged = result.verified_nash = true;
            break;
        }
        stall = 0;
    }
    result.cover = state.cover();
    return result;
}

} // namespace infodiff
