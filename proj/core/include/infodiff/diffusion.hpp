#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "infodiff/errors.hpp"
#include "infodiff/graph.hpp"
#include "infodiff/hdf.hpp"
#include "infodiff/info_matrix.hpp"
#include "infodiff/random.hpp"

namespace infodiff {

enum class Model { gadm, egadm, psodm };
enum class InitMode { zero, uniform_random };

std::string to_string(Model model);
Model parse_model(std::string_view name);

struct ModelConfig {
    Model model = Model::psodm;
    std::size_t beta = 10;
    double p_m = 0.1;       ///< per-bit mutation probability (EGADM)
    double c_accel = 2.0;   ///< acceleration constant C (PSODM)
    InitMode init = InitMode::uniform_random;
    std::size_t epochs = 20; ///< passes over the edge set when driving a static graph
    std::size_t runs = 10;   ///< independent runs averaged into the InfoMatrix
    std::uint64_t seed = 0;
    bool early_stop = true;  ///< end a run after an epoch with no accepted update

    void validate() const;
};

/// Per-node state vectors, cached fitness and (PSODM) velocities.
///
/// Binary models store bits; PSODM stores positions in [0, 1]. All vectors
/// have length beta and fitness(v) always equals f(vector of v).
class DiffusionState {
public:
    enum class Representation { binary, real };

    static DiffusionState binary(std::size_t node_count, std::size_t beta);
    static DiffusionState real(std::size_t node_count, std::size_t beta);

    Representation representation() const { return representation_; }
    bool is_binary() const { return representation_ == Representation::binary; }
    std::size_t node_count() const { return fitness_.size(); }
    std::size_t beta() const { return beta_; }

    std::span<std::uint8_t> bits(NodeId v) { return {bits_.data() + v * beta_, beta_}; }
    std::span<const std::uint8_t> bits(NodeId v) const { return {bits_.data() + v * beta_, beta_}; }
    std::span<double> position(NodeId v) { return {positions_.data() + v * beta_, beta_}; }
    std::span<const double> position(NodeId v) const { return {positions_.data() + v * beta_, beta_}; }
    std::span<double> velocity(NodeId v) { return {velocities_.data() + v * beta_, beta_}; }
    std::span<const double> velocity(NodeId v) const { return {velocities_.data() + v * beta_, beta_}; }

    double fitness(NodeId v) const { return fitness_[v]; }
    void set_fitness(NodeId v, double value) { fitness_[v] = value; }
    const std::vector<double>& fitness_values() const { return fitness_; }
    double total_fitness() const;

    /// Score node v's vector with f.
    double evaluate(NodeId v, const HdfFunction& f) const;
    void refresh_fitness(const HdfFunction& f);

    /// Working buffers for the step functions (4 * beta bits, beta reals).
    std::span<std::uint8_t> scratch_bits(std::size_t slot) { return {scratch_bits_.data() + slot * beta_, beta_}; }
    std::span<double> scratch_real() { return scratch_real_; }

private:
    DiffusionState(Representation rep, std::size_t node_count, std::size_t beta);

    Representation representation_;
    std::size_t beta_;
    std::vector<std::uint8_t> bits_;
    std::vector<double> positions_;
    std::vector<double> velocities_;
    std::vector<double> fitness_;
    std::vector<std::uint8_t> scratch_bits_;
    std::vector<double> scratch_real_;
};

/// Accepted (nonnegative) fitness gains of the two endpoints of one step.
struct StepGains {
    double u = 0.0;
    double v = 0.0;

    bool any() const { return u > 0.0 || v > 0.0; }
};

template <class N>
concept Neighborhood = requires(const N& n, NodeId v) {
    { n.neighbors(v) } -> std::convertible_to<std::span<const NodeId>>;
};

/// Partners seen so far in a dynamic stream, per node, sorted.
class PartnerIndex {
public:
    explicit PartnerIndex(std::size_t node_count) : partners_(node_count) {}

    void record(NodeId u, NodeId v)
    {
        insert(partners_[u], v);
        insert(partners_[v], u);
    }
    std::span<const NodeId> neighbors(NodeId v) const { return partners_[v]; }

private:
    static void insert(std::vector<NodeId>& list, NodeId x)
    {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) {
            list.insert(it, x);
        }
    }

    std::vector<std::vector<NodeId>> partners_;
};

namespace detail {

inline void require_binary(const DiffusionState& state, NodeId u, NodeId v)
{
    if (!state.is_binary()) {
        throw ModelMismatchError("genetic step applied to a real-valued state");
    }
    if (u == v) {
        throw ArgumentError("diffusion step needs two distinct nodes");
    }
}

// Replace node x's vector with the better of two candidates if it strictly
// beats the current fitness; ties keep the current vector (and prefer `a`
// over `b`). Returns the gain.
inline double adopt_best(DiffusionState& state, NodeId x, std::span<const std::uint8_t> a, double fa,
                         std::span<const std::uint8_t> b, double fb)
{
    const bool pick_a = fa >= fb;
    const double best = pick_a ? fa : fb;
    const double current = state.fitness(x);
    if (!(best > current)) {
        return 0.0;
    }
    auto chosen = pick_a ? a : b;
    std::copy(chosen.begin(), chosen.end(), state.bits(x).begin());
    state.set_fitness(x, best);
    return best - current;
}

} // namespace detail

/// One-point crossover between u and v; each endpoint keeps the fitter of
/// itself and the two offspring.
///
/// The crossover point c is drawn from [1, beta]; the tail is every position
/// at or after c (1-based). Offspring 1 is u's head with v's tail, offspring 2
/// the converse. Both offspring are built from the pre-step vectors.
template <StepRandom R>
StepGains gadm_step(NodeId u, NodeId v, DiffusionState& state, const HdfFunction& f, R& rng)
{
    detail::require_binary(state, u, v);
    const std::size_t beta = state.beta();
    const std::size_t c = rng.crossover_point(beta);
    const std::size_t cut = c - 1;

    auto su = state.bits(u);
    auto sv = state.bits(v);
    auto gamma1 = state.scratch_bits(0);
    auto gamma2 = state.scratch_bits(1);
    for (std::size_t i = 0; i < beta; ++i) {
        gamma1[i] = i < cut ? su[i] : sv[i];
        gamma2[i] = i < cut ? sv[i] : su[i];
    }
    const double f1 = f.score_binary(gamma1);
    const double f2 = f.score_binary(gamma2);

    StepGains gains;
    gains.v = detail::adopt_best(state, v, gamma1, f1, gamma2, f2);
    gains.u = detail::adopt_best(state, u, gamma1, f1, gamma2, f2);
    return gains;
}

/// Crossover as in gadm_step, then bit-flip mutation: w1 mutates u's
/// post-crossover vector, w2 mutates v's; each bit flips when a uniform draw
/// falls below p_m. Each endpoint then keeps the fitter of itself, w1 and w2.
template <StepRandom R>
StepGains egadm_step(NodeId u, NodeId v, DiffusionState& state, const HdfFunction& f, double p_m,
                     R& rng)
{
    StepGains gains = gadm_step(u, v, state, f, rng);
    const std::size_t beta = state.beta();

    auto w1 = state.scratch_bits(2);
    auto w2 = state.scratch_bits(3);
    auto su = state.bits(u);
    auto sv = state.bits(v);
    for (std::size_t i = 0; i < beta; ++i) {
        w1[i] = rng.bernoulli(p_m) ? static_cast<std::uint8_t>(1 - su[i]) : su[i];
    }
    for (std::size_t i = 0; i < beta; ++i) {
        w2[i] = rng.bernoulli(p_m) ? static_cast<std::uint8_t>(1 - sv[i]) : sv[i];
    }
    const double f1 = f.score_binary(w1);
    const double f2 = f.score_binary(w2);

    gains.v += detail::adopt_best(state, v, w1, f1, w2, f2);
    gains.u += detail::adopt_best(state, u, w1, f1, w2, f2);
    return gains;
}

/// Velocity/position update of one endpoint toward its best neighbor.
/// Returns the accepted gain (0 when the move is rejected or x is isolated).
template <Neighborhood N, StepRandom R>
double psodm_update(NodeId x, DiffusionState& state, const HdfFunction& f, const N& neighborhood,
                    double c_accel, R& rng)
{
    auto nbrs = neighborhood.neighbors(x);
    if (nbrs.empty()) {
        return 0.0;
    }
    NodeId best = nbrs[0];
    for (NodeId y : nbrs) {
        const double fy = state.fitness(y);
        const double fb = state.fitness(best);
        if (fy > fb || (fy == fb && y < best)) {
            best = y;
        }
    }

    const std::size_t beta = state.beta();
    auto pos = state.position(x);
    auto vel = state.velocity(x);
    auto g = state.position(best);
    auto tentative = state.scratch_real();
    for (std::size_t i = 0; i < beta; ++i) {
        const double r = rng.uniform01();
        vel[i] += c_accel * r * (g[i] - pos[i]);
        tentative[i] = std::clamp(pos[i] + vel[i], 0.0, 1.0);
    }
    const double candidate = f.score_real(tentative);
    const double current = state.fitness(x);
    if (!(candidate > current)) {
        return 0.0;
    }
    std::copy(tentative.begin(), tentative.end(), pos.begin());
    state.set_fitness(x, candidate);
    return candidate - current;
}

/// Both endpoints of the contact update in turn (u first). pBest equals the
/// current position, so only the best-neighbor term drives the velocity.
template <Neighborhood N, StepRandom R>
StepGains psodm_step(NodeId u, NodeId v, DiffusionState& state, const HdfFunction& f,
                     const N& neighborhood, double c_accel, R& rng)
{
    if (state.is_binary()) {
        throw ModelMismatchError("psodm step applied to a binary state");
    }
    if (u == v) {
        throw ArgumentError("diffusion step needs two distinct nodes");
    }
    StepGains gains;
    gains.u = psodm_update(u, state, f, neighborhood, c_accel, rng);
    gains.v = psodm_update(v, state, f, neighborhood, c_accel, rng);
    return gains;
}

/// Initialize every node: bits Bernoulli(0.5) / positions U(0, 1), or all
/// zero; velocities zero; fitness cache filled.
DiffusionState initial_state(const ModelConfig& config, std::size_t node_count,
                             const HdfFunction& f, Rng& rng);

/// Passed to an observer after every processed event.
struct StepRecord {
    std::size_t run = 0;
    std::size_t event_index = 0;
    NodeId u = 0;
    NodeId v = 0;
    StepGains gains;
};

using StepObserver = std::function<void(const StepRecord&, const DiffusionState&)>;

struct DiffusionResult {
    DiffusionState final_state;          ///< state at the end of run 0
    std::vector<double> initial_fitness; ///< per-node fitness at the start of run 0
    InfoMatrix info;                     ///< finalized mean over runs
    std::vector<double> trajectory;      ///< total fitness at start and after each epoch of run 0
    std::vector<std::size_t> epochs_run; ///< epochs processed by each run
    std::size_t accepted_updates = 0;    ///< steps with a positive gain, all runs
};

/// Drive the model over `stream` for `config.runs` independent runs (run k is
/// seeded with seed ^ k). Best-neighbor lookups use `graph`.
DiffusionResult run_diffusion(const ModelConfig& config, const Graph& graph,
                              const EventStream& stream, const HdfFunction& f,
                              const StepObserver& observer = {});

/// Static-graph variant that draws a fresh event order for every run:
/// `config.epochs` shuffled passes over the edge set, seeded from seed ^ run.
DiffusionResult run_diffusion(const ModelConfig& config, const Graph& graph, const HdfFunction& f,
                              const StepObserver& observer = {});

/// Dynamic variant: neighbor sets are the partners seen so far in the stream.
DiffusionResult run_diffusion(const ModelConfig& config, const EventStream& stream,
                              const HdfFunction& f, const StepObserver& observer = {});

/// `epoch,total_fitness` rows.
std::string trajectory_csv(std::span<const double> trajectory);

} // namespace infodiff
