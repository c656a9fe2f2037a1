#include "infodiff/diffusion.hpp"

#include <sstream>

#include "number_format.hpp"

namespace infodiff {

std::string to_string(Model model)
{
    switch (model) {
    case Model::gadm: return "gadm";
    case Model::egadm: return "egadm";
    case Model::psodm: return "psodm";
    }
    return "unknown";
}

Model parse_model(std::string_view name)
{
    std::string lower(name);
    for (char& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "gadm") return Model::gadm;
    if (lower == "egadm") return Model::egadm;
    if (lower == "psodm") return Model::psodm;
    throw ConfigError("unknown diffusion model '" + std::string(name) + "'");
}

void ModelConfig::validate() const
{
    if (beta == 0) {
        throw ConfigError("model beta must be positive");
    }
    if (!(p_m >= 0.0 && p_m <= 1.0)) {
        throw ConfigError("mutation probability p_m must lie in [0, 1]");
    }
    if (!(c_accel > 0.0)) {
        throw ConfigError("acceleration constant must be positive");
    }
    if (runs == 0) {
        throw ConfigError("runs must be at least 1");
    }
    if (epochs == 0) {
        throw ConfigError("epochs must be at least 1");
    }
}

DiffusionState::DiffusionState(Representation rep, std::size_t node_count, std::size_t beta)
    : representation_(rep), beta_(beta), fitness_(node_count, 0.0),
      scratch_bits_(4 * beta, 0), scratch_real_(beta, 0.0)
{
    if (rep == Representation::binary) {
        bits_.assign(node_count * beta, 0);
    } else {
        positions_.assign(node_count * beta, 0.0);
        velocities_.assign(node_count * beta, 0.0);
    }
}

DiffusionState DiffusionState::binary(std::size_t node_count, std::size_t beta)
{
    return DiffusionState(Representation::binary, node_count, beta);
}

DiffusionState DiffusionState::real(std::size_t node_count, std::size_t beta)
{
    return DiffusionState(Representation::real, node_count, beta);
}

double DiffusionState::total_fitness() const
{
    double total = 0.0;
    for (double x : fitness_) {
        total += x;
    }
    return total;
}

double DiffusionState::evaluate(NodeId v, const HdfFunction& f) const
{
    return is_binary() ? f.score_binary(bits(v)) : f.score_real(position(v));
}

void DiffusionState::refresh_fitness(const HdfFunction& f)
{
    for (NodeId v = 0; v < fitness_.size(); ++v) {
        fitness_[v] = evaluate(v, f);
    }
}

DiffusionState initial_state(const ModelConfig& config, std::size_t node_count,
                             const HdfFunction& f, Rng& rng)
{
    const bool binary = config.model != Model::psodm;
    DiffusionState state = binary ? DiffusionState::binary(node_count, config.beta)
                                  : DiffusionState::real(node_count, config.beta);
    if (config.init == InitMode::uniform_random) {
        for (NodeId v = 0; v < node_count; ++v) {
            if (binary) {
                for (auto& b : state.bits(v)) {
                    b = rng.bernoulli(0.5) ? 1 : 0;
                }
            } else {
                for (auto& x : state.position(v)) {
                    x = rng.uniform01();
                }
            }
        }
    }
    state.refresh_fitness(f);
    return state;
}

namespace {

void check_stream(const EventStream& stream, std::size_t node_count)
{
    if (stream.empty()) {
        throw ArgumentError("run_diffusion: event stream is empty");
    }
    if (stream.node_count() > node_count) {
        throw ConfigError("event stream references more nodes than the graph has");
    }
}

// `stream_for(run)` yields the event stream driving that run.
template <class N, class StreamFor>
DiffusionResult run_all(const ModelConfig& config, std::size_t node_count, StreamFor&& stream_for,
                        const HdfFunction& f, const StepObserver& observer, const N* static_neighbors)
{
    config.validate();
    if (config.beta != f.beta()) {
        throw ConfigError("model beta " + std::to_string(config.beta) + " != HDF beta " +
                          std::to_string(f.beta()));
    }

    DiffusionResult result{DiffusionState::binary(0, config.beta), {}, InfoMatrix(node_count), {}, {}, 0};

    for (std::size_t run = 0; run < config.runs; ++run) {
        const EventStream& stream = stream_for(run);
        check_stream(stream, node_count);
        const std::size_t epoch_size = stream.epoch_size();
        const auto events = stream.events();

        Rng rng(config.seed ^ static_cast<std::uint64_t>(run));
        DiffusionState state = initial_state(config, node_count, f, rng);
        InfoMatrix info(node_count);
        PartnerIndex partners(static_neighbors ? 0 : node_count);

        if (run == 0) {
            result.initial_fitness = state.fitness_values();
            result.trajectory.push_back(state.total_fitness());
        }

        std::size_t epochs = 0;
        std::size_t accepted_in_epoch = 0;
        for (std::size_t k = 0; k < events.size(); ++k) {
            const Event& e = events[k];
            StepGains gains;
            switch (config.model) {
            case Model::gadm:
                gains = gadm_step(e.u, e.v, state, f, rng);
                break;
            case Model::egadm:
                gains = egadm_step(e.u, e.v, state, f, config.p_m, rng);
                break;
            case Model::psodm:
                if (static_neighbors) {
                    gains = psodm_step(e.u, e.v, state, f, *static_neighbors, config.c_accel, rng);
                } else {
                    partners.record(e.u, e.v);
                    gains = psodm_step(e.u, e.v, state, f, partners, config.c_accel, rng);
                }
                break;
            }
            if (gains.u > 0.0) {
                info.add(e.u, e.v, gains.u);
            }
            if (gains.v > 0.0) {
                info.add(e.v, e.u, gains.v);
            }
            if (gains.any()) {
                ++accepted_in_epoch;
                ++result.accepted_updates;
            }
            if (observer) {
                observer(StepRecord{run, k, e.u, e.v, gains}, state);
            }

            const bool epoch_end = (k + 1) % epoch_size == 0 || k + 1 == events.size();
            if (epoch_end) {
                ++epochs;
                if (run == 0) {
                    result.trajectory.push_back(state.total_fitness());
                }
                if (config.early_stop && accepted_in_epoch == 0) {
                    break;
                }
                accepted_in_epoch = 0;
            }
        }
        result.epochs_run.push_back(epochs);

        if (run == 0) {
            result.info = std::move(info);
            result.final_state = std::move(state);
        } else {
            result.info.merge(info);
        }
    }
    result.info.finalize();
    return result;
}

// Stand-in so the dynamic path instantiates run_all with a concrete type.
struct NoNeighbors {
    std::span<const NodeId> neighbors(NodeId) const { return {}; }
};

} // namespace

DiffusionResult run_diffusion(const ModelConfig& config, const Graph& graph,
                              const EventStream& stream, const HdfFunction& f,
                              const StepObserver& observer)
{
    check_stream(stream, graph.node_count());
    return run_all(config, graph.node_count(), [&](std::size_t) -> const EventStream& { return stream; }, f,
                   observer, &graph);
}

DiffusionResult run_diffusion(const ModelConfig& config, const Graph& graph, const HdfFunction& f,
                              const StepObserver& observer)
{
    if (graph.edge_count() == 0) {
        throw ArgumentError("run_diffusion: graph has no edges");
    }
    EventStream current;
    return run_all(
        config, graph.node_count(),
        [&](std::size_t run) -> const EventStream& {
            current = build_event_stream(graph, config.epochs,
                                         config.seed ^ stable_hash("events") ^ static_cast<std::uint64_t>(run));
            return current;
        },
        f, observer, &graph);
}

DiffusionResult run_diffusion(const ModelConfig& config, const EventStream& stream,
                              const HdfFunction& f, const StepObserver& observer)
{
    return run_all<NoNeighbors>(config, stream.node_count(),
                                [&](std::size_t) -> const EventStream& { return stream; }, f, observer,
                                nullptr);
}

std::string trajectory_csv(std::span<const double> trajectory)
{
    std::ostringstream out;
    out << "epoch,total_fitness\n";
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        out << k << ',' << detail::shortest_decimal(trajectory[k]) << '\n';
    }
    return out.str();
}

} // namespace infodiff
