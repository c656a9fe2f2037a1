#include <benchmark/benchmark.h>

#include <cstdint>

#include "infodiff/diffusion.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/hdf.hpp"

namespace {

using namespace infodiff;

void run_model(benchmark::State& state, Model model)
{
    const Graph graph = generate_er({static_cast<std::size_t>(state.range(0)), 0.01, 3});
    const HdfFunction f = example_hdf();
    ModelConfig config;
    config.model = model;
    config.beta = f.beta();
    config.epochs = 5;
    config.runs = 1;
    config.early_stop = false;
    config.seed = 11;
    const EventStream stream = build_event_stream(graph, config.epochs, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_diffusion(config, graph, stream, f));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(stream.size()));
}

void BM_Gadm(benchmark::State& state) { run_model(state, Model::gadm); }
void BM_Egadm(benchmark::State& state) { run_model(state, Model::egadm); }
void BM_Psodm(benchmark::State& state) { run_model(state, Model::psodm); }

BENCHMARK(BM_Gadm)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Egadm)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Psodm)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

} // namespace
