#include <benchmark/benchmark.h>

#include "infodiff/diffusion.hpp"
#include "infodiff/game.hpp"
#include "infodiff/generators.hpp"
#include "infodiff/hdf.hpp"
#include "infodiff/lpa.hpp"
#include "infodiff/metrics.hpp"

namespace {

using namespace infodiff;

struct Fixture {
    GeneratedGraph gn;
    InfoMatrix info;

    explicit Fixture(double mu) : gn(generate_gn({mu, 21}))
    {
        ModelConfig config;
        config.seed = 4;
        info = run_diffusion(config, gn.graph, example_hdf()).info;
    }
};

void BM_GameDetection(benchmark::State& state)
{
    const Fixture fx(0.2);
    GameConfig config;
    config.seed = 9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_communities(fx.gn.graph, fx.info, config));
    }
}
BENCHMARK(BM_GameDetection)->Unit(benchmark::kMillisecond);

void BM_Lpa(benchmark::State& state)
{
    const GeneratedGraph gn = generate_gn({0.2, 21});
    LpaConfig config;
    config.seed = 9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lpa_detect(gn.graph, config));
    }
}
BENCHMARK(BM_Lpa);

void BM_Nmi(benchmark::State& state)
{
    const Fixture fx(0.3);
    GameConfig config;
    config.seed = 9;
    const CommunityCover detected = detect_communities(fx.gn.graph, fx.info, config).cover;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nmi_overlapping(detected, fx.gn.truth, fx.gn.graph.node_count()));
    }
}
BENCHMARK(BM_Nmi);

void BM_Modularity(benchmark::State& state)
{
    const GeneratedGraph gn = generate_gn({0.3, 21});
    for (auto _ : state) {
        benchmark::DoNotOptimize(modularity(gn.graph, gn.truth));
    }
}
BENCHMARK(BM_Modularity);

} // namespace
