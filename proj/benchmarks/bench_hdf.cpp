#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "infodiff/hdf.hpp"
#include "infodiff/random.hpp"

namespace {

using namespace infodiff;

HdfFunction bench_hdf(std::size_t beta)
{
    RandomHdfSpec spec;
    spec.beta = beta;
    spec.n_order1 = beta / 4;
    spec.n_higher = beta / 4;
    Rng rng(7);
    return build_random_hdf(spec, rng);
}

void BM_ScoreBinary(benchmark::State& state)
{
    const auto beta = static_cast<std::size_t>(state.range(0));
    const HdfFunction f = bench_hdf(beta);
    Rng rng(1);
    std::vector<std::uint8_t> bits(beta);
    for (auto& b : bits) {
        b = rng.bernoulli(0.5) ? 1 : 0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.score_binary(bits));
    }
}
BENCHMARK(BM_ScoreBinary)->Arg(16)->Arg(64)->Arg(256);

void BM_ScoreReal(benchmark::State& state)
{
    const auto beta = static_cast<std::size_t>(state.range(0));
    const HdfFunction f = bench_hdf(beta);
    Rng rng(1);
    std::vector<double> values(beta);
    for (auto& x : values) {
        x = rng.uniform01();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.score_real(values));
    }
}
BENCHMARK(BM_ScoreReal)->Arg(16)->Arg(64)->Arg(256);

} // namespace
