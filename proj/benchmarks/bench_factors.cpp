#include "cyclab/factors.hpp"
#include "cyclab/pairing.hpp"
#include "cyclab/rng.hpp"

#include <benchmark/benchmark.h>

using namespace cyclab;

static void BM_CountCycleFactors(benchmark::State& state) {
    const long long n = state.range(0), k = state.range(1);
    const Multigraph g = project(sample_pairing(n, 3, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_cycle_factors(g, k));
    }
}
BENCHMARK(BM_CountCycleFactors)->Args({12, 12})->Args({24, 12})->Args({36, 12});

static void BM_ExpectedMoments(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_moments(n, n / 2));
    }
}
BENCHMARK(BM_ExpectedMoments)->Arg(48)->Arg(240);

static void BM_McMeanCf(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_mean_cf(12, 12, state.range(0), 3, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McMeanCf)->Arg(200);
