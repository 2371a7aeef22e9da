#include "cyclab/pairing.hpp"
#include "cyclab/rng.hpp"

#include <benchmark/benchmark.h>

using namespace cyclab;

static void BM_SamplePairing(benchmark::State& state) {
    const long long n = state.range(0);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_pairing(n, 3, ++seed));
    }
}
BENCHMARK(BM_SamplePairing)->Arg(2000)->Arg(20000);

static void BM_ProjectAndCensus(benchmark::State& state) {
    const long long n = state.range(0);
    const int L = static_cast<int>(state.range(1));
    uint64_t seed = 0;
    for (auto _ : state) {
        const CycleCensus c = cycle_census(project(sample_pairing(n, 3, ++seed)), L);
        benchmark::DoNotOptimize(c.counts.data());
    }
}
BENCHMARK(BM_ProjectAndCensus)->Args({2000, 4})->Args({2000, 8});

static void BM_SampleGnp(benchmark::State& state) {
    const long long n = state.range(0);
    const double p = 6.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gnp(n, p, ++seed));
    }
}
BENCHMARK(BM_SampleGnp)->Arg(2500)->Arg(10000);

static void BM_Superposition(benchmark::State& state) {
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_superposition(state.range(0), 4, ++seed));
    }
}
BENCHMARK(BM_Superposition)->Arg(12)->Arg(240);
