#include "cyclab/renewal.hpp"
#include "cyclab/series.hpp"

#include <benchmark/benchmark.h>

using namespace cyclab;

static void BM_HitWithoutReplacement(benchmark::State& state) {
    const LengthMultiset L = LengthMultiset::geometric_like(state.range(0));
    const long long k = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hit_without_replacement(L, k).value);
    }
}
BENCHMARK(BM_HitWithoutReplacement)->Args({60, 12})->Args({480, 12})->Args({480, 24});

static void BM_HitSizeBiased(benchmark::State& state) {
    const LengthMultiset L = LengthMultiset::geometric_like(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hit_size_biased(L, 24).value);
    }
}
BENCHMARK(BM_HitSizeBiased)->Arg(240)->Arg(480);

static void BM_RenewalCoefficients(benchmark::State& state) {
    const long long T = state.range(0);
    const ExactSeries f = series_from_lengths(LengthMultiset::geometric_like(64), T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(renewal_coefficients(f, T));
    }
}
BENCHMARK(BM_RenewalCoefficients)->Arg(60)->Arg(200);

static void BM_CorrectionCoefficients(benchmark::State& state) {
    const long long T = state.range(0);
    const ExactSeries g = geometric_series(T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(correction_coefficients(g, T));
    }
}
BENCHMARK(BM_CorrectionCoefficients)->Arg(40)->Arg(80);

static void BM_McHit(benchmark::State& state) {
    const LengthMultiset L = LengthMultiset::geometric_like(300);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            mc_hit(L, 20, Variant::without_replacement, state.range(0), 7, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McHit)->Arg(10000);
