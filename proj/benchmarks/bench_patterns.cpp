#include "cyclab/patterns.hpp"

#include <benchmark/benchmark.h>

using namespace cyclab;

static void BM_CountN(benchmark::State& state) {
    // a mid-size weave: m paths of mixed lengths into cycles of k
    LengthMultiset lengths;
    lengths.add(2, state.range(0));
    lengths.add(3, state.range(0) / 2);
    lengths.add(4, 1);
    const long long total = lengths.n();
    const long long k = (total % 8 == 0) ? 8 : total;  // keep k | n
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_n_rod_containing(lengths, k));
    }
}
BENCHMARK(BM_CountN)->Arg(4)->Arg(8);

static void BM_PsiLedgerExact(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi_ledger(n, n / 5, /*force_exact=*/true));
    }
}
BENCHMARK(BM_PsiLedgerExact)->Arg(30)->Arg(100);

static void BM_SecondMomentExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(second_moment_exact(state.range(0), 4));
    }
}
BENCHMARK(BM_SecondMomentExact)->Arg(8);

static void BM_SamplePattern(benchmark::State& state) {
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_pattern(3000, 1000, ++seed));
    }
}
BENCHMARK(BM_SamplePattern);

BENCHMARK_MAIN();
