#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cyclab {

// Worker count: explicit argument wins, then the CYCLAB_THREADS environment
// variable, then 1. Results of every parallel reduction in this library are
// independent of the worker count: per-trial randomness is derived from
// (seed, trial_index) and partial results are combined with exact
// (commutative) accumulators.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CYCLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Accumulates per_index(i) over i in [0, count) into Acc via acc += value.
// Acc must be exact under reordering (integers, BigInt, or vectors filled
// by index).
template <class Acc, class F>
Acc parallel_accumulate(long long count, int threads, F per_index) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count < 2) {
        Acc total{};
        for (long long i = 0; i < count; ++i) total += per_index(i);
        return total;
    }
    std::vector<Acc> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            Acc local{};
            for (long long i = t; i < count; i += threads) local += per_index(i);
            partial[t] = std::move(local);
        });
    }
    for (auto& th : pool) th.join();
    Acc total{};
    for (auto& p : partial) total += p;
    return total;
}

// Fills out[i] = per_index(i); deterministic by construction.
template <class T, class F>
void parallel_fill(std::vector<T>& out, int threads, F per_index) {
    threads = resolve_threads(threads);
    const long long count = static_cast<long long>(out.size());
    if (threads <= 1 || count < 2) {
        for (long long i = 0; i < count; ++i) out[i] = per_index(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (long long i = t; i < count; i += threads) out[i] = per_index(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cyclab
