#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cyclab::rng {

// All randomized operations in the library draw from engines derived as
// make_engine(master_seed, stream_index). Distinct stream indices give
// independent streams, so batched experiments are reproducible regardless
// of how trials are partitioned across workers.

using Engine = std::mt19937_64;

uint64_t splitmix64(uint64_t& state);
uint64_t mix(uint64_t seed, uint64_t stream);
Engine make_engine(uint64_t seed, uint64_t stream = 0);

// Unbiased integer in [0, bound) via rejection. bound >= 1.
uint64_t uniform_below(Engine& eng, uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine& eng);

// Fisher-Yates with uniform_below; deterministic across standard libraries,
// unlike std::shuffle.
template <class T>
void shuffle(std::vector<T>& v, Engine& eng) {
    for (size_t i = v.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(uniform_below(eng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Exact Poisson sampling: sequential inversion for lambda <= 30, Hormann's
// PTRD transformed rejection (long-double log-space acceptance test) above.
long long poisson(Engine& eng, double lambda);

}  // namespace cyclab::rng
