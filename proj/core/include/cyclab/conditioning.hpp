#pragma once

#include "cyclab/pairing.hpp"
#include "cyclab/rational.hpp"

#include <cstdint>
#include <vector>

namespace cyclab {

struct ConditioningConstants {
    long long i = 0;
    Rational lambda;  // 2^i / (2i)
    Rational delta;   // ((-1)^i - 1) / 2^i : 0 for even i, -2^(1-i) for odd i
};

ConditioningConstants conditioning_constants(long long i);

// Partial sum sum_{i<=T} lambda_i delta_i^2; converges to ln 3.
Rational conditioning_sum_check(long long T);

// i.i.d. samples of W = prod_{j=3}^{J} (1 + delta_j)^{Z_j} exp(-delta_j lambda_j)
// with Z_j ~ Poisson(2^(j-1)/j). Even-j factors are exactly 1 and are not
// sampled. Sample t draws from (seed, t): reproducible at any thread count.
std::vector<double> sample_W(long long J, uint64_t seed, long long batch, int threads = 0);

// One draw with its Poisson components (odd j only; even factors are 1).
struct LimitLawSample {
    long long J = 0;
    std::vector<std::pair<long long, long long>> z;  // (j, Z_j)
    double w = 0;
};
LimitLawSample sample_W_detailed(long long J, uint64_t seed);

struct PlantedMomentResult {
    double mean = 0, std_error = 0;
    long long trials = 0;
};

// Plants the canonical ROD k-cycle factor D (vertices in block order; the
// conditional law does not depend on this choice, by symmetry), completes
// the pairing uniformly on the free points, and averages the i-cycle count.
// Converges to lambda_i (1 + delta_i).
PlantedMomentResult planted_moment(long long n, long long k, int i, long long trials,
                                   uint64_t seed, int threads = 0);

// The trial primitive behind planted_moment, exposed for distribution tests.
Pairing sample_pairing_with_planted_factor(long long n, long long k, uint64_t seed);

}  // namespace cyclab
