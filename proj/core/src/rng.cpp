#include "cyclab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclab::rng {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t mix(uint64_t seed, uint64_t stream) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s);
    s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ULL);
}

Engine make_engine(uint64_t seed, uint64_t stream) { return Engine(mix(seed, stream)); }

uint64_t uniform_below(Engine& eng, uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return eng() & (bound - 1);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % bound;
}

double uniform01(Engine& eng) { return (eng() >> 11) * 0x1.0p-53; }

namespace {

long long poisson_inversion(Engine& eng, double lambda) {
    const double u = uniform01(eng);
    double p = std::exp(-lambda);
    double cdf = p;
    long long k = 0;
    while (u > cdf) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
        if (p < 1e-300 && k > lambda) break;
    }
    return k;
}

// PTRD (Hormann 1993). Valid for lambda >= 10; we use it above 30.
long long poisson_ptrd(Engine& eng, double lambda) {
    const double smu = std::sqrt(lambda);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const long double log_lambda = std::log(static_cast<long double>(lambda));

    for (;;) {
        double u = uniform01(eng) - 0.5;
        double v = uniform01(eng);
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const long long k = static_cast<long long>(kf);
        const long double lhs =
            std::log(static_cast<long double>(v) * inv_alpha / (a / (us * us) + b));
        const long double rhs =
            static_cast<long double>(k) * log_lambda - static_cast<long double>(lambda) -
            std::lgammal(static_cast<long double>(k) + 1.0L);
        if (lhs <= rhs) return k;
    }
}

}  // namespace

long long poisson(Engine& eng, double lambda) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("poisson: lambda must be nonnegative");
    if (lambda == 0.0) return 0;
    if (lambda <= 30.0) return poisson_inversion(eng, lambda);
    return poisson_ptrd(eng, lambda);
}

}  // namespace cyclab::rng
