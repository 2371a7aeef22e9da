#include "cyclab/conditioning.hpp"

#include "cyclab/parallel.hpp"
#include "cyclab/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclab {

ConditioningConstants conditioning_constants(long long i) {
    if (i < 1) throw std::invalid_argument("conditioning_constants: i must be >= 1");
    ConditioningConstants out;
    out.i = i;
    out.lambda = Rational(int_pow(2, i), 2 * i);
    out.delta = (i % 2 == 0) ? Rational(0) : Rational(-2, int_pow(2, i));
    return out;
}

Rational conditioning_sum_check(long long T) {
    if (T < 1) throw std::invalid_argument("conditioning_sum_check: T must be >= 1");
    Rational acc(0);
    for (long long i = 1; i <= T; i += 2) {
        // lambda_i delta_i^2 = 2 / (i 2^i) for odd i; even terms vanish
        acc += Rational(2, BigInt(i) * int_pow(2, i));
    }
    return acc;
}

std::vector<double> sample_W(long long J, uint64_t seed, long long batch, int threads) {
    if (J < 3) throw std::invalid_argument("sample_W: J must be >= 3");
    if (batch < 1) throw std::invalid_argument("sample_W: batch must be >= 1");
    struct Factor {
        double lambda;
        double log_one_plus_delta;
        double exponent_shift;  // -delta_j * lambda_j = 1/j
    };
    std::vector<Factor> factors;
    for (long long j = 3; j <= J; j += 2) {
        Factor f;
        f.lambda = to_double(conditioning_constants(j).lambda);
        f.log_one_plus_delta = std::log1p(-std::pow(2.0, 1.0 - static_cast<double>(j)));
        f.exponent_shift = 1.0 / static_cast<double>(j);
        factors.push_back(f);
    }
    std::vector<double> out(static_cast<size_t>(batch));
    parallel_fill(out, threads, [&](long long t) {
        rng::Engine eng = rng::make_engine(seed, static_cast<uint64_t>(t));
        long double log_w = 0.0L;
        for (const Factor& f : factors) {
            const long long z = rng::poisson(eng, f.lambda);
            log_w += static_cast<long double>(z) * f.log_one_plus_delta + f.exponent_shift;
        }
        return static_cast<double>(std::exp(log_w));
    });
    return out;
}

LimitLawSample sample_W_detailed(long long J, uint64_t seed) {
    if (J < 3) throw std::invalid_argument("sample_W_detailed: J must be >= 3");
    LimitLawSample out;
    out.J = J;
    rng::Engine eng = rng::make_engine(seed, 0);
    long double log_w = 0.0L;
    for (long long j = 3; j <= J; j += 2) {
        const double lambda = to_double(conditioning_constants(j).lambda);
        const long long z = rng::poisson(eng, lambda);
        out.z.push_back({j, z});
        log_w += static_cast<long double>(z) *
                     std::log1p(-std::pow(2.0, 1.0 - static_cast<double>(j))) +
                 1.0 / static_cast<double>(j);
    }
    out.w = static_cast<double>(std::exp(log_w));
    return out;
}

Pairing sample_pairing_with_planted_factor(long long n, long long k, uint64_t seed) {
    if (k < 3 || n % k != 0) throw std::invalid_argument("planted factor: need k >= 3, k | n");
    if (n % 2 != 0) throw std::invalid_argument("planted factor: n must be even");
    Pairing p;
    p.n = n;
    p.d = 3;
    p.partner.assign(3 * n, -1);
    // Canonical ROD factor: blocks of k consecutive vertices; edge v -> w
    // realized as (out point 3v+1, in point 3w).
    for (long long b = 0; b < n; b += k) {
        for (long long i = 0; i < k; ++i) {
            const long long v = b + i;
            const long long w = b + (i + 1) % k;
            p.partner[3 * v + 1] = 3 * w;
            p.partner[3 * w] = 3 * v + 1;
        }
    }
    std::vector<long long> free_points(n);
    for (long long v = 0; v < n; ++v) free_points[v] = 3 * v + 2;
    rng::Engine eng = rng::make_engine(seed);
    rng::shuffle(free_points, eng);
    for (size_t i = 0; i < free_points.size(); i += 2) {
        p.partner[free_points[i]] = free_points[i + 1];
        p.partner[free_points[i + 1]] = free_points[i];
    }
    return p;
}

PlantedMomentResult planted_moment(long long n, long long k, int i, long long trials,
                                   uint64_t seed, int threads) {
    if (i < 3) throw std::invalid_argument("planted_moment: i must be >= 3");
    if (trials < 2) throw std::invalid_argument("planted_moment: need trials >= 2");
    struct Sums {
        long long sum = 0, sum_sq = 0;
        Sums& operator+=(const Sums& o) {
            sum += o.sum;
            sum_sq += o.sum_sq;
            return *this;
        }
    };
    const Sums totals = parallel_accumulate<Sums>(trials, threads, [&](long long t) {
        const Pairing p =
            sample_pairing_with_planted_factor(n, k, rng::mix(seed, static_cast<uint64_t>(t)));
        const long long x = cycle_census(project(p), i).X(i);
        return Sums{x, x * x};
    });
    PlantedMomentResult out;
    out.trials = trials;
    out.mean = static_cast<double>(totals.sum) / static_cast<double>(trials);
    const double mean_sq = static_cast<double>(totals.sum_sq) / static_cast<double>(trials);
    const double var =
        std::max(0.0, (mean_sq - out.mean * out.mean) * trials / (trials - 1.0));
    out.std_error = std::sqrt(var / static_cast<double>(trials));
    return out;
}

}  // namespace cyclab
