#pragma once

#include "cyclab/multigraph.hpp"
#include "cyclab/rational.hpp"

#include <cstdint>

namespace cyclab {

// Exact number of k-cycle factors in a cubic multigraph, weighted by edge
// multiplicities (a factor edge may use any parallel copy), matching the
// configuration-model count. In a cubic multigraph spanning 2-regular
// subgraphs are exactly complements of perfect matchings, so the search
// enumerates vertex-level perfect matchings and filters complements whose
// cycles all have k vertices. Loops can never be matched, which forces the
// count to zero. Returns 0 when k does not divide n.
BigInt count_cycle_factors(const Multigraph& g, long long k);
bool has_cycle_factor(const Multigraph& g, long long k);

// Y_k = cf_k * (n/k)! * (2k)^(n/k).
BigInt count_rod(const Multigraph& g, long long k);
BigInt rod_rescale(long long n, long long k);

struct MomentReport {
    long long n = 0, k = 0;
    Rational exact_E_Y;    // n! 6^n M(n) / M(3n)
    Rational exact_E_cf;   // exact_E_Y / ((n/k)! (2k)^(n/k))
    double asym_E_Y = 0;   // sqrt(2 pi n) (4/3)^(n/2)
    double asym_E_cf = 0;  // sqrt(k) (e (4/3)^(k/2) / (2n))^(n/k)
    double log_asym_E_Y = 0, log_asym_E_cf = 0;  // natural logs, safe at large n
};

MomentReport expected_moments(long long n, long long k);

// K_0(n) = log2(2n/e) / (1 - log2(3)/2), equal to 2 log_{4/3}(2n/e).
double threshold_K0(double n);
double threshold_kappa0();

struct McMean {
    double mean = 0, std_error = 0;
    long long samples = 0;
};

// Sample mean of cf_k over uniform pairings. Guarded by n <= n_guard.
McMean mc_mean_cf(long long n, long long k, long long samples, uint64_t seed, int threads = 0,
                  long long n_guard = 60);

struct PairingMomentSums {
    BigInt pairings;  // M(3n)
    BigInt sum_cf;
    BigInt sum_cf_sq;
};

// Exhaustive sums of cf_k and cf_k^2 over every pairing on 3n points.
// Feasible for n <= 6 (M(18) = 34,459,425 pairings).
PairingMomentSums enumerate_pairing_moments(long long n, long long k);

}  // namespace cyclab
