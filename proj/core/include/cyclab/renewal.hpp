#pragma once

#include "cyclab/lengths.hpp"
#include "cyclab/rational.hpp"

#include <cstdint>
#include <vector>

namespace cyclab {

enum class Variant { with_replacement, without_replacement, size_biased };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct HitProbability {
    Rational value;
    Variant variant;
    long long k;
};

// R_k by the recurrence R_j = sum_l p_l R_{j-l}, R_0 = 1.
HitProbability hit_with_replacement(const LengthMultiset& L, long long k);
std::vector<Rational> hit_with_replacement_table(const LengthMultiset& L, long long k_max);

// P_k: probability that a uniform permutation of the multiset has k among
// its prefix sums. Computed through the prefix-subset identity
//   P_k = sum_j W(k, j) / C(m, j),
// where W(k, j) counts j-element sub-multisets of sum k weighted by
// prod_l C(m_l, a_l); a bounded-knapsack DP of size k x k. k > n gives
// exact 0; k <= 0 is an error.
HitProbability hit_without_replacement(const LengthMultiset& L, long long k);
std::vector<Rational> hit_without_replacement_table(const LengthMultiset& L, long long k_max);

// Q_k = sum_l (l m_l / n) P^{(L minus one l)}_{k-l}, with P_0 := 1.
HitProbability hit_size_biased(const LengthMultiset& L, long long k);

// Brute force over all distinct permutations (m <= 9). For the size-biased
// variant, first elements are weighted l/n and the remainder enumerated.
HitProbability enumerate_oracle(const LengthMultiset& L, long long k, Variant variant);

struct McEstimate {
    double estimate;
    double std_error;
    long long trials;
};

// Frequency estimate with binomial standard error; trial t draws its
// generator from (seed, t), so the result is independent of `threads`.
McEstimate mc_hit(const LengthMultiset& L, long long k, Variant variant, long long trials,
                  uint64_t seed, int threads = 0);

struct AsymptoticPrediction {
    Rational leading;    // m/n
    Rational corrected;  // m/n - c_f/m  (the size-biased prediction is `leading` itself)
    double error_exponent;  // fitted geometric decay rate of |R_j - m/n|, NaN unless fitted
};

// Truncation order used for asymptotic checks: max(4k, 200).
long long default_truncation(long long k);

// fit_window > 0 fits the decay exponent from exact R_j on j = k..k+fit_window;
// fit_window < 0 fits on [T/2, T] with T = default_truncation(k).
AsymptoticPrediction asymptotic_prediction(const LengthMultiset& L, long long k,
                                           long long fit_window = 0);

}  // namespace cyclab
