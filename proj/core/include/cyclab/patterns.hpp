#pragma once

#include "cyclab/lengths.hpp"
#include "cyclab/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclab {

// h disjoint k-vertex cycles plus m nontrivial vertex-disjoint paths
// covering [n].
struct IntersectionPattern {
    long long n = 0, k = 0;
    std::vector<std::vector<long long>> cycles;
    std::vector<std::vector<long long>> paths;

    long long h() const { return static_cast<long long>(cycles.size()); }
    long long m() const { return static_cast<long long>(paths.size()); }
    LengthMultiset path_lengths() const;
    void validate() const;
};

// |I_{h,m}| = n! / (h! (2k)^h m! 2^m) * C(n - kh - m - 1, m - 1), with the
// C(-1,-1) := 1 convention at (m = 0, kh = n). Throws on infeasible input.
BigInt count_patterns(long long n, long long m, long long h = 0, long long k = 0);

// Uniform over I_{0,m}: uniform m-composition of n with parts >= 2 (via a
// binary word of length n-m-1 and weight m-1), then uniform relabeling.
IntersectionPattern sample_pattern(long long n, long long m, uint64_t seed);

// Envelopes of the delta-normality definition. The short/long cutoff
// M = ceil(log log k / 8) is 1-2 for any machine-representable k, which
// makes the short-path clause nearly vacuous at desk scale and lets the
// long-path envelope reject even the exact geometric law at l = 2;
// interpret desk-scale verdicts accordingly, or set M_override to study
// the regime the envelopes are designed for.
struct NormalityParams {
    double delta = 0.5;
    long long k = 3;
    long long M_override = 0;  // > 0 replaces the derived cutoff

    long long M() const;
    double epsilon(long long l) const;  // (l^4 (2-delta)^l log^(1/8) k)^(-1)
    double gamma(long long l) const;    // (l^4 (2-delta)^l)^(-1)
};

struct NormalityReport {
    bool normal = false;
    std::string violation;  // empty when normal
};

// p_1 = 0; |p_l - 2^(1-l)| <= epsilon_l for 2 <= l <= M; p_l <= gamma_l for
// l >= M. Reports the first violated clause.
NormalityReport is_delta_normal(const LengthMultiset& L, const NormalityParams& params);

// N(S) for a cycle-free pattern with the given path-length multiset:
//   N = 2^m * sum over orderings whose prefix sums hit every multiple of k
//             of  prod over cycles (length of the cycle's first path),
// computed by a memoized DP over (remaining multiset, position in cycle).
// The first-path weight is the root count of that cycle. Validated against
// brute-force ROD enumeration before any second-moment use.
BigInt count_n_rod_containing(const LengthMultiset& lengths, long long k);
BigInt count_N(const IntersectionPattern& S, long long k);

struct PsiLedger {
    long long n = 0, k = 0;
    struct Row {
        long long h = 0, m = 0;
        Rational psi;      // Psi_h(m)
        Rational psi_hat;  // Psi_h(m) * k^(2(n/k - h))
    };
    std::vector<Row> rows;

    const Row& at(long long h, long long m) const;
};

// Exact table over all feasible (h, m). Exact mode is the default for
// n <= 100; pass force_exact to evaluate exactly beyond that.
PsiLedger psi_ledger(long long n, long long k, bool force_exact = false);

struct PsiLogRow {
    long long h = 0, m = 0;
    double log_psi = 0, log_psi_hat = 0;
};
std::vector<PsiLogRow> psi_ledger_log(long long n, long long k);

struct SecondMomentReport {
    long long n = 0, k = 0;
    Rational E_Y2;       // assembled from the pattern sum
    Rational E_Y;        // first moment, for the ratio
    Rational ratio;      // E_Y2 / E_Y^2
    BigInt pattern_sum;  // sum_h sum_m M(n-2m) sum_S N(S)^2
};

// Exact assembly of E[Y_k^2] = 6^n / M(3n) * pattern_sum by enumerating
// path-length partitions and evaluating N(S) exactly. Guarded by n <= 8.
SecondMomentReport second_moment_exact(long long n, long long k);

struct PathTailCheck {
    long long t = 0, ell = 0;
    double empirical = 0;
    double bound = 0;  // (4 e m / (t * base^ell))^t, capped at 1
};
struct PathFreqCheck {
    long long ell = 0;
    double mean_p = 0;
    double band_lo = 0, band_hi = 0;  // (2-eps)/(2+eps)^l .. (2+eps)/(2-eps)^l
};
struct PathStatsReport {
    long long n = 0, m = 0, samples = 0;
    std::vector<PathTailCheck> tails;
    std::vector<PathFreqCheck> freqs;
};

// Empirical tail and per-length frequency statistics of uniform cycle-free
// patterns, with the corresponding upper bounds / bands. `tail_base` is the
// (2 - o(1)) base instantiated for the bound, 1.9 by default.
PathStatsReport path_stats_experiment(long long n, long long m, long long samples, uint64_t seed,
                                      const std::vector<std::pair<long long, long long>>& tail_checks,
                                      const std::vector<long long>& freq_lengths, double eps = 0.05,
                                      double tail_base = 1.9);

}  // namespace cyclab
