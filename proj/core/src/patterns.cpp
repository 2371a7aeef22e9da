#include "cyclab/patterns.hpp"

#include "cyclab/factors.hpp"
#include "cyclab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cyclab {

LengthMultiset IntersectionPattern::path_lengths() const {
    LengthMultiset out;
    for (const auto& p : paths) out.add(static_cast<long long>(p.size()));
    return out;
}

void IntersectionPattern::validate() const {
    std::vector<char> used(n, 0);
    long long covered = 0;
    const auto touch = [&](long long v) {
        if (v < 0 || v >= n) throw std::invalid_argument("IntersectionPattern: vertex out of range");
        if (used[v]) throw std::invalid_argument("IntersectionPattern: components not disjoint");
        used[v] = 1;
        ++covered;
    };
    for (const auto& c : cycles) {
        if (static_cast<long long>(c.size()) != k)
            throw std::invalid_argument("IntersectionPattern: cycle must have exactly k vertices");
        for (long long v : c) touch(v);
    }
    for (const auto& p : paths) {
        if (p.size() < 2) throw std::invalid_argument("IntersectionPattern: paths must be nontrivial");
        for (long long v : p) touch(v);
    }
    if (covered != n) throw std::invalid_argument("IntersectionPattern: components must cover [n]");
}

BigInt count_patterns(long long n, long long m, long long h, long long k) {
    if (n < 1 || m < 0 || h < 0) throw std::invalid_argument("count_patterns: bad arguments");
    if (h > 0 && (k < 3 || k * h > n)) throw std::invalid_argument("count_patterns: infeasible cycles");
    const long long kh = h * k;
    if (m == 0) {
        if (kh != n) throw std::invalid_argument("count_patterns: m = 0 requires kh = n");
        return factorial(n) / (factorial(h) * int_pow(2 * k, h));
    }
    if (kh + 2 * m > n) throw std::invalid_argument("count_patterns: kh + 2m must be <= n");
    BigInt out = factorial(n) * binomial(n - kh - m - 1, m - 1);
    out /= factorial(m) * int_pow(2, m);
    if (h > 0) out /= factorial(h) * int_pow(2 * k, h);
    return out;
}

namespace {

// Uniform m-composition of total with parts >= 2, via the binary-word
// bijection: 1s at positions a_1 < ... < a_{m-1} inside [1, total-m-1].
std::vector<long long> sample_composition(long long total, long long m, rng::Engine& eng) {
    if (m == 1) return {total};
    const long long slots = total - m - 1;
    std::vector<long long> all(slots);
    std::iota(all.begin(), all.end(), 1LL);
    for (long long i = 0; i < m - 1; ++i) {
        const long long j = i + static_cast<long long>(rng::uniform_below(eng, slots - i));
        std::swap(all[i], all[j]);
    }
    std::vector<long long> ones(all.begin(), all.begin() + (m - 1));
    std::sort(ones.begin(), ones.end());
    std::vector<long long> parts;
    parts.reserve(m);
    parts.push_back(ones[0] + 1);
    for (long long i = 1; i < m - 1; ++i) parts.push_back(ones[i] - ones[i - 1] + 1);
    parts.push_back(total - m - ones[m - 2] + 1);
    return parts;
}

}  // namespace

IntersectionPattern sample_pattern(long long n, long long m, uint64_t seed) {
    if (m < 1 || 2 * m > n) throw std::invalid_argument("sample_pattern: need 1 <= m, 2m <= n");
    rng::Engine eng = rng::make_engine(seed);
    const std::vector<long long> parts = sample_composition(n, m, eng);
    std::vector<long long> labels(n);
    std::iota(labels.begin(), labels.end(), 0LL);
    rng::shuffle(labels, eng);
    IntersectionPattern out;
    out.n = n;
    out.k = 0;
    long long pos = 0;
    for (long long size : parts) {
        out.paths.emplace_back(labels.begin() + pos, labels.begin() + pos + size);
        pos += size;
    }
    return out;
}

long long NormalityParams::M() const {
    if (M_override > 0) return M_override;
    if (k < 3) throw std::invalid_argument("NormalityParams: k must be >= 3");
    return static_cast<long long>(std::ceil(std::log(std::log(static_cast<double>(k))) / 8.0));
}

double NormalityParams::epsilon(long long l) const {
    return gamma(l) / std::pow(std::log(static_cast<double>(k)), 0.125);
}

double NormalityParams::gamma(long long l) const {
    const double ld = static_cast<double>(l);
    return 1.0 / (ld * ld * ld * ld * std::pow(2.0 - delta, ld));
}

NormalityReport is_delta_normal(const LengthMultiset& L, const NormalityParams& params) {
    if (!(params.delta > 0.0 && params.delta < 1.0))
        throw std::invalid_argument("is_delta_normal: delta must be in (0, 1)");
    if (L.multiplicity(1) > 0) return {false, "p_1 > 0"};
    const long long M = params.M();
    for (long long l = 2; l <= M; ++l) {
        const double p = to_double(L.p(l));
        const double target = std::pow(2.0, 1.0 - static_cast<double>(l));
        if (std::fabs(p - target) > params.epsilon(l))
            return {false, "short-path deviation at length " + std::to_string(l)};
    }
    for (const auto& [len, mult] : L.entries()) {
        if (len < std::max<long long>(M, 2)) continue;  // l = 1 is the p_1 clause
        if (to_double(L.p(len)) > params.gamma(len))
            return {false, "long-path excess at length " + std::to_string(len)};
    }
    return {true, ""};
}

namespace {

struct RodWeaveDp {
    std::vector<long long> lens;    // distinct lengths
    std::vector<long long> counts;  // current remaining multiplicities
    long long k = 0;
    std::map<std::pair<std::vector<long long>, long long>, BigInt> memo;

    BigInt solve(long long r) {
        bool done = true;
        for (long long c : counts)
            if (c > 0) {
                done = false;
                break;
            }
        if (done) return r == 0 ? 1 : 0;
        const auto key = std::make_pair(counts, r);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt acc = 0;
        for (size_t i = 0; i < lens.size(); ++i) {
            if (counts[i] == 0) continue;
            const long long l = lens[i];
            if (r == 0) {
                // first path of a new cycle; weight l counts its root choices
                if (l > k) continue;
                --counts[i];
                acc += BigInt(counts[i] + 1) * l * solve(l == k ? 0 : l);
                ++counts[i];
            } else {
                if (r + l > k) continue;
                --counts[i];
                acc += BigInt(counts[i] + 1) * solve(r + l == k ? 0 : r + l);
                ++counts[i];
            }
        }
        memo.emplace(key, acc);
        return acc;
    }
};

}  // namespace

BigInt count_n_rod_containing(const LengthMultiset& lengths, long long k) {
    if (k < 3) throw std::invalid_argument("count_n_rod_containing: k must be >= 3");
    if (lengths.empty()) return 1;  // no paths left to weave
    if (lengths.n() % k != 0) throw std::invalid_argument("count_n_rod_containing: k must divide n");
    if (lengths.m() > 20)
        throw std::invalid_argument("count_n_rod_containing: m exceeds the DP budget guard");
    RodWeaveDp dp;
    for (const auto& [len, mult] : lengths.entries()) {
        dp.lens.push_back(len);
        dp.counts.push_back(mult);
    }
    dp.k = k;
    return int_pow(2, lengths.m()) * dp.solve(0);
}

BigInt count_N(const IntersectionPattern& S, long long k) {
    if (S.h() != 0) throw std::invalid_argument("count_N: pattern must be cycle-free (h = 0)");
    S.validate();
    return count_n_rod_containing(S.path_lengths(), k);
}

namespace {

Rational psi_value(long long n, long long k, long long h, long long m) {
    BigInt out = matchings(n - 2 * m) * factorial(n) * factorial(m) * int_pow(2, m);
    if (m == 0) {
        // C(-1,-1) := 1 boundary at (h = n/k, m = 0)
    } else {
        out *= binomial(n - k * h - m - 1, m - 1);
    }
    const BigInt ck = binomial(n / k, h);
    out *= ck * ck * int_pow(2 * k, h) * factorial(h);
    return Rational(out);
}

}  // namespace

const PsiLedger::Row& PsiLedger::at(long long h, long long m) const {
    for (const auto& r : rows)
        if (r.h == h && r.m == m) return r;
    throw std::out_of_range("PsiLedger: no such (h, m) row");
}

PsiLedger psi_ledger(long long n, long long k, bool force_exact) {
    if (n < 2 || n % 2 != 0 || k < 3 || n % k != 0)
        throw std::invalid_argument("psi_ledger: need even n, k >= 3, k | n");
    if (n > 100 && !force_exact)
        throw std::invalid_argument("psi_ledger: n > 100 is exact only with force_exact "
                                    "(see psi_ledger_log for the float table)");
    PsiLedger ledger;
    ledger.n = n;
    ledger.k = k;
    for (long long h = 0; h <= n / k; ++h) {
        const long long mmax = (n - k * h) / 2;
        for (long long m = (h == n / k ? 0 : 1); m <= mmax; ++m) {
            PsiLedger::Row row;
            row.h = h;
            row.m = m;
            row.psi = psi_value(n, k, h, m);
            row.psi_hat = row.psi * Rational(int_pow(BigInt(k), 2 * (n / k - h)));
            ledger.rows.push_back(std::move(row));
        }
    }
    return ledger;
}

namespace {

double log_matchings(long long j) {
    // M(j) = j! / ((j/2)! 2^(j/2))
    const double a = static_cast<double>(j);
    return std::lgamma(a + 1.0) - std::lgamma(a / 2.0 + 1.0) - (a / 2.0) * std::log(2.0);
}

double log_binomial(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

std::vector<PsiLogRow> psi_ledger_log(long long n, long long k) {
    if (n < 2 || n % 2 != 0 || k < 3 || n % k != 0)
        throw std::invalid_argument("psi_ledger_log: need even n, k >= 3, k | n");
    std::vector<PsiLogRow> rows;
    const double log2k = std::log(2.0 * static_cast<double>(k));
    for (long long h = 0; h <= n / k; ++h) {
        const long long mmax = (n - k * h) / 2;
        for (long long m = (h == n / k ? 0 : 1); m <= mmax; ++m) {
            PsiLogRow row;
            row.h = h;
            row.m = m;
            double v = log_matchings(n - 2 * m) + std::lgamma(static_cast<double>(n) + 1.0) +
                       std::lgamma(static_cast<double>(m) + 1.0) + m * std::log(2.0);
            if (m > 0) v += log_binomial(n - k * h - m - 1, m - 1);
            v += 2.0 * log_binomial(n / k, h) + h * log2k +
                 std::lgamma(static_cast<double>(h) + 1.0);
            row.log_psi = v;
            row.log_psi_hat = v + 2.0 * static_cast<double>(n / k - h) * std::log(static_cast<double>(k));
            rows.push_back(row);
        }
    }
    return rows;
}

namespace {

// Enumerates partitions of `total` into parts >= 2 (nonincreasing order).
void for_each_partition(long long total, long long max_part, std::vector<long long>& cur,
                        const std::function<void(const std::vector<long long>&)>& visit) {
    if (total == 0) {
        visit(cur);
        return;
    }
    for (long long part = std::min(total, max_part); part >= 2; --part) {
        if (total - part == 1) continue;  // cannot finish with a part of 1
        cur.push_back(part);
        for_each_partition(total - part, part, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

SecondMomentReport second_moment_exact(long long n, long long k) {
    if (n > 8) throw std::invalid_argument("second_moment_exact: n must be <= 8");
    if (n < 2 || n % 2 != 0 || k < 3 || n % k != 0)
        throw std::invalid_argument("second_moment_exact: need even n, k >= 3, k | n");
    BigInt pattern_sum = 0;
    for (long long h = 0; h <= n / k; ++h) {
        const long long nprime = n - k * h;
        const BigInt cycle_choices =
            falling_factorial(n, k * h) / (factorial(h) * int_pow(2 * k, h));
        const BigInt decorations = falling_factorial(n / k, h) * int_pow(2 * k, h);
        if (nprime == 0) {
            pattern_sum += matchings(n) * cycle_choices * decorations * decorations;
            continue;
        }
        std::vector<long long> cur;
        BigInt inner = 0;  // accumulated by m through the partition visitor
        for_each_partition(nprime, nprime, cur, [&](const std::vector<long long>& parts) {
            const long long m = static_cast<long long>(parts.size());
            LengthMultiset lam;
            for (long long p : parts) lam.add(p);
            BigInt pattern_count = factorial(nprime) / int_pow(2, m);
            for (const auto& [len, mult] : lam.entries()) pattern_count /= factorial(mult);
            const BigInt n0 = count_n_rod_containing(lam, k);
            const BigInt ns = decorations * n0;
            inner += matchings(n - 2 * m) * pattern_count * ns * ns;
        });
        pattern_sum += cycle_choices * inner;
    }
    SecondMomentReport out;
    out.n = n;
    out.k = k;
    out.pattern_sum = pattern_sum;
    out.E_Y2 = Rational(int_pow(6, n) * pattern_sum, matchings(3 * n));
    out.E_Y = expected_moments(n, k).exact_E_Y;
    out.ratio = out.E_Y2 / (out.E_Y * out.E_Y);
    return out;
}

PathStatsReport path_stats_experiment(long long n, long long m, long long samples, uint64_t seed,
                                      const std::vector<std::pair<long long, long long>>& tail_checks,
                                      const std::vector<long long>& freq_lengths, double eps,
                                      double tail_base) {
    if (m < 1 || 2 * m > n) throw std::invalid_argument("path_stats_experiment: need 2m <= n");
    if (samples < 1) throw std::invalid_argument("path_stats_experiment: need samples >= 1");
    PathStatsReport report;
    report.n = n;
    report.m = m;
    report.samples = samples;
    std::vector<long long> tail_hits(tail_checks.size(), 0);
    std::vector<double> freq_sums(freq_lengths.size(), 0.0);
    std::vector<long long> count_by_len;
    for (long long s = 0; s < samples; ++s) {
        rng::Engine eng = rng::make_engine(seed, static_cast<uint64_t>(s));
        const std::vector<long long> parts = sample_composition(n, m, eng);
        count_by_len.assign(static_cast<size_t>(n) + 1, 0);
        for (long long p : parts) ++count_by_len[p];
        for (size_t i = 0; i < tail_checks.size(); ++i) {
            const auto [t, ell] = tail_checks[i];
            long long atleast = 0;
            for (long long l = ell; l <= n; ++l) atleast += count_by_len[l];
            if (atleast >= t) ++tail_hits[i];
        }
        for (size_t i = 0; i < freq_lengths.size(); ++i)
            freq_sums[i] += static_cast<double>(count_by_len[freq_lengths[i]]) / static_cast<double>(m);
    }
    for (size_t i = 0; i < tail_checks.size(); ++i) {
        PathTailCheck c;
        c.t = tail_checks[i].first;
        c.ell = tail_checks[i].second;
        c.empirical = static_cast<double>(tail_hits[i]) / static_cast<double>(samples);
        const double raw = std::pow(4.0 * std::numbers::e * static_cast<double>(m) /
                                        (static_cast<double>(c.t) * std::pow(tail_base, c.ell)),
                                    static_cast<double>(c.t));
        c.bound = std::min(1.0, raw);
        report.tails.push_back(c);
    }
    for (size_t i = 0; i < freq_lengths.size(); ++i) {
        PathFreqCheck c;
        c.ell = freq_lengths[i];
        c.mean_p = freq_sums[i] / static_cast<double>(samples);
        c.band_lo = (2.0 - eps) / std::pow(2.0 + eps, static_cast<double>(c.ell));
        c.band_hi = (2.0 + eps) / std::pow(2.0 - eps, static_cast<double>(c.ell));
        report.freqs.push_back(c);
    }
    return report;
}

}  // namespace cyclab
