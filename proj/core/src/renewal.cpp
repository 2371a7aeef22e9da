#include "cyclab/renewal.hpp"

#include "cyclab/parallel.hpp"
#include "cyclab/rng.hpp"
#include "cyclab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cyclab {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::with_replacement: return "with_replacement";
        case Variant::without_replacement: return "without_replacement";
        case Variant::size_biased: return "size_biased";
    }
    throw std::logic_error("variant_name");
}

Variant variant_from_name(const std::string& name) {
    if (name == "with" || name == "with_replacement") return Variant::with_replacement;
    if (name == "without" || name == "without_replacement") return Variant::without_replacement;
    if (name == "size-biased" || name == "size_biased") return Variant::size_biased;
    throw std::invalid_argument("unknown variant: " + name);
}

namespace {

void check_k(long long k) {
    if (k <= 0) throw std::invalid_argument("hit probability: k must be positive");
}

void check_nonempty(const LengthMultiset& L) {
    if (L.empty()) throw std::invalid_argument("hit probability: empty multiset");
}

}  // namespace

std::vector<Rational> hit_with_replacement_table(const LengthMultiset& L, long long k_max) {
    check_nonempty(L);
    std::vector<Rational> R(static_cast<size_t>(k_max) + 1);
    R[0] = 1;
    for (long long j = 1; j <= k_max; ++j) {
        Rational acc(0);
        for (const auto& [len, mult] : L.entries()) {
            if (len > j) break;
            acc += Rational(mult, L.m()) * R[j - len];
        }
        R[j] = acc;
    }
    return R;
}

HitProbability hit_with_replacement(const LengthMultiset& L, long long k) {
    check_k(k);
    return {hit_with_replacement_table(L, k).back(), Variant::with_replacement, k};
}

// W[s][j]: number of j-subsets of the multiset with sum s, weighted by the
// product of per-length binomials.
static std::vector<std::vector<BigInt>> subset_sum_counts(const LengthMultiset& L,
                                                          long long s_max) {
    const long long j_max = std::min<long long>(L.m(), s_max);
    std::vector<std::vector<BigInt>> W(static_cast<size_t>(s_max) + 1,
                                       std::vector<BigInt>(static_cast<size_t>(j_max) + 1));
    W[0][0] = 1;
    for (const auto& [len, mult] : L.entries()) {
        const long long copies = std::min(mult, len > 0 ? s_max / len : 0);
        if (copies == 0) continue;
        std::vector<BigInt> choose(copies + 1);
        choose[0] = 1;
        for (long long a = 1; a <= copies; ++a)
            choose[a] = choose[a - 1] * (mult - a + 1) / a;
        for (long long s = s_max; s >= len; --s) {
            for (long long j = std::min(j_max, s); j >= 1; --j) {
                BigInt acc = 0;
                for (long long a = 1; a <= std::min(copies, std::min(j, s / len)); ++a) {
                    const BigInt& prev = W[s - a * len][j - a];
                    if (prev != 0) acc += prev * choose[a];
                }
                if (acc != 0) W[s][j] += acc;
            }
        }
    }
    return W;
}

std::vector<Rational> hit_without_replacement_table(const LengthMultiset& L, long long k_max) {
    check_nonempty(L);
    const long long s_max = std::min(k_max, L.n());
    const auto W = subset_sum_counts(L, s_max);
    const long long j_max = static_cast<long long>(W[0].size()) - 1;
    std::vector<BigInt> comb(j_max + 1);
    comb[0] = 1;
    for (long long j = 1; j <= j_max; ++j) comb[j] = comb[j - 1] * (L.m() - j + 1) / j;
    std::vector<Rational> P(static_cast<size_t>(k_max) + 1);
    P[0] = 1;
    for (long long k = 1; k <= k_max; ++k) {
        if (k > L.n()) continue;  // exact zero beyond the total sum
        Rational acc(0);
        for (long long j = 1; j <= j_max; ++j) {
            if (W[k][j] != 0) acc += Rational(W[k][j], comb[j]);
        }
        P[k] = acc;
    }
    return P;
}

HitProbability hit_without_replacement(const LengthMultiset& L, long long k) {
    check_k(k);
    check_nonempty(L);
    if (k > L.n()) return {Rational(0), Variant::without_replacement, k};
    return {hit_without_replacement_table(L, k).back(), Variant::without_replacement, k};
}

HitProbability hit_size_biased(const LengthMultiset& L, long long k) {
    check_k(k);
    check_nonempty(L);
    if (k > L.n()) return {Rational(0), Variant::size_biased, k};
    Rational acc(0);
    for (const auto& [len, mult] : L.entries()) {
        if (len > k) continue;
        const Rational weight(BigInt(len) * mult, L.n());
        if (len == k) {
            acc += weight;
            continue;
        }
        const LengthMultiset rest = L.minus_one(len);
        if (rest.empty()) continue;  // k != len cannot be hit with nothing left
        acc += weight * hit_without_replacement(rest, k - len).value;
    }
    return {acc, Variant::size_biased, k};
}

namespace {

// Distinct value-sequences of the multiset are equiprobable under a uniform
// permutation of labeled items, so plain next_permutation enumeration gives
// the exact law.
Rational oracle_without(const LengthMultiset& L, long long k) {
    if (k == 0) return 1;
    if (k < 0 || k > L.n()) return 0;
    std::vector<long long> seq = L.expand();
    std::sort(seq.begin(), seq.end());
    BigInt hits = 0, total = 0;
    do {
        ++total;
        long long sum = 0;
        for (long long x : seq) {
            sum += x;
            if (sum >= k) {
                hits += (sum == k);
                break;
            }
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return Rational(hits, total);
}

}  // namespace

HitProbability enumerate_oracle(const LengthMultiset& L, long long k, Variant variant) {
    check_k(k);
    check_nonempty(L);
    if (L.m() > 9) throw std::invalid_argument("enumerate_oracle: m must be <= 9");
    switch (variant) {
        case Variant::with_replacement:
            throw std::invalid_argument("enumerate_oracle: with_replacement has no finite enumeration");
        case Variant::without_replacement:
            return {oracle_without(L, k), variant, k};
        case Variant::size_biased: {
            Rational acc(0);
            for (const auto& [len, mult] : L.entries()) {
                const Rational weight(BigInt(len) * mult, L.n());
                if (len == k) {
                    acc += weight;
                } else if (len < k && L.m() > 1) {
                    acc += weight * oracle_without(L.minus_one(len), k - len);
                }
            }
            return {acc, variant, k};
        }
    }
    throw std::logic_error("enumerate_oracle");
}

namespace {

bool mc_trial(const LengthMultiset& L, long long k, Variant variant, rng::Engine& eng,
              const std::vector<long long>& flat, const std::vector<long long>& cum_value_weight) {
    switch (variant) {
        case Variant::with_replacement: {
            long long sum = 0;
            while (sum < k) sum += flat[rng::uniform_below(eng, flat.size())];
            return sum == k;
        }
        case Variant::without_replacement: {
            // Forward Fisher-Yates finalizes position i at step i, so the
            // prefix sum can be accumulated with early exit.
            std::vector<long long> seq = flat;
            long long sum = 0;
            for (size_t i = 0; i < seq.size(); ++i) {
                const size_t j = i + static_cast<size_t>(rng::uniform_below(eng, seq.size() - i));
                std::swap(seq[i], seq[j]);
                sum += seq[i];
                if (sum >= k) return sum == k;
            }
            return false;
        }
        case Variant::size_biased: {
            // Pick the first index with probability x_j / n via a cumulative
            // table over the flat expansion, then permute the rest.
            const long long u = static_cast<long long>(
                rng::uniform_below(eng, static_cast<uint64_t>(cum_value_weight.back())));
            const size_t first =
                std::upper_bound(cum_value_weight.begin(), cum_value_weight.end(), u) -
                cum_value_weight.begin();
            std::vector<long long> seq = flat;
            std::swap(seq[0], seq[first]);
            long long sum = seq[0];
            if (sum >= k) return sum == k;
            for (size_t i = 1; i < seq.size(); ++i) {
                const size_t j = i + static_cast<size_t>(rng::uniform_below(eng, seq.size() - i));
                std::swap(seq[i], seq[j]);
                sum += seq[i];
                if (sum >= k) return sum == k;
            }
            return false;
        }
    }
    return false;
}

}  // namespace

McEstimate mc_hit(const LengthMultiset& L, long long k, Variant variant, long long trials,
                  uint64_t seed, int threads) {
    check_k(k);
    check_nonempty(L);
    if (trials < 1) throw std::invalid_argument("mc_hit: trials must be >= 1");
    const std::vector<long long> flat = L.expand();
    std::vector<long long> cum(flat.size() + 1, 0);
    for (size_t i = 0; i < flat.size(); ++i) cum[i + 1] = cum[i] + flat[i];
    std::vector<long long> cum_tail(cum.begin() + 1, cum.end());
    const long long hits = parallel_accumulate<long long>(
        trials, threads, [&](long long t) -> long long {
            rng::Engine eng = rng::make_engine(seed, static_cast<uint64_t>(t));
            return mc_trial(L, k, variant, eng, flat, cum_tail) ? 1 : 0;
        });
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    const double se = std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
    return {p, se, trials};
}

long long default_truncation(long long k) { return std::max<long long>(4 * k, 200); }

AsymptoticPrediction asymptotic_prediction(const LengthMultiset& L, long long k,
                                           long long fit_window) {
    check_nonempty(L);
    const LimitConstants lc = limit_constants(L);
    AsymptoticPrediction out;
    out.leading = lc.u_infinity;
    out.corrected = lc.u_infinity - lc.correction / L.m();
    out.error_exponent = std::numeric_limits<double>::quiet_NaN();
    long long lo = k, hi = k + fit_window;
    if (fit_window < 0) {
        const long long T = default_truncation(k);
        lo = T / 2;
        hi = T;
    }
    if (hi > lo) {
        check_k(lo);
        const auto R = hit_with_replacement_table(L, hi);
        std::vector<double> errs;
        for (long long j = lo; j <= hi; ++j) errs.push_back(to_double(R[j] - lc.u_infinity));
        out.error_exponent = fit_log_decay_slope(errs, lo);
    }
    return out;
}

}  // namespace cyclab
