#pragma once

#include "cyclab/lengths.hpp"
#include "cyclab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cyclab {

// Coefficients c_0..c_T of a formal power series. Arithmetic truncates to
// the smaller order of the two operands. The coefficient type is an explicit
// template choice: Rational for exact work (the default everywhere), double
// for truncation orders where rational bit growth dominates.
template <class C>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(long long truncation_order)
        : c_(static_cast<size_t>(check_order(truncation_order)) + 1) {}
    explicit TruncatedSeries(std::vector<C> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty()) throw std::invalid_argument("TruncatedSeries: need at least c_0");
    }

    long long truncation_order() const { return static_cast<long long>(c_.size()) - 1; }
    const C& operator[](long long j) const { return c_.at(static_cast<size_t>(j)); }
    void set(long long j, C v) { c_.at(static_cast<size_t>(j)) = std::move(v); }
    const std::vector<C>& coefficients() const { return c_; }

    TruncatedSeries truncate(long long T) const {
        if (T >= truncation_order()) return *this;
        return TruncatedSeries(std::vector<C>(c_.begin(), c_.begin() + T + 1));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long long T = std::min(a.truncation_order(), b.truncation_order());
        TruncatedSeries r(T);
        for (long long j = 0; j <= T; ++j) r.c_[j] = a.c_[j] + b.c_[j];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long long T = std::min(a.truncation_order(), b.truncation_order());
        TruncatedSeries r(T);
        for (long long j = 0; j <= T; ++j) r.c_[j] = a.c_[j] - b.c_[j];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const long long T = std::min(a.truncation_order(), b.truncation_order());
        TruncatedSeries r(T);
        for (long long i = 0; i <= T; ++i) {
            if (a.c_[i] == C(0)) continue;
            for (long long j = 0; i + j <= T; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  private:
    static long long check_order(long long T) {
        if (T < 0) throw std::invalid_argument("TruncatedSeries: truncation order must be >= 0");
        return T;
    }
    std::vector<C> c_;
};

using ExactSeries = TruncatedSeries<Rational>;
using FloatSeries = TruncatedSeries<double>;

// f(z) = sum_l p_l z^l with p_l = m_l / m; c_0 = 0.
ExactSeries series_from_lengths(const LengthMultiset& L, long long T);

// sum_{l=2..T} 2^(1-l) z^l, the expansion of z^2/(2-z).
ExactSeries geometric_series(long long T);

// Coefficients of 1/(1 - f) by the convolution recurrence
// u_0 = 1, u_j = sum_{l=1..j} f_l u_{j-l}. Requires c_0(f) = 0.
// The result order is min(T, order of f).
template <class C>
TruncatedSeries<C> renewal_coefficients(const TruncatedSeries<C>& f, long long T) {
    if (!(f[0] == C(0)))
        throw std::invalid_argument("renewal_coefficients: series must have zero constant term");
    const long long Tout = std::min(T, f.truncation_order());
    TruncatedSeries<C> u(Tout);
    u.set(0, C(1));
    for (long long j = 1; j <= Tout; ++j) {
        C acc(0);
        for (long long l = 1; l <= j; ++l) acc += f[l] * u[j - l];
        u.set(j, acc);
    }
    return u;
}

// Coefficients of (f(z^2) - f(z)^2) / (1 - f(z))^3. Requires c_0(f) = 0.
template <class C>
TruncatedSeries<C> correction_coefficients(const TruncatedSeries<C>& f, long long T) {
    if (!(f[0] == C(0)))
        throw std::invalid_argument("correction_coefficients: series must have zero constant term");
    const long long Tout = std::min(T, f.truncation_order());
    const TruncatedSeries<C> ftrunc = f.truncate(Tout);
    TruncatedSeries<C> fz2(Tout);
    for (long long j = 0; 2 * j <= Tout; ++j) fz2.set(2 * j, ftrunc[j]);
    const TruncatedSeries<C> numerator = fz2 - ftrunc * ftrunc;
    const TruncatedSeries<C> u = renewal_coefficients(ftrunc, Tout);  // 1/(1-f)
    return numerator * u * u * u;
}

struct LimitConstants {
    Rational u_infinity;       // 1/f'(1)
    Rational f_prime_1;        // n/m
    Rational f_double_prime_1; // sum l(l-1) p_l
    Rational correction;       // (f'(1) - f'(1)^2 + f''(1)) / f'(1)^3
};

LimitConstants limit_constants(const LengthMultiset& L);

// Least-squares slope of log|values[i]| against k = k_lo + i. Entries that
// are exactly zero are skipped.
double fit_log_decay_slope(const std::vector<double>& values, long long k_lo);

// JSON: {"truncation_order": T, "mode": "exact"|"float", "coefficients": [...]}
// with exact coefficients as "p/q" strings and float ones as numbers.
std::string series_to_json(const ExactSeries& s);
std::string series_to_json(const FloatSeries& s);
ExactSeries exact_series_from_json(const std::string& text);
FloatSeries float_series_from_json(const std::string& text);

}  // namespace cyclab
