#include "cyclab/series.hpp"

#include <json.hpp>

#include <cmath>

namespace cyclab {

using nlohmann::json;

ExactSeries series_from_lengths(const LengthMultiset& L, long long T) {
    if (L.empty()) throw std::invalid_argument("series_from_lengths: empty multiset");
    ExactSeries f(T);
    for (const auto& [len, mult] : L.entries()) {
        if (len <= T) f.set(len, Rational(mult, L.m()));
    }
    return f;
}

ExactSeries geometric_series(long long T) {
    ExactSeries g(T);
    for (long long l = 2; l <= T; ++l) g.set(l, Rational(BigInt(1), int_pow(2, l - 1)));
    return g;
}

LimitConstants limit_constants(const LengthMultiset& L) {
    if (L.empty()) throw std::invalid_argument("limit_constants: empty multiset");
    LimitConstants out;
    out.f_prime_1 = Rational(L.n(), L.m());
    Rational fpp(0);
    for (const auto& [len, mult] : L.entries())
        fpp += Rational(BigInt(len) * (len - 1) * mult, L.m());
    out.f_double_prime_1 = fpp;
    out.u_infinity = Rational(L.m(), L.n());
    const Rational& fp = out.f_prime_1;
    out.correction = (fp - fp * fp + fpp) / (fp * fp * fp);
    return out;
}

double fit_log_decay_slope(const std::vector<double>& values, long long k_lo) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long count = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        const double v = std::fabs(values[i]);
        if (v == 0.0) continue;
        const double x = static_cast<double>(k_lo + static_cast<long long>(i));
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) throw std::invalid_argument("fit_log_decay_slope: need >= 2 nonzero values");
    const double denom = count * sxx - sx * sx;
    return (count * sxy - sx * sy) / denom;
}

namespace {

template <class C>
json series_json_common(const TruncatedSeries<C>& s, const char* mode) {
    json j;
    j["truncation_order"] = s.truncation_order();
    j["mode"] = mode;
    return j;
}

}  // namespace

std::string series_to_json(const ExactSeries& s) {
    json j = series_json_common(s, "exact");
    json arr = json::array();
    for (const auto& c : s.coefficients()) arr.push_back(format_rational(c));
    j["coefficients"] = std::move(arr);
    return j.dump();
}

std::string series_to_json(const FloatSeries& s) {
    json j = series_json_common(s, "float");
    j["coefficients"] = s.coefficients();
    return j.dump();
}

ExactSeries exact_series_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("mode") != "exact") throw std::invalid_argument("expected exact-mode series");
    std::vector<Rational> c;
    for (const auto& item : j.at("coefficients")) c.push_back(parse_rational(item.get<std::string>()));
    ExactSeries s(std::move(c));
    if (s.truncation_order() != j.at("truncation_order").get<long long>())
        throw std::invalid_argument("series JSON: truncation order mismatch");
    return s;
}

FloatSeries float_series_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("mode") != "float") throw std::invalid_argument("expected float-mode series");
    std::vector<double> c = j.at("coefficients").get<std::vector<double>>();
    FloatSeries s(std::move(c));
    if (s.truncation_order() != j.at("truncation_order").get<long long>())
        throw std::invalid_argument("series JSON: truncation order mismatch");
    return s;
}

}  // namespace cyclab
