#include "cyclab/series.hpp"

#include "cyclab/rng.hpp"

#include <doctest.h>

using namespace cyclab;

namespace {

LengthMultiset random_multiset(rng::Engine& eng, long long max_m, long long max_len) {
    LengthMultiset L;
    const long long m = 1 + rng::uniform_below(eng, max_m);
    for (long long i = 0; i < m; ++i) L.add(1 + rng::uniform_below(eng, max_len));
    return L;
}

}  // namespace

TEST_CASE("series_from_lengths basic coefficients") {
    const ExactSeries one = series_from_lengths(LengthMultiset({1}), 3);
    CHECK(one.truncation_order() == 3);
    CHECK(one[0] == 0);
    CHECK(one[1] == 1);
    CHECK(one[2] == 0);
    CHECK(one[3] == 0);

    const ExactSeries half = series_from_lengths(LengthMultiset({1, 2}), 2);
    CHECK(half[0] == 0);
    CHECK(half[1] == Rational(1, 2));
    CHECK(half[2] == Rational(1, 2));
}

TEST_CASE("geometric series matches the z^2/(2-z) expansion") {
    // 1/(2-z) = (1/2) * 1/(1 - z/2); build the right side from the renewal
    // inverse of z/2 and compare coefficientwise.
    const long long T = 10;
    ExactSeries zhalf(T);
    zhalf.set(1, Rational(1, 2));
    const ExactSeries inv = renewal_coefficients(zhalf, T);  // 1/(1 - z/2)
    ExactSeries z2(T);
    z2.set(2, Rational(1, 2));  // z^2 * (1/2)
    const ExactSeries expansion = z2 * inv;
    CHECK(expansion == geometric_series(T));
    for (long long l = 2; l <= T; ++l)
        CHECK(geometric_series(T)[l] == Rational(BigInt(1), int_pow(2, l - 1)));
}

TEST_CASE("renewal coefficients: identity and hand recurrence") {
    ExactSeries z(6);
    z.set(1, 1);
    const ExactSeries u = renewal_coefficients(z, 6);
    for (long long j = 0; j <= 6; ++j) CHECK(u[j] == 1);

    ExactSeries f(8);
    f.set(1, Rational(1, 2));
    f.set(2, Rational(1, 2));
    const ExactSeries v = renewal_coefficients(f, 8);
    CHECK(v[1] == Rational(1, 2));
    CHECK(v[2] == Rational(3, 4));
    CHECK(v[3] == Rational(5, 8));
}

TEST_CASE("renewal coefficients reject nonzero constant term") {
    ExactSeries bad(3);
    bad.set(0, Rational(1, 3));
    CHECK_THROWS_AS(renewal_coefficients(bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(correction_coefficients(bad, 3), std::invalid_argument);
}

TEST_CASE("renewal coefficients of the geometric law approach 1/3 geometrically") {
    const ExactSeries u = renewal_coefficients(geometric_series(60), 60);
    const Rational third(1, 3);
    // u_k -> u_infinity of the truncated law, which is within 2^-55 of 1/3
    CHECK(to_double(u[60] - third) < 1e-8);
    const double e40 = std::fabs(to_double(u[40] - third));
    const double e50 = std::fabs(to_double(u[50] - third));
    const double e58 = std::fabs(to_double(u[58] - third));
    CHECK(e50 < e40);
    CHECK(e58 < e50);
}

TEST_CASE("correction coefficients: deterministic lengths kill the variance term") {
    ExactSeries z(12);
    z.set(1, 1);
    const ExactSeries c = correction_coefficients(z, 12);
    for (long long j = 0; j <= 12; ++j) CHECK(c[j] == 0);
}

TEST_CASE("correction coefficients converge to the limit constant") {
    // The deviation halves per unit of k (rate 2^(-k/2)): 1.3e-5 at k=40,
    // under 1e-6 from k=48 on.
    const ExactSeries cg = correction_coefficients(geometric_series(60), 60);
    CHECK(std::fabs(to_double(cg[40] - Rational(2, 27))) < 1e-4);
    CHECK(std::fabs(to_double(cg[48] - Rational(2, 27))) < 1e-6);
    CHECK(std::fabs(to_double(cg[60] - Rational(2, 27))) < 1e-7);

    // f = (z + z^2)/2: limit (f' - f'^2 + f'')/f'^3 = (1/4)/(27/8) = 2/27
    const LengthMultiset L({1, 2});
    const LimitConstants lc = limit_constants(L);
    CHECK(lc.f_prime_1 == Rational(3, 2));
    CHECK(lc.f_double_prime_1 == 1);
    CHECK(lc.correction == Rational(2, 27));
    const ExactSeries cf = correction_coefficients(series_from_lengths(L, 60), 60);
    CHECK(std::fabs(to_double(cf[60] - Rational(2, 27))) < 1e-6);
}

TEST_CASE("limit constants") {
    const LimitConstants ones = limit_constants(LengthMultiset({1, 1, 1}));
    CHECK(ones.f_prime_1 == 1);
    CHECK(ones.u_infinity == 1);
    CHECK(ones.correction == 0);

    const LimitConstants geo = limit_constants(LengthMultiset::geometric(30));
    CHECK(std::fabs(to_double(geo.u_infinity) - 1.0 / 3.0) < 1e-7);
    CHECK(std::fabs(to_double(geo.correction) - 2.0 / 27.0) < 1e-6);
    CHECK(geo.u_infinity * geo.f_prime_1 == 1);
}

TEST_CASE("series arithmetic: truncation rule, commutativity, associativity") {
    rng::Engine eng = rng::make_engine(42);
    for (int rep = 0; rep < 20; ++rep) {
        const auto rand_series = [&](long long T) {
            ExactSeries s(T);
            for (long long j = 0; j <= T; ++j)
                s.set(j, Rational(static_cast<long long>(rng::uniform_below(eng, 19)) - 9,
                                  1 + rng::uniform_below(eng, 6)));
            return s;
        };
        const ExactSeries a = rand_series(8), b = rand_series(11), c = rand_series(9);
        CHECK((a * b).truncation_order() == 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("(1 - f) * renewal(f) == 1 exactly up to truncation") {
    rng::Engine eng = rng::make_engine(7);
    for (int rep = 0; rep < 12; ++rep) {
        const LengthMultiset L = random_multiset(eng, 10, 6);
        const long long T = 24;
        const ExactSeries f = series_from_lengths(L, T);
        ExactSeries one_minus_f(T);
        one_minus_f.set(0, 1);
        for (long long j = 1; j <= T; ++j) one_minus_f.set(j, -f[j]);
        const ExactSeries prod = one_minus_f * renewal_coefficients(f, T);
        CHECK(prod[0] == 1);
        for (long long j = 1; j <= T; ++j) CHECK(prod[j] == 0);
    }
}

TEST_CASE("renewal decay: fitted slope is negative for gcd-1 multisets") {
    rng::Engine eng = rng::make_engine(99);
    int tested = 0;
    while (tested < 8) {
        LengthMultiset L = random_multiset(eng, 12, 8);
        L.add(1);  // force gcd 1
        const long long T = 200;
        const ExactSeries u = renewal_coefficients(series_from_lengths(L, T), T);
        const Rational u_inf = limit_constants(L).u_infinity;
        std::vector<double> errs;
        bool all_zero = true;
        for (long long j = T / 2; j <= T; ++j) {
            errs.push_back(to_double(u[j] - u_inf));
            all_zero &= errs.back() == 0.0;
        }
        if (all_zero) continue;  // converged below double precision; skip fit
        CHECK(fit_log_decay_slope(errs, T / 2) < 0.0);
        ++tested;
    }
}

TEST_CASE("float mode carries the large-truncation regime") {
    const long long T = 2500;
    FloatSeries g(T);
    for (long long l = 2; l <= T; ++l) g.set(l, std::pow(2.0, 1.0 - static_cast<double>(l)));
    const FloatSeries u = renewal_coefficients(g, T);
    CHECK(std::fabs(u[T] - 1.0 / 3.0) < 1e-9);
    const FloatSeries corr = correction_coefficients(g, 200);
    CHECK(std::fabs(corr[200] - 2.0 / 27.0) < 1e-9);
}

TEST_CASE("JSON round trip, exact and float") {
    const ExactSeries f = series_from_lengths(LengthMultiset({1, 2, 2, 5}), 9);
    const ExactSeries back = exact_series_from_json(series_to_json(f));
    CHECK(back == f);

    FloatSeries g(4);
    g.set(2, 0.25);
    g.set(4, -1.5);
    const FloatSeries gback = float_series_from_json(series_to_json(g));
    CHECK(gback == g);

    CHECK_THROWS(exact_series_from_json(series_to_json(g)));
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(1, 2)) == "1/2");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(-3, 9)) == "-1/3");
    CHECK(parse_rational("17/27") == Rational(17, 27));
    CHECK(parse_rational("-5") == Rational(-5));
}
