#include "cyclab/factors.hpp"

#include "cyclab/pairing.hpp"
#include "cyclab/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cyclab;

TEST_CASE("cycle factor counts on fixed graphs") {
    CHECK(count_cycle_factors(Multigraph::complete(4), 4) == 3);
    CHECK(count_cycle_factors(Multigraph::complete(4), 3) == 0);  // 3 does not divide 4
    CHECK(count_cycle_factors(Multigraph::complete_bipartite(3, 3), 6) == 6);
    CHECK(count_rod(Multigraph::complete(4), 4) == 24);
    CHECK(count_rod(Multigraph::complete_bipartite(3, 3), 6) == 72);
}

TEST_CASE("Petersen: six 5-cycle factors, no Hamilton cycle") {
    // Each of the 6 perfect matchings leaves two disjoint 5-cycles.
    const Multigraph pet = Multigraph::petersen();
    CHECK(count_cycle_factors(pet, 5) == 6);
    CHECK(has_cycle_factor(pet, 5));
    CHECK(count_cycle_factors(pet, 10) == 0);
    CHECK_FALSE(has_cycle_factor(pet, 10));
}

TEST_CASE("has_cycle_factor agrees with the count") {
    rng::Engine eng = rng::make_engine(9);
    for (int rep = 0; rep < 10; ++rep) {
        const auto g = sample_simple_regular(10, 3, rng::mix(50, rep));
        REQUIRE(g.has_value());
        CHECK(has_cycle_factor(*g, 5) == (count_cycle_factors(*g, 5) > 0));
        CHECK(has_cycle_factor(*g, 10) == (count_cycle_factors(*g, 10) > 0));
    }
}

TEST_CASE("loops force the count to zero") {
    Multigraph g(4);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3, 2);
    REQUIRE(g.is_regular(3));
    CHECK(count_cycle_factors(g, 4) == 0);
}

TEST_CASE("parallel edges weight the count") {
    // support is the 4-cycle 0-1-3-2; doubled opposite edges give weight 4
    Multigraph g(4);
    g.add_edge(0, 1, 2);
    g.add_edge(2, 3, 2);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    REQUIRE(g.is_regular(3));
    CHECK(count_cycle_factors(g, 4) == 4);
}

TEST_CASE("matching-complement count equals the naive cycle-packing backtracker") {
    CHECK(testing::CyclePackCounter(Multigraph::petersen(), 5).count() == 6);
    CHECK(testing::CyclePackCounter(Multigraph::complete(4), 4).count() == 3);
    rng::Engine eng = rng::make_engine(3);
    for (long long n : {6LL, 8LL, 10LL}) {
        for (int rep = 0; rep < 40; ++rep) {
            const Multigraph g = project(sample_pairing(n, 3, rng::mix(1000 + n, rep)));
            for (long long k = 3; k <= n; ++k) {
                if (n % k != 0) continue;
                CHECK(count_cycle_factors(g, k) == testing::CyclePackCounter(g, k).count());
            }
        }
    }
}

TEST_CASE("non-cubic input is rejected") {
    CHECK_THROWS_AS(count_cycle_factors(Multigraph::complete(5), 5), std::invalid_argument);
    CHECK_THROWS_AS(count_cycle_factors(Multigraph::cycle(6), 3), std::invalid_argument);
}

TEST_CASE("exact first moment formula and its exhaustive oracle at n=4") {
    const MomentReport r = expected_moments(4, 4);
    CHECK(r.exact_E_Y == Rational(93312, 10395));
    CHECK(r.exact_E_cf == Rational(93312, 10395 * 8));

    BigInt sum_cf = 0;
    for_each_pairing(12, [&](const std::vector<long long>& partner) {
        Pairing p;
        p.n = 4;
        p.d = 3;
        p.partner = partner;
        sum_cf += count_cycle_factors(project(p), 4);
    });
    CHECK(Rational(sum_cf * rod_rescale(4, 4), matchings(12)) == r.exact_E_Y);
}

TEST_CASE("asymptotic first moment is within 1% at n=4") {
    const MomentReport r = expected_moments(4, 4);
    const double exact = to_double(r.exact_E_Y);
    CHECK(std::fabs(r.asym_E_Y - exact) / exact < 0.01);
}

TEST_CASE("rod rescale identity on sampled graphs") {
    for (int rep = 0; rep < 5; ++rep) {
        const Multigraph g = project(sample_pairing(12, 3, rng::mix(8, rep)));
        CHECK(count_rod(g, 4) == count_cycle_factors(g, 4) * rod_rescale(12, 4));
        CHECK(count_rod(g, 12) == count_cycle_factors(g, 12) * rod_rescale(12, 12));
    }
}

TEST_CASE("threshold constant and identity") {
    CHECK(std::fabs(threshold_kappa0() - 4.8188) < 1e-4);
    for (double n : {10.0, 1e3, 1e6}) {
        const double lhs = threshold_K0(n);
        const double rhs = 2.0 * std::log(2.0 * n / std::numbers::e) / std::log(4.0 / 3.0);
        CHECK(std::fabs(lhs - rhs) < 1e-12 * std::max(1.0, lhs));
    }
    double prev = 0;
    for (double n : {2.0, 5.0, 10.0, 100.0, 1e4, 1e8}) {
        CHECK(threshold_K0(n) > prev);
        prev = threshold_K0(n);
    }
}

TEST_CASE("asymptotic E[cf] crosses 1 at the threshold") {
    // K0(1200) ~ 47.2; divisors 40 (below) and 48 (above)
    CHECK(expected_moments(1200, 40).log_asym_E_cf < 0.0);
    CHECK(expected_moments(1200, 48).log_asym_E_cf > 0.0);
    // far below threshold the formula vanishes
    CHECK(expected_moments(1200, 10).log_asym_E_cf < -100.0);
}

TEST_CASE("mc_mean_cf agrees with the exact mean at n=4") {
    const McMean mc = mc_mean_cf(4, 4, 2000, 21);
    const double exact = to_double(expected_moments(4, 4).exact_E_cf);
    CHECK(std::fabs(mc.mean - exact) < 5 * mc.std_error);
}

TEST_CASE("mc_mean_cf guards") {
    CHECK_THROWS_AS(mc_mean_cf(4, 2, 100, 1), std::invalid_argument);   // k < 3
    CHECK_THROWS_AS(mc_mean_cf(80, 4, 100, 1), std::invalid_argument);  // budget guard
}

TEST_CASE("mc_mean_cf independent of thread count") {
    const McMean a = mc_mean_cf(8, 4, 500, 77, 1);
    const McMean b = mc_mean_cf(8, 4, 500, 77, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("expected_moments input guards") {
    CHECK_THROWS_AS(expected_moments(4, 3), std::invalid_argument);  // k must divide n
    CHECK_THROWS_AS(expected_moments(5, 5), std::invalid_argument);  // odd n
    CHECK_THROWS_AS(expected_moments(8, 2), std::invalid_argument);  // k >= 3
}
