#include "cyclab/factors.hpp"

#include "cyclab/pairing.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/rng.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyclab {

namespace {

// Shared search core: perfect matchings over edge instances of a cubic
// multigraph, each leaf filtered by the cycle lengths of the complement.
// Working at instance level makes the multiplicity weighting automatic:
// a vertex-level matching on an edge of multiplicity mu is reached mu ways.
struct CfCounter {
    long long n = 0, k = 0;
    std::vector<int> iu, iv;                  // instance endpoints
    std::vector<std::array<int, 3>> inc;      // vertex -> incident instance ids
    std::vector<int> vmatch;                  // vertex -> matched instance id, -1 if free
    std::vector<std::array<int, 2>> free_at;  // complement slots, rebuilt per leaf
    std::vector<char> seen;
    BigInt count = 0;
    bool stop_at_first = false;
    bool found = false;

    void reset(long long n_, long long k_) {
        n = n_;
        k = k_;
        iu.clear();
        iv.clear();
        inc.assign(n, {-1, -1, -1});
        vmatch.assign(n, -1);
        free_at.assign(n, {-1, -1});
        seen.assign(n, 0);
        count = 0;
        found = false;
    }

    void add_instance(int u, int v) {
        const int id = static_cast<int>(iu.size());
        iu.push_back(u);
        iv.push_back(v);
        attach(u, id);
        attach(v, id);
    }

    void attach(int v, int id) {
        for (int s = 0; s < 3; ++s) {
            if (inc[v][s] < 0) {
                inc[v][s] = id;
                return;
            }
        }
        throw std::invalid_argument("count_cycle_factors: graph is not 3-regular");
    }

    bool ready() const {
        for (long long v = 0; v < n; ++v)
            if (inc[v][2] < 0) return false;
        return true;
    }

    bool complement_all_k() {
        for (long long v = 0; v < n; ++v) {
            int a = -1, b = -1;
            for (int s = 0; s < 3; ++s) {
                const int e = inc[v][s];
                if (e == vmatch[v]) continue;
                (a < 0 ? a : b) = e;
            }
            free_at[v] = {a, b};
            seen[v] = 0;
        }
        for (long long v0 = 0; v0 < n; ++v0) {
            if (seen[v0]) continue;
            if (free_at[v0][0] == free_at[v0][1]) return false;  // loop component, length 1
            long long len = 0;
            long long cur = v0;
            int via = free_at[v0][0];
            do {
                seen[cur] = 1;
                ++len;
                cur = (iu[via] == cur) ? iv[via] : iu[via];
                via = (free_at[cur][0] == via) ? free_at[cur][1] : free_at[cur][0];
            } while (cur != v0);
            if (len != k) return false;
        }
        return true;
    }

    void search(long long from) {
        if (stop_at_first && found) return;
        long long v = from;
        while (v < n && vmatch[v] >= 0) ++v;
        if (v == n) {
            if (complement_all_k()) {
                ++count;
                found = true;
            }
            return;
        }
        for (int s = 0; s < 3; ++s) {
            const int e = inc[v][s];
            const long long other = (iu[e] == v) ? iv[e] : iu[e];
            if (other == v || vmatch[other] >= 0) continue;
            vmatch[v] = e;
            vmatch[other] = e;
            search(v + 1);
            vmatch[v] = -1;
            vmatch[other] = -1;
            if (stop_at_first && found) return;
        }
    }

    void load_multigraph(const Multigraph& g) {
        reset(g.n(), k);
        for (const auto& [e, mult] : g.edges())
            for (long long c = 0; c < mult; ++c)
                add_instance(static_cast<int>(e.first), static_cast<int>(e.second));
        if (!ready()) throw std::invalid_argument("count_cycle_factors: graph is not 3-regular");
    }

    void load_pairing(const std::vector<long long>& partner, long long n_) {
        reset(n_, k);
        for (size_t p = 0; p < partner.size(); ++p) {
            if (partner[p] > static_cast<long long>(p))
                add_instance(static_cast<int>(p / 3), static_cast<int>(partner[p] / 3));
        }
    }
};

BigInt run_counter(CfCounter& c, long long k, bool stop_at_first) {
    if (k < 3) throw std::invalid_argument("count_cycle_factors: k must be >= 3");
    if (c.n % k != 0) return 0;
    c.k = k;
    c.stop_at_first = stop_at_first;
    c.search(0);
    return c.count;
}

}  // namespace

BigInt count_cycle_factors(const Multigraph& g, long long k) {
    CfCounter c;
    c.k = k;
    c.load_multigraph(g);
    return run_counter(c, k, false);
}

bool has_cycle_factor(const Multigraph& g, long long k) {
    CfCounter c;
    c.k = k;
    c.load_multigraph(g);
    run_counter(c, k, true);
    return c.found;
}

BigInt rod_rescale(long long n, long long k) {
    if (k < 1 || n % k != 0) throw std::invalid_argument("rod_rescale: k must divide n");
    return factorial(n / k) * int_pow(2 * k, n / k);
}

BigInt count_rod(const Multigraph& g, long long k) {
    const BigInt cf = count_cycle_factors(g, k);
    if (cf == 0) return 0;
    return cf * rod_rescale(g.n(), k);
}

MomentReport expected_moments(long long n, long long k) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("expected_moments: n must be even, >= 2");
    if (k < 3 || n % k != 0) throw std::invalid_argument("expected_moments: need k >= 3 and k | n");
    MomentReport r;
    r.n = n;
    r.k = k;
    r.exact_E_Y = Rational(factorial(n) * int_pow(6, n) * matchings(n), matchings(3 * n));
    r.exact_E_cf = r.exact_E_Y / Rational(rod_rescale(n, k));
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    const double log43 = std::log(4.0 / 3.0);
    r.log_asym_E_Y = 0.5 * std::log(2.0 * std::numbers::pi * nd) + 0.5 * nd * log43;
    r.log_asym_E_cf = 0.5 * std::log(kd) + (nd / kd) * (1.0 + 0.5 * kd * log43 - std::log(2.0 * nd));
    r.asym_E_Y = std::exp(r.log_asym_E_Y);
    r.asym_E_cf = std::exp(r.log_asym_E_cf);
    return r;
}

double threshold_kappa0() { return 1.0 / (1.0 - 0.5 * std::log2(3.0)); }

double threshold_K0(double n) {
    if (n < 2) throw std::invalid_argument("threshold_K0: n must be >= 2");
    return threshold_kappa0() * std::log2(2.0 * n / std::numbers::e);
}

namespace {

struct CfSums {
    BigInt sum;
    BigInt sum_sq;
    CfSums& operator+=(const CfSums& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        return *this;
    }
};

}  // namespace

McMean mc_mean_cf(long long n, long long k, long long samples, uint64_t seed, int threads,
                  long long n_guard) {
    if (n > n_guard)
        throw std::invalid_argument("mc_mean_cf: n exceeds the counting budget guard");
    if (k < 3) throw std::invalid_argument("mc_mean_cf: k must be >= 3");
    if (samples < 2) throw std::invalid_argument("mc_mean_cf: need samples >= 2");
    const CfSums totals = parallel_accumulate<CfSums>(samples, threads, [&](long long s) {
        const Pairing p = sample_pairing(n, 3, rng::mix(seed, static_cast<uint64_t>(s)));
        CfCounter c;
        c.load_pairing(p.partner, n);
        const BigInt cf = run_counter(c, k, false);
        return CfSums{cf, cf * cf};
    });
    McMean out;
    out.samples = samples;
    const double mean = to_double(Rational(totals.sum, samples));
    const double mean_sq = to_double(Rational(totals.sum_sq, samples));
    const double var = std::max(0.0, (mean_sq - mean * mean) * samples / (samples - 1.0));
    out.mean = mean;
    out.std_error = std::sqrt(var / static_cast<double>(samples));
    return out;
}

PairingMomentSums enumerate_pairing_moments(long long n, long long k) {
    if (n > 6) throw std::invalid_argument("enumerate_pairing_moments: n must be <= 6");
    PairingMomentSums out;
    out.pairings = matchings(3 * n);
    CfCounter c;
    for_each_pairing(3 * n, [&](const std::vector<long long>& partner) {
        c.load_pairing(partner, n);
        const BigInt cf = run_counter(c, k, false);
        out.sum_cf += cf;
        out.sum_cf_sq += cf * cf;
    });
    return out;
}

}  // namespace cyclab
