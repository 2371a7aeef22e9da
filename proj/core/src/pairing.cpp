#include "cyclab/pairing.hpp"

#include "cyclab/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclab {

bool Pairing::valid() const {
    const long long points = static_cast<long long>(partner.size());
    if (points != n * d) return false;
    for (long long p = 0; p < points; ++p) {
        if (partner[p] < 0 || partner[p] >= points) return false;
        if (partner[p] == p || partner[partner[p]] != p) return false;
    }
    return true;
}

Pairing sample_pairing(long long n, int d, uint64_t seed) {
    const long long points = n * d;
    if (points % 2 != 0) throw std::invalid_argument("sample_pairing: d*n must be even");
    Pairing out;
    out.n = n;
    out.d = d;
    out.partner.assign(points, -1);
    std::vector<long long> order(points);
    std::iota(order.begin(), order.end(), 0);
    rng::Engine eng = rng::make_engine(seed);
    rng::shuffle(order, eng);
    for (long long i = 0; i < points; i += 2) {
        out.partner[order[i]] = order[i + 1];
        out.partner[order[i + 1]] = order[i];
    }
    return out;
}

Multigraph project(const Pairing& p) {
    Multigraph g(p.n);
    const long long points = static_cast<long long>(p.partner.size());
    for (long long q = 0; q < points; ++q) {
        if (p.partner[q] > q) g.add_edge(q / p.d, p.partner[q] / p.d);
    }
    return g;
}

std::optional<Multigraph> sample_simple_regular(long long n, int d, uint64_t seed,
                                                long long max_rejections) {
    for (long long attempt = 0; attempt <= max_rejections; ++attempt) {
        Multigraph g = project(sample_pairing(n, d, rng::mix(seed, attempt)));
        if (g.is_simple()) return g;
    }
    return std::nullopt;
}

namespace {

// Cycles through >= 3 distinct vertices, each counted once: rooted at their
// smallest vertex, oriented by second vertex < last vertex. Weight of a
// cycle is the product of its edge multiplicities.
struct CensusDfs {
    const std::vector<std::vector<std::pair<long long, long long>>>& adj;
    std::vector<char>& on_path;
    std::vector<long long>& counts;
    long long s = 0;
    int L_max = 0;
    long long second = -1;

    void run(long long v, int depth, long long weight) {
        for (const auto& [w, mult] : adj[v]) {
            if (w == s) {
                if (depth >= 3 && second < v) counts[depth] += weight * mult;
                continue;
            }
            if (w < s || on_path[w] || depth >= L_max) continue;
            on_path[w] = 1;
            if (depth == 1) second = w;
            run(w, depth + 1, weight * mult);
            on_path[w] = 0;
        }
    }
};

}  // namespace

CycleCensus cycle_census(const Multigraph& g, int L_max) {
    if (L_max < 1 || L_max > 12)
        throw std::invalid_argument("cycle_census: L_max must be in [1, 12]");
    CycleCensus out;
    out.L_max = L_max;
    out.counts.assign(L_max + 1, 0);
    for (const auto& [e, mult] : g.edges()) {
        if (e.first == e.second) out.counts[1] += mult;
        else if (L_max >= 2 && mult >= 2) out.counts[2] += mult * (mult - 1) / 2;
    }
    if (L_max < 3) return out;
    const auto adj = g.adjacency();
    std::vector<char> on_path(g.n(), 0);
    for (long long s = 0; s < g.n(); ++s) {
        on_path[s] = 1;
        CensusDfs dfs{adj, on_path, out.counts, s, L_max};
        dfs.run(s, 1, 1);
        on_path[s] = 0;
    }
    return out;
}

Multigraph sample_superposition_raw(long long n, long long k, uint64_t seed) {
    if (k < 3 || n % k != 0) throw std::invalid_argument("sample_superposition: need k >= 3, k | n");
    if (n % 2 != 0) throw std::invalid_argument("sample_superposition: n must be even");
    rng::Engine eng = rng::make_engine(seed);
    std::vector<long long> factor_perm(n), matching_perm(n);
    std::iota(factor_perm.begin(), factor_perm.end(), 0);
    std::iota(matching_perm.begin(), matching_perm.end(), 0);
    rng::shuffle(factor_perm, eng);
    rng::shuffle(matching_perm, eng);
    Multigraph g(n);
    for (long long b = 0; b < n; b += k) {
        for (long long i = 0; i < k; ++i)
            g.add_edge(factor_perm[b + i], factor_perm[b + (i + 1) % k]);
    }
    for (long long i = 0; i < n; i += 2) g.add_edge(matching_perm[i], matching_perm[i + 1]);
    return g;
}

std::optional<Multigraph> sample_superposition(long long n, long long k, uint64_t seed,
                                               long long max_rejections) {
    for (long long attempt = 0; attempt <= max_rejections; ++attempt) {
        Multigraph g = sample_superposition_raw(n, k, rng::mix(seed, attempt));
        if (g.is_simple()) return g;
    }
    return std::nullopt;
}

Multigraph sample_gnp(long long n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p must be in [0, 1]");
    Multigraph g(n);
    if (n < 2 || p == 0.0) return g;
    if (p == 1.0) return Multigraph::complete(n);
    rng::Engine eng = rng::make_engine(seed);
    const double log1mp = std::log1p(-p);
    const long long total = n * (n - 1) / 2;
    long long idx = -1;
    // decode running pair index into (u, v) with a moving row pointer
    long long row = 0, row_start = 0, row_len = n - 1;
    for (;;) {
        const double u01 = 1.0 - rng::uniform01(eng);  // (0, 1]
        const long long gap = static_cast<long long>(std::floor(std::log(u01) / log1mp));
        idx += 1 + gap;
        if (idx >= total) break;
        while (idx >= row_start + row_len) {
            row_start += row_len;
            ++row;
            row_len = n - 1 - row;
        }
        const long long col = row + 1 + (idx - row_start);
        g.add_edge(row, col);
    }
    return g;
}

namespace {

void pairings_rec(std::vector<long long>& partner, long long from,
                  const std::function<void(const std::vector<long long>&)>& visit) {
    const long long points = static_cast<long long>(partner.size());
    long long i = from;
    while (i < points && partner[i] >= 0) ++i;
    if (i == points) {
        visit(partner);
        return;
    }
    for (long long j = i + 1; j < points; ++j) {
        if (partner[j] >= 0) continue;
        partner[i] = j;
        partner[j] = i;
        pairings_rec(partner, i + 1, visit);
        partner[i] = -1;
        partner[j] = -1;
    }
}

}  // namespace

void for_each_pairing(long long points,
                      const std::function<void(const std::vector<long long>&)>& visit) {
    if (points % 2 != 0) throw std::invalid_argument("for_each_pairing: odd point count");
    std::vector<long long> partner(points, -1);
    pairings_rec(partner, 0, visit);
}

}  // namespace cyclab
