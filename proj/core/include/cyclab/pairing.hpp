#pragma once

#include "cyclab/multigraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cyclab {

// Configuration-model pairing: a perfect matching on the d*n points
// {0, ..., d*n - 1}; point p belongs to vertex p / d.
struct Pairing {
    long long n = 0;
    int d = 3;
    std::vector<long long> partner;  // involution without fixed points

    bool valid() const;
};

// Uniform over the (dn-1)!! pairings (point shuffle + sequential pair-off).
Pairing sample_pairing(long long n, int d, uint64_t seed);

Multigraph project(const Pairing& p);

// Rejection until the projection is simple. nullopt after max_rejections.
std::optional<Multigraph> sample_simple_regular(long long n, int d, uint64_t seed,
                                                long long max_rejections = 1000000);

struct CycleCensus {
    int L_max = 0;
    std::vector<long long> counts;  // counts[i] = X_i for 1 <= i <= L_max; counts[0] unused

    long long X(int i) const { return counts.at(i); }
};

// Exact counts: X_1 = loops, X_2 = unordered pairs of parallel edges
// (C(mult, 2) per vertex pair), X_i (3 <= i <= L_max <= 12) = i-cycles on
// distinct vertices counted once, weighted by edge-multiplicity products.
CycleCensus cycle_census(const Multigraph& g, int L_max);

// Union of a uniform k-cycle factor (uniform permutation cut into blocks)
// and a uniform perfect matching, rejected until simple. Requires k | n,
// k >= 3, n even.
std::optional<Multigraph> sample_superposition(long long n, long long k, uint64_t seed,
                                               long long max_rejections = 1000000);

// Same union without the simplicity conditioning (loops cannot occur; multi
// edges can). The census diagnostic reports both conditionings.
Multigraph sample_superposition_raw(long long n, long long k, uint64_t seed);

// Erdos-Renyi G(n, p) via geometric edge skipping.
Multigraph sample_gnp(long long n, double p, uint64_t seed);

// Exhaustive enumeration of all perfect matchings on `points` points
// (visit receives the partner array). Used by the exact-moment oracles.
void for_each_pairing(long long points, const std::function<void(const std::vector<long long>&)>& visit);

}  // namespace cyclab
