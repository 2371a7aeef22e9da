#pragma once

#include "cyclab/multigraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclab {

// Spine path of n/k vertices plus n/k vertex-disjoint k-vertex teeth;
// tooth i starts at (and includes) spine vertex i.
struct Comb {
    std::vector<long long> spine;
    std::vector<std::vector<long long>> teeth;
};

struct PathSearchResult {
    bool ok = false;
    std::vector<long long> path;
};

// Simple path with >= target_len vertices by randomized DFS extension with
// rotation moves; bounded restarts. Failure is an outcome, not an error.
PathSearchResult find_long_path(const Multigraph& g, long long target_len, uint64_t seed,
                                long long restarts = 24);

struct FactorSearchResult {
    bool ok = false;
    std::vector<std::vector<long long>> cycles;
};

// Randomized search for a spanning partition into k-cycles: grow a path with
// rotation moves, cut k-windows off its ends whenever the closing chord is
// present, and re-splice finished cycles to escape the sparse endgame.
// budget counts elementary vertex operations (0 picks a default). Every
// returned factor passes verify_cycle_factor.
FactorSearchResult cycle_factor_heuristic(const Multigraph& g, long long k, uint64_t seed,
                                          long long budget = 0);

bool verify_cycle_factor(const Multigraph& g, const std::vector<std::vector<long long>>& cycles,
                         long long k);

struct CombEmbedResult {
    bool ok = false;
    std::string stage;  // stage reached: "spine", "factor", "matching", "done"
    Comb comb;
};

// Pipeline: spine path on n/k vertices; (k-1)-cycle factor on the rest;
// maximum bipartite matching spine-vertex <-> cycle (Hopcroft-Karp); unravel
// each matched cycle at a neighbor of its spine vertex. All stages see the
// full edge set of g.
CombEmbedResult embed_comb(const Multigraph& g, long long n, long long k, uint64_t seed,
                           long long budget = 0);

bool verify_comb(const Multigraph& g, const Comb& comb, long long n, long long k);

// Maximum bipartite matching; returns left-side mates (-1 if unmatched).
std::vector<int> hopcroft_karp(int n_left, int n_right,
                               const std::vector<std::vector<int>>& adj_left);

std::string comb_to_json(const Comb& c);
Comb comb_from_json(const std::string& text);

}  // namespace cyclab
