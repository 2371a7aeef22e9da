#include "cyclab/comb.hpp"

#include "cyclab/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cyclab {

namespace {

struct BitAdj {
    long long n = 0;
    size_t words = 0;
    std::vector<uint64_t> bits;
    std::vector<std::vector<int>> nbrs;

    explicit BitAdj(const Multigraph& g) : n(g.n()), words((g.n() + 63) / 64) {
        bits.assign(static_cast<size_t>(n) * words, 0);
        nbrs.assign(n, {});
        for (const auto& [e, mult] : g.edges()) {
            if (e.first == e.second) continue;
            set(e.first, e.second);
            set(e.second, e.first);
            nbrs[e.first].push_back(static_cast<int>(e.second));
            nbrs[e.second].push_back(static_cast<int>(e.first));
        }
    }
    void set(long long u, long long v) { bits[u * words + v / 64] |= 1ULL << (v % 64); }
    bool adj(long long u, long long v) const {
        return bits[u * words + v / 64] >> (v % 64) & 1;
    }
};

// Path + finished-cycle state for the factor search. All moves keep `pos`,
// `where` and the budget meter consistent.
//
// Move balance: cutting a k-window off the path end needs one chord, hit
// with probability ~ edge density per fresh head, so rotations (which give
// fresh heads cheaply) are the workhorse. Splicing a finished cycle back in
// undoes progress and is gated two ways: a cooldown right after a splice
// (otherwise the very next cut re-forms the same cycle off the path end)
// and a cut-drought trigger so splices fire only when the rotation orbit is
// exhausted.
struct FactorSearch {
    const BitAdj& G;
    long long k;
    rng::Engine& eng;
    long long budget;

    // where[v]: -2 excluded, -1 pool, 0 on path, >=1 on cycle (id-1)
    std::vector<int> where;
    std::vector<int> pos;  // index within path when where[v] == 0
    std::vector<int> path;
    std::vector<std::vector<int>> cycles;
    long long pool_count = 0;
    long long cooldown = 0;
    long long since_cut = 0;
    long long drought = 250;

    FactorSearch(const BitAdj& g, long long k_, rng::Engine& e, long long b)
        : G(g), k(k_), eng(e), budget(b), where(g.n, -2), pos(g.n, -1) {}

    bool spend(long long cost) {
        budget -= cost;
        return budget > 0;
    }

    void push_back_path(int v) {
        pos[v] = static_cast<int>(path.size());
        path.push_back(v);
        where[v] = 0;
    }

    void reverse_segment(size_t lo, size_t hi) {  // inclusive
        spend(static_cast<long long>(hi - lo + 1));
        while (lo < hi) {
            std::swap(path[lo], path[hi]);
            pos[path[lo]] = static_cast<int>(lo);
            pos[path[hi]] = static_cast<int>(hi);
            ++lo;
            --hi;
        }
    }

    bool require_chord = true;  // false partitions into k-vertex paths instead

    bool try_cut_suffix() {
        if (cooldown > 0) return false;
        const size_t L = path.size();
        if (static_cast<long long>(L) < k) return false;
        if (require_chord && !G.adj(path[L - k], path[L - 1])) return false;
        std::vector<int> cyc(path.end() - k, path.end());
        path.resize(L - k);
        cycles.push_back(std::move(cyc));
        const int id = static_cast<int>(cycles.size());
        for (int v : cycles.back()) {
            where[v] = id;
            pos[v] = -1;
        }
        spend(k);
        since_cut = 0;
        return true;
    }

    bool try_extend() {
        if (pool_count == 0 || path.empty()) return false;
        const int h = path.back();
        int candidate = -1;
        int seen = 0;
        spend(static_cast<long long>(G.nbrs[h].size()));
        for (int u : G.nbrs[h]) {
            if (where[u] != -1) continue;
            ++seen;
            if (rng::uniform_below(eng, seen) == 0) candidate = u;
        }
        if (candidate < 0) return false;
        push_back_path(candidate);
        --pool_count;
        return true;
    }

    void splice_cycle(int cycle_id, int u) {
        std::vector<int>& cyc = cycles[cycle_id - 1];
        const size_t len = cyc.size();
        size_t iu = 0;
        while (cyc[iu] != u) ++iu;
        const bool forward = rng::uniform_below(eng, 2) == 0;
        for (size_t s = 0; s < len; ++s) {
            const size_t idx = forward ? (iu + s) % len : (iu + len - s) % len;
            push_back_path(cyc[idx]);
        }
        spend(static_cast<long long>(len));
        // swap-pop the dissolved cycle, renumbering the one moved into its slot
        const int last_id = static_cast<int>(cycles.size());
        if (cycle_id != last_id) {
            cycles[cycle_id - 1] = std::move(cycles.back());
            for (int v : cycles[cycle_id - 1]) where[v] = cycle_id;
        }
        cycles.pop_back();
        cooldown = 4 + static_cast<long long>(rng::uniform_below(eng, 9));
        since_cut = 0;
    }

    // One rotation or splice step from the head; false if the head is bare.
    // Rotations are strongly preferred: splicing a finished cycle back into
    // the path undoes progress and is only needed to escape states whose
    // rotation orbit has no closing chord.
    bool mix_at_head() {
        const int h = path.back();
        const size_t L = path.size();
        spend(static_cast<long long>(G.nbrs[h].size()));
        int n_rot = 0, n_splice = 0;
        int rot_j = -1, splice_u = -1;
        for (int u : G.nbrs[h]) {
            if (where[u] == 0) {
                const int j = pos[u];
                if (j >= 0 && j + 2 < static_cast<int>(L)) {
                    ++n_rot;
                    if (rng::uniform_below(eng, n_rot) == 0) rot_j = j;
                }
            } else if (where[u] >= 1) {
                ++n_splice;
                if (rng::uniform_below(eng, n_splice) == 0) splice_u = u;
            }
        }
        const bool force_splice = n_splice > 0 && (n_rot == 0 || since_cut > drought);
        if (force_splice) {
            splice_cycle(where[splice_u], splice_u);
            return true;
        }
        if (rot_j >= 0) {
            reverse_segment(rot_j + 1, L - 1);
            return true;
        }
        return false;
    }

    void dissolve_path_to_pool() {
        for (int v : path) {
            where[v] = -1;
            pos[v] = -1;
        }
        pool_count += static_cast<long long>(path.size());
        path.clear();
    }

    bool start_path_from_pool() {
        if (pool_count == 0) return false;
        // reservoir-pick a pool vertex
        int candidate = -1, seen = 0;
        for (long long v = 0; v < G.n; ++v) {
            if (where[v] != -1) continue;
            ++seen;
            if (rng::uniform_below(eng, seen) == 0) candidate = static_cast<int>(v);
        }
        spend(G.n);
        push_back_path(candidate);
        --pool_count;
        return true;
    }

    bool run(const std::vector<long long>& vertices) {
        for (long long v : vertices) where[v] = -1;
        pool_count = static_cast<long long>(vertices.size());
        if (pool_count % k != 0) return false;
        long long degree_sum = 0;
        for (long long v : vertices) degree_sum += static_cast<long long>(G.nbrs[v].size());
        if (degree_sum == 0) return false;
        // ~5 expected cut opportunities between splices
        drought = std::max<long long>(250, 5 * G.n * pool_count / degree_sum);
        if (!start_path_from_pool()) return pool_count == 0;
        long long stalls = 0;
        while (budget > 0) {
            if (cooldown > 0) --cooldown;
            ++since_cut;
            if (path.empty()) {
                if (pool_count == 0) return true;
                start_path_from_pool();
                continue;
            }
            if (try_cut_suffix()) continue;
            if (try_extend()) continue;
            if (mix_at_head()) continue;
            // head is bare: try the other end, then a local restart
            reverse_segment(0, path.size() - 1);
            if (try_cut_suffix() || try_extend() || mix_at_head()) continue;
            dissolve_path_to_pool();
            if (!start_path_from_pool()) return pool_count == 0;
            if (++stalls > 64) return false;
        }
        return false;
    }
};

std::vector<std::vector<long long>> to_longs(const std::vector<std::vector<int>>& cycles) {
    std::vector<std::vector<long long>> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.emplace_back(c.begin(), c.end());
    return out;
}

// k = 2 is allowed here (adjacent pairs), which the comb pipeline needs for
// teeth of three vertices; the public heuristic keeps the k >= 3 contract.
// With require_chord = false the same search partitions into k-vertex paths
// (every window closes for free), which the comb pipeline uses as a
// fallback when the remainder has no cycle factor at all.
FactorSearchResult factor_on_subset(const BitAdj& G, const std::vector<long long>& vertices,
                                    long long k, uint64_t seed, long long budget,
                                    bool require_chord = true) {
    FactorSearchResult out;
    if (k < 2) throw std::invalid_argument("cycle_factor_heuristic: k must be >= 2");
    if (vertices.empty() || static_cast<long long>(vertices.size()) % k != 0) return out;
    if (budget <= 0) budget = std::max<long long>(4'000'000, 20000 * G.n);
    const int attempts = 8;
    for (int a = 0; a < attempts; ++a) {
        rng::Engine eng = rng::make_engine(seed, static_cast<uint64_t>(a) + 1000);
        FactorSearch search(G, k, eng, budget / attempts + 1);
        search.require_chord = require_chord;
        if (search.run(vertices)) {
            out.ok = true;
            out.cycles = to_longs(search.cycles);
            return out;
        }
    }
    return out;
}

}  // namespace

PathSearchResult find_long_path(const Multigraph& g, long long target_len, uint64_t seed,
                                long long restarts) {
    PathSearchResult out;
    if (target_len < 1 || target_len > g.n()) return out;
    const BitAdj G(g);
    for (long long attempt = 0; attempt < std::max<long long>(restarts, 1); ++attempt) {
        rng::Engine eng = rng::make_engine(seed, static_cast<uint64_t>(attempt));
        std::vector<int> path, pos(G.n, -1);
        const int start = static_cast<int>(rng::uniform_below(eng, G.n));
        path.push_back(start);
        pos[start] = 0;
        long long moves = 12 * G.n + 64;
        while (static_cast<long long>(path.size()) < target_len && moves-- > 0) {
            const int h = path.back();
            int ext = -1, seen_ext = 0, rot = -1, seen_rot = 0;
            for (int u : G.nbrs[h]) {
                if (pos[u] < 0) {
                    ++seen_ext;
                    if (rng::uniform_below(eng, seen_ext) == 0) ext = u;
                } else if (pos[u] + 2 < static_cast<int>(path.size())) {
                    ++seen_rot;
                    if (rng::uniform_below(eng, seen_rot) == 0) rot = pos[u];
                }
            }
            if (ext >= 0) {
                pos[ext] = static_cast<int>(path.size());
                path.push_back(ext);
                continue;
            }
            if (rot >= 0) {
                size_t lo = rot + 1, hi = path.size() - 1;
                while (lo < hi) {
                    std::swap(path[lo], path[hi]);
                    pos[path[lo]] = static_cast<int>(lo);
                    pos[path[hi]] = static_cast<int>(hi);
                    ++lo;
                    --hi;
                }
                continue;
            }
            std::reverse(path.begin(), path.end());
            for (size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
        }
        if (static_cast<long long>(path.size()) >= target_len) {
            out.ok = true;
            out.path.assign(path.begin(), path.end());
            return out;
        }
    }
    return out;
}

FactorSearchResult cycle_factor_heuristic(const Multigraph& g, long long k, uint64_t seed,
                                          long long budget) {
    if (k < 3) throw std::invalid_argument("cycle_factor_heuristic: k must be >= 3");
    const BitAdj G(g);
    std::vector<long long> all(g.n());
    for (long long v = 0; v < g.n(); ++v) all[v] = v;
    FactorSearchResult r = factor_on_subset(G, all, k, seed, budget);
    if (r.ok && !verify_cycle_factor(g, r.cycles, k))
        throw std::logic_error("cycle_factor_heuristic: produced an invalid factor");
    return r;
}

bool verify_cycle_factor(const Multigraph& g, const std::vector<std::vector<long long>>& cycles,
                         long long k) {
    std::vector<char> used(g.n(), 0);
    long long covered = 0;
    for (const auto& c : cycles) {
        if (static_cast<long long>(c.size()) != k) return false;
        for (size_t i = 0; i < c.size(); ++i) {
            const long long v = c[i];
            if (v < 0 || v >= g.n() || used[v]) return false;
            used[v] = 1;
            ++covered;
            if (g.multiplicity(v, c[(i + 1) % c.size()]) < 1) return false;
        }
    }
    return covered == g.n();
}

namespace {

// Matches spine vertices to factor pieces and unravels teeth. In cycle mode
// a tooth may attach at any cycle vertex; in path mode only at an endpoint.
bool teeth_from_pieces(const BitAdj& G, const std::vector<long long>& spine,
                       const std::vector<std::vector<long long>>& pieces, bool cycle_mode,
                       long long k, Comb& out) {
    const int nl = static_cast<int>(spine.size());
    std::vector<std::vector<int>> adj(nl);
    for (int i = 0; i < nl; ++i) {
        for (size_t j = 0; j < pieces.size(); ++j) {
            const auto& piece = pieces[j];
            bool hit = false;
            if (cycle_mode) {
                for (long long w : piece) {
                    if (G.adj(spine[i], w)) {
                        hit = true;
                        break;
                    }
                }
            } else {
                hit = G.adj(spine[i], piece.front()) || G.adj(spine[i], piece.back());
            }
            if (hit) adj[i].push_back(static_cast<int>(j));
        }
    }
    const std::vector<int> mate = hopcroft_karp(nl, static_cast<int>(pieces.size()), adj);
    for (int i = 0; i < nl; ++i)
        if (mate[i] < 0) return false;
    out.spine = spine;
    out.teeth.clear();
    for (int i = 0; i < nl; ++i) {
        const std::vector<long long>& piece = pieces[mate[i]];
        std::vector<long long> tooth;
        tooth.reserve(k);
        tooth.push_back(spine[i]);
        if (cycle_mode) {
            size_t iw = 0;
            while (!G.adj(spine[i], piece[iw])) ++iw;
            for (size_t s = 0; s < piece.size(); ++s)
                tooth.push_back(piece[(iw + s) % piece.size()]);
        } else if (G.adj(spine[i], piece.front())) {
            tooth.insert(tooth.end(), piece.begin(), piece.end());
        } else {
            tooth.insert(tooth.end(), piece.rbegin(), piece.rend());
        }
        out.teeth.push_back(std::move(tooth));
    }
    return true;
}

}  // namespace

CombEmbedResult embed_comb(const Multigraph& g, long long n, long long k, uint64_t seed,
                           long long budget) {
    CombEmbedResult out;
    if (g.n() != n || k < 3 || n % k != 0)
        throw std::invalid_argument("embed_comb: need g on n vertices, k >= 3, k | n");
    const long long spine_len = n / k;
    const BitAdj G(g);

    out.stage = "spine";
    const auto stage_rank = [](const std::string& s) {
        return s == "spine" ? 0 : s == "factor" ? 1 : s == "matching" ? 2 : 3;
    };
    const auto bump_stage = [&](const char* s) {
        if (stage_rank(s) > stage_rank(out.stage)) out.stage = s;
    };

    for (uint64_t attempt = 0; attempt < 6; ++attempt) {
        const PathSearchResult spine_path =
            find_long_path(g, spine_len, rng::mix(seed, 11 + 100 * attempt));
        if (!spine_path.ok) continue;
        const std::vector<long long> spine(spine_path.path.begin(),
                                           spine_path.path.begin() + spine_len);
        bump_stage("factor");
        std::vector<char> on_spine(n, 0);
        for (long long v : spine) on_spine[v] = 1;
        std::vector<long long> rest;
        rest.reserve(n - spine_len);
        for (long long v = 0; v < n; ++v)
            if (!on_spine[v]) rest.push_back(v);

        // cycle mode first (teeth can attach anywhere on a cycle), then the
        // path-factor fallback for hosts whose remainder has no cycle factor
        for (const bool cycle_mode : {true, false}) {
            const FactorSearchResult factor =
                factor_on_subset(G, rest, k - 1, rng::mix(seed, 22 + 100 * attempt + !cycle_mode),
                                 budget, /*require_chord=*/cycle_mode);
            if (!factor.ok) continue;
            bump_stage("matching");
            if (teeth_from_pieces(G, spine, factor.cycles, cycle_mode, k, out.comb)) {
                out.stage = "done";
                out.ok = true;
                return out;
            }
        }
    }
    return out;
}

bool verify_comb(const Multigraph& g, const Comb& comb, long long n, long long k) {
    if (n % k != 0) return false;
    const long long spine_len = n / k;
    if (static_cast<long long>(comb.spine.size()) != spine_len) return false;
    if (static_cast<long long>(comb.teeth.size()) != spine_len) return false;
    std::vector<char> used(n, 0);
    long long covered = 0;
    for (long long i = 0; i + 1 < spine_len; ++i)
        if (g.multiplicity(comb.spine[i], comb.spine[i + 1]) < 1) return false;
    for (long long i = 0; i < spine_len; ++i) {
        const auto& tooth = comb.teeth[i];
        if (static_cast<long long>(tooth.size()) != k) return false;
        if (tooth[0] != comb.spine[i]) return false;
        for (size_t j = 0; j < tooth.size(); ++j) {
            const long long v = tooth[j];
            if (v < 0 || v >= n || used[v]) return false;
            used[v] = 1;
            ++covered;
            if (j + 1 < tooth.size() && g.multiplicity(v, tooth[j + 1]) < 1) return false;
        }
    }
    return covered == n;
}

std::vector<int> hopcroft_karp(int n_left, int n_right,
                               const std::vector<std::vector<int>>& adj_left) {
    constexpr int kInf = 1 << 30;
    std::vector<int> mate_l(n_left, -1), mate_r(n_right, -1), dist(n_left, kInf);
    const auto bfs = [&]() -> bool {
        std::queue<int> q;
        for (int u = 0; u < n_left; ++u) {
            if (mate_l[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool reachable = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj_left[u]) {
                const int w = mate_r[v];
                if (w < 0) {
                    reachable = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    };
    std::function<bool(int)> dfs = [&](int u) -> bool {
        for (int v : adj_left[u]) {
            const int w = mate_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                mate_l[u] = v;
                mate_r[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };
    while (bfs()) {
        for (int u = 0; u < n_left; ++u)
            if (mate_l[u] < 0) dfs(u);
    }
    return mate_l;
}

std::string comb_to_json(const Comb& c) {
    nlohmann::json j;
    j["spine"] = c.spine;
    j["teeth"] = c.teeth;
    return j.dump();
}

Comb comb_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Comb c;
    c.spine = j.at("spine").get<std::vector<long long>>();
    c.teeth = j.at("teeth").get<std::vector<std::vector<long long>>>();
    return c;
}

}  // namespace cyclab
