#include "cyclab/multigraph.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclab {

void Multigraph::add_edge(long long u, long long v, long long mult) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Multigraph::add_edge: vertex out of range");
    if (mult < 1) throw std::invalid_argument("Multigraph::add_edge: multiplicity must be >= 1");
    if (u > v) std::swap(u, v);
    edges_[{u, v}] += mult;
}

long long Multigraph::multiplicity(long long u, long long v) const {
    if (u > v) std::swap(u, v);
    const auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

long long Multigraph::degree(long long v) const {
    long long d = 0;
    for (const auto& [e, mult] : edges_) {
        if (e.first == v) d += mult;
        if (e.second == v) d += mult;  // loops count twice via both branches
    }
    return d;
}

bool Multigraph::is_regular(long long d) const {
    std::vector<long long> deg(n_, 0);
    for (const auto& [e, mult] : edges_) {
        deg[e.first] += mult;
        deg[e.second] += mult;
    }
    for (long long v = 0; v < n_; ++v)
        if (deg[v] != d) return false;
    return true;
}

bool Multigraph::is_simple() const {
    for (const auto& [e, mult] : edges_)
        if (e.first == e.second || mult > 1) return false;
    return true;
}

long long Multigraph::edge_count() const {
    long long total = 0;
    for (const auto& [e, mult] : edges_) total += mult;
    return total;
}

std::vector<std::vector<std::pair<long long, long long>>> Multigraph::adjacency() const {
    std::vector<std::vector<std::pair<long long, long long>>> adj(n_);
    for (const auto& [e, mult] : edges_) {
        adj[e.first].push_back({e.second, mult});
        if (e.first != e.second) adj[e.second].push_back({e.first, mult});
    }
    return adj;
}

std::string Multigraph::to_edge_list() const {
    long long d = n_ > 0 ? degree(0) : 0;
    if (!is_regular(d)) d = -1;
    std::ostringstream out;
    out << "# n=" << n_ << " d=" << d << "\n";
    for (const auto& [e, mult] : edges_) out << e.first << " " << e.second << " " << mult << "\n";
    return out.str();
}

Multigraph Multigraph::from_edge_list(std::istream& in) {
    std::string line;
    long long n = -1;
    Multigraph g;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto npos = line.find("n=");
            if (npos == std::string::npos) continue;
            n = std::stoll(line.substr(npos + 2));
            g = Multigraph(n);
            continue;
        }
        if (n < 0) throw std::invalid_argument("edge list: missing '# n=<n> d=<d>' header");
        std::istringstream ls(line);
        long long u, v, mult = 1;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: bad line: " + line);
        ls >> mult;
        g.add_edge(u, v, mult);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    return g;
}

Multigraph Multigraph::from_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

Multigraph Multigraph::complete(long long n) {
    Multigraph g(n);
    for (long long u = 0; u < n; ++u)
        for (long long v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph Multigraph::complete_bipartite(long long a, long long b) {
    Multigraph g(a + b);
    for (long long u = 0; u < a; ++u)
        for (long long v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Multigraph Multigraph::cycle(long long n) {
    Multigraph g(n);
    for (long long v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Multigraph Multigraph::petersen() {
    Multigraph g(10);
    for (long long v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

}  // namespace cyclab
