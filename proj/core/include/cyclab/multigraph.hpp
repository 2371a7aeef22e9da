#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cyclab {

// Undirected multigraph on vertices 0..n-1. Edges keyed (u, v) with u <= v;
// loops are (v, v). A loop contributes 2 to its vertex degree.
class Multigraph {
  public:
    Multigraph() = default;
    explicit Multigraph(long long n) : n_(n) {}

    long long n() const { return n_; }
    void add_edge(long long u, long long v, long long mult = 1);
    long long multiplicity(long long u, long long v) const;
    long long degree(long long v) const;
    bool is_regular(long long d) const;
    bool is_simple() const;
    long long edge_count() const;  // sum of multiplicities
    const std::map<std::pair<long long, long long>, long long>& edges() const { return edges_; }

    // v -> list of (neighbor, multiplicity); loops appear once with their
    // stored multiplicity.
    std::vector<std::vector<std::pair<long long, long long>>> adjacency() const;

    // Text format: header "# n=<n> d=<d>" then one "u v multiplicity" line
    // per edge (0-indexed). d is the common degree, or -1 if irregular.
    std::string to_edge_list() const;
    static Multigraph from_edge_list(std::istream& in);
    static Multigraph from_edge_list_string(const std::string& text);

    static Multigraph complete(long long n);
    static Multigraph complete_bipartite(long long a, long long b);
    static Multigraph cycle(long long n);
    static Multigraph petersen();

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    long long n_ = 0;
    std::map<std::pair<long long, long long>, long long> edges_;
};

}  // namespace cyclab
