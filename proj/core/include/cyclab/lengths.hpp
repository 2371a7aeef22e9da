#pragma once

#include "cyclab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cyclab {

// A multiset X = {x_1, ..., x_m} of positive integer lengths with sum n,
// stored as length -> multiplicity. Relative frequencies p_l = m_l / m.
class LengthMultiset {
  public:
    LengthMultiset() = default;
    explicit LengthMultiset(const std::vector<long long>& lengths);
    static LengthMultiset from_entries(const std::map<long long, long long>& entries);

    // Parses "2:5,3:4" (length:multiplicity pairs).
    static LengthMultiset from_spec(const std::string& spec);

    // {l -> 2^(depth-l) : l = 2..depth}; m = 2^(depth-1) - 1. The discrete
    // stand-in for the geometric law p_l ~ 2^(1-l).
    static LengthMultiset geometric(int depth);

    // Multiplicities round m * 2^(1-l) down the tail until m entries exist;
    // every member sums its lengths near 3m.
    static LengthMultiset geometric_like(long long m);

    void add(long long length, long long multiplicity = 1);

    long long m() const { return m_; }
    long long n() const { return n_; }
    bool empty() const { return m_ == 0; }
    const std::map<long long, long long>& entries() const { return entries_; }
    long long multiplicity(long long length) const;
    long long max_length() const;
    long long gcd_lengths() const;

    Rational p(long long length) const;  // m_l / m

    LengthMultiset minus_one(long long length) const;

    // All m lengths as a flat vector.
    std::vector<long long> expand() const;

    std::string to_spec() const;

    bool operator==(const LengthMultiset& o) const { return entries_ == o.entries_; }
    bool operator<(const LengthMultiset& o) const { return entries_ < o.entries_; }

  private:
    std::map<long long, long long> entries_;
    long long m_ = 0;
    long long n_ = 0;
};

}  // namespace cyclab
