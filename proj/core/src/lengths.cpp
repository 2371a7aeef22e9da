#include "cyclab/lengths.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclab {

LengthMultiset LengthMultiset::from_entries(const std::map<long long, long long>& entries) {
    LengthMultiset out;
    for (const auto& [len, mult] : entries) out.add(len, mult);
    return out;
}

LengthMultiset::LengthMultiset(const std::vector<long long>& lengths) {
    for (long long len : lengths) add(len);
}

LengthMultiset LengthMultiset::from_spec(const std::string& spec) {
    LengthMultiset out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.add(std::stoll(item));
        } else {
            out.add(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        }
    }
    if (out.empty()) throw std::invalid_argument("LengthMultiset: empty spec");
    return out;
}

LengthMultiset LengthMultiset::geometric(int depth) {
    if (depth < 2) throw std::invalid_argument("geometric: depth must be >= 2");
    LengthMultiset out;
    for (int l = 2; l <= depth; ++l) out.add(l, 1LL << (depth - l));
    return out;
}

LengthMultiset LengthMultiset::geometric_like(long long m) {
    if (m < 2) throw std::invalid_argument("geometric_like: m must be >= 2");
    LengthMultiset out;
    long long remaining = m;
    for (long long l = 2; remaining > 0; ++l) {
        long long c = std::llround(static_cast<double>(m) * std::pow(2.0, 1.0 - static_cast<double>(l)));
        if (c < 1) c = 1;
        if (c > remaining) c = remaining;
        out.add(l, c);
        remaining -= c;
    }
    return out;
}

void LengthMultiset::add(long long length, long long multiplicity) {
    if (length < 1) throw std::invalid_argument("LengthMultiset: lengths must be positive");
    if (multiplicity < 1) throw std::invalid_argument("LengthMultiset: multiplicities must be positive");
    entries_[length] += multiplicity;
    m_ += multiplicity;
    n_ += length * multiplicity;
}

long long LengthMultiset::multiplicity(long long length) const {
    const auto it = entries_.find(length);
    return it == entries_.end() ? 0 : it->second;
}

long long LengthMultiset::max_length() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

long long LengthMultiset::gcd_lengths() const {
    long long g = 0;
    for (const auto& [len, mult] : entries_) g = std::gcd(g, len);
    return g;
}

Rational LengthMultiset::p(long long length) const {
    if (m_ == 0) throw std::logic_error("LengthMultiset: empty");
    return Rational(multiplicity(length), m_);
}

LengthMultiset LengthMultiset::minus_one(long long length) const {
    if (multiplicity(length) == 0) throw std::invalid_argument("minus_one: length not present");
    LengthMultiset out;
    for (const auto& [len, mult] : entries_) {
        const long long m2 = (len == length) ? mult - 1 : mult;
        if (m2 > 0) out.add(len, m2);
    }
    return out;
}

std::vector<long long> LengthMultiset::expand() const {
    std::vector<long long> out;
    out.reserve(m_);
    for (const auto& [len, mult] : entries_)
        for (long long i = 0; i < mult; ++i) out.push_back(len);
    return out;
}

std::string LengthMultiset::to_spec() const {
    std::string out;
    for (const auto& [len, mult] : entries_) {
        if (!out.empty()) out += ",";
        out += std::to_string(len) + ":" + std::to_string(mult);
    }
    return out;
}

}  // namespace cyclab
