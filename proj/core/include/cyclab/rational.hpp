#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cyclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);

// M(j) = (j-1)!!, the number of perfect matchings on j points. M(0) = 1.
// Throws for odd or negative j.
BigInt matchings(long long j);

// C(n, k) for n >= 0; zero when k < 0 or k > n. The caller owns any
// C(-1,-1) := 1 boundary convention.
BigInt binomial(long long n, long long k);

// Falling factorial (x)_k = x (x-1) ... (x-k+1).
BigInt falling_factorial(long long x, long long k);

BigInt int_pow(const BigInt& base, long long e);

double to_double(const Rational& r);
double to_double(const BigInt& i);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace cyclab
