#include "cyclab/rational.hpp"

#include <stdexcept>

namespace cyclab {

BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt matchings(long long j) {
    if (j < 0 || j % 2 != 0) throw std::invalid_argument("matchings: j must be even and nonnegative");
    BigInt r = 1;
    for (long long i = j - 1; i >= 1; i -= 2) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt falling_factorial(long long x, long long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) r *= (x - i);
    return r;
}

BigInt int_pow(const BigInt& base, long long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const BigInt& i) { return i.convert_to<double>(); }

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

}  // namespace cyclab
