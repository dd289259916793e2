#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fppq {

// All arithmetic in this library is exact. Integers are arbitrary precision,
// rationals are always stored in lowest terms with positive denominator
// (cpp_rational maintains that canonical form).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// a/b with sign normalisation; the (num, den) constructor rejects b < 0.
inline Rational frac(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("frac: zero denominator");
    return Rational(a) / Rational(b);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// cpp_int division truncates toward zero, so fix up negatives by hand.
inline BigInt rational_floor(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline BigInt rational_ceil(const Rational& q) { return -rational_floor(-q); }

// representative of q modulo k in [0, k), k > 0
inline Rational mod_interval(const Rational& q, const BigInt& k) {
    Rational r = q - Rational(k) * Rational(rational_floor(q / Rational(k)));
    return r;
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline long long floor_div(long long a, long long b) {
    long long t = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --t;
    return t;
}

// extended Euclid; m >= 2, gcd(a, m) must be 1
inline long long mod_inverse(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return ((t0 % m) + m) % m;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace fppq
