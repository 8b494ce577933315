// Exact rational arithmetic over GMP. Everything in this library computes
// with these; no floating point is ever stored or compared.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slowreal {

using Integer = mpz_class;

// Always lowest terms, denominator > 0 (gmp keeps mpq_class canonical as
// long as inputs are canonical; helpers below canonicalize on construction).
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// 2^k for k possibly negative.
Rational pow2(long k);

// 3^k, k >= 0.
Rational pow3(unsigned long k);

// a/b with the fixed 0-denominator convention used across the library.
inline Rational div_or_zero(const Rational& a, const Rational& b) {
    return b == 0 ? Rational(0) : Rational(a / b);
}

Rational rat_abs(const Rational& q);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);
Rational clamp(const Rational& q, const Rational& lo, const Rational& hi);

// Smallest integer >= q and largest integer <= q.
Integer rat_ceil(const Rational& q);
Integer rat_floor(const Rational& q);

// Parses "p/q", "p", or "-p/q" (whitespace-free) into an exact rational.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// "p/q" with q > 0 and gcd(p,q)=1; integers render without the "/1".
std::string format_rational(const Rational& q);

// Fixed 12-digit truncated decimal rendering, display only. The value is
// truncated toward zero, never rounded, so the exact fields stay primary.
std::string decimal_truncate(const Rational& q, int digits = 12);

}  // namespace slowreal
