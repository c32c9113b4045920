#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eom {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Renders as "num/den", always with an explicit denominator ("1/1", "0/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer; the result is reduced.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Ascending factorial n(n+1)...(n+k-1) and falling factorial n(n-1)...(n-k+1).
BigInt rising_factorial(unsigned n, unsigned k);
BigInt falling_factorial(unsigned n, unsigned k);

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace eom
