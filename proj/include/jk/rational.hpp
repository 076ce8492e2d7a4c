#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jk {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

// Generalized binomial x(x-1)...(x-k+1)/k! for any ring that can be scaled by
// a Rational.
template <class S>
S binomial_poly(const S& x, int k) {
  S acc(1);
  Integer denom = 1;
  for (int i = 0; i < k; ++i) {
    acc = acc * (x - S(i));
    denom *= i + 1;
  }
  return acc * S(Rational(1) / Rational(denom));
}

}  // namespace jk
