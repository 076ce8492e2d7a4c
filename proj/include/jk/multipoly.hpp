#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jk/rational.hpp"

namespace jk {

// Indeterminates of the coefficient ring. Text names are a, b, z, e.
enum class Var : std::uint8_t { alpha = 0, beta = 1, zeta = 2, eta = 3 };
inline constexpr int kVarCount = 4;

char var_name(Var v);

// Exponent vector packed 16 bits per variable, alpha in the high bits, so that
// comparing packed words is lexicographic with alpha > beta > zeta > eta.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((packed_ >> shift(v)) & 0xffffu);
  }
  unsigned exponent(int v) const { return exponent(static_cast<Var>(v)); }
  unsigned total_degree() const;
  bool is_one() const { return packed_ == 0; }
  std::uint64_t packed() const { return packed_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial with_exponent(Var v, unsigned e) const;
  static Monomial min(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

 private:
  static int shift(Var v) { return 48 - 16 * static_cast<int>(v); }
  std::uint64_t packed_ = 0;
};

// Graded-lex comparison: true when a comes before b (a is larger).
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial over Q in alpha, beta, zeta, eta. Terms are kept sorted in
// descending graded-lex order with nonzero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Monomial& m, const Rational& c = 1);
  // Terms may be unsorted or repeated; they are combined.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool has_var(Var v) const { return degree(v) > 0; }
  // Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  // Positive rational c with this/c having coprime integer coefficients.
  Rational content() const;
  bool has_integer_coefficients() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned k) const;

  bool operator==(const MultiPoly& o) const;

  // Coefficient of v^k, as a polynomial free of v.
  MultiPoly coefficient_of(Var v, unsigned k) const;

  // Canonical text: "2*a^1*b^3 - 1/2*e^2"; zero is "0".
  std::string to_text() const;
  static MultiPoly parse(std::string_view text);
  // Compact form for display: "a^2 + 2*a*b - 1/2*e".
  std::string pretty() const;

 private:
  std::vector<Term> terms_;
};

// Exact quotient p/d, or nullopt if d does not divide p. d must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

// Greatest common divisor, normalized to leading coefficient 1; gcd(0,0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Evaluate with each variable replaced by an element of a commutative ring S
// that is constructible from Rational.
template <class S>
S evaluate(const MultiPoly& p, const std::array<S, kVarCount>& values) {
  std::array<std::vector<S>, kVarCount> powers;
  for (int v = 0; v < kVarCount; ++v) powers[v].push_back(S(1));
  S acc(0);
  for (const Term& t : p.terms()) {
    S term(t.coef);
    for (int v = 0; v < kVarCount; ++v) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * values[v]);
      term = term * powers[v][e];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace jk
