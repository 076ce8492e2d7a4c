#pragma once

#include <string>
#include <string_view>

#include "jk/multipoly.hpp"

namespace jk {

// Element of Q(alpha, beta, zeta, eta) kept as num/den in lowest terms with a
// monic denominator (leading coefficient 1 in graded-lex order).
class FieldElem {
 public:
  FieldElem() : den_(1) {}
  FieldElem(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElem(int c) : num_(static_cast<long>(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElem(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den is zero.
  static FieldElem fraction(MultiPoly num, MultiPoly den);
  static FieldElem variable(Var v) { return FieldElem(MultiPoly::variable(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  // Total number of terms in numerator and denominator; a pivoting cost.
  std::size_t size() const { return num_.size() + den_.size(); }

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  // Throws std::domain_error on division by zero.
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y);
  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }
  FieldElem& operator/=(const FieldElem& y) { return *this = *this / y; }
  FieldElem inverse() const;
  FieldElem pow(int k) const;

  friend bool operator==(const FieldElem& x, const FieldElem& y);

  // Canonical text "num / den": integer coefficients in both with joint
  // content 1 and den leading coefficient positive. Zero is "0 / 1".
  std::string to_text() const;
  static FieldElem parse(std::string_view text);
  std::string pretty() const;

 private:
  FieldElem(MultiPoly num, MultiPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  static FieldElem multiply_reduced(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                                    const MultiPoly& d);
  MultiPoly num_;
  MultiPoly den_;
};

// Substitute values for the four variables.
template <class S>
S evaluate(const FieldElem& f, const std::array<S, kVarCount>& values) {
  return evaluate(f.num(), values) / evaluate(f.den(), values);
}

// Helpers that let generic elimination code clear denominators row by row.
inline Rational denominator_of(const Rational& x) { return Rational(x.get_den()); }
FieldElem denominator_of(const FieldElem& x);
// Least common multiple of two integers, resp. two polynomials.
Rational lcm_of(const Rational& x, const Rational& y);
FieldElem lcm_of(const FieldElem& x, const FieldElem& y);
inline std::size_t scalar_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t scalar_size(const FieldElem& x) { return x.size(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline std::string to_text(const Rational& x) { return x.get_str(); }
inline std::string to_text(const FieldElem& x) { return x.to_text(); }

}  // namespace jk
