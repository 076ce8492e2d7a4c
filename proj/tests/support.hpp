#pragma once

#include <random>
#include <vector>

#include "jk/field.hpp"
#include "jk/partition.hpp"

namespace jk::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240607);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 5) {
  long den = uniform(1, bound);
  return make_rational(uniform(-bound, bound), den);
}

inline Rational random_nonzero_rational(long bound = 5) {
  Rational q;
  do q = random_rational(bound);
  while (q == 0);
  return q;
}

// Small random polynomial in the given variables.
inline MultiPoly random_poly(std::initializer_list<Var> vars, int max_terms = 3, unsigned max_deg = 2) {
  std::vector<Term> terms;
  int n = static_cast<int>(uniform(1, max_terms));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (Var v : vars) m = m * Monomial::of(v, static_cast<unsigned>(uniform(0, max_deg)));
    terms.push_back({m, random_rational(4)});
  }
  return MultiPoly::from_terms(std::move(terms));
}

inline FieldElem random_field(std::initializer_list<Var> vars = {Var::alpha, Var::beta}) {
  MultiPoly den;
  do den = random_poly(vars, 2, 1);
  while (den.is_zero());
  return FieldElem::fraction(random_poly(vars), den);
}

inline FieldElem random_nonzero_field(std::initializer_list<Var> vars = {Var::alpha, Var::beta}) {
  FieldElem f;
  do f = random_field(vars);
  while (f.is_zero());
  return f;
}

inline Partition random_partition(int n) {
  std::vector<int> parts;
  while (n > 0) {
    int p = static_cast<int>(uniform(1, n));
    parts.push_back(p);
    n -= p;
  }
  return Partition::from_unsorted(parts);
}

inline const FieldElem& alpha() {
  static const FieldElem a = FieldElem::variable(Var::alpha);
  return a;
}

inline const FieldElem& beta() {
  static const FieldElem b = FieldElem::variable(Var::beta);
  return b;
}

}  // namespace jk::testing
