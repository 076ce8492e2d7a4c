#include <doctest.h>

#include "jk/linsolve.hpp"
#include "jk/series.hpp"
#include "support.hpp"

using namespace jk;
using jk::testing::alpha;
using jk::testing::beta;

namespace {

FieldElem P(const char* text) { return FieldElem::parse(text); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial_poly(Rational(-3), 2) == 6);
}

TEST_CASE("normalization examples") {
  auto a = MultiPoly::variable(Var::alpha), b = MultiPoly::variable(Var::beta);
  CHECK(FieldElem::fraction(a * a * Rational(2), a * Rational(2)).to_text() == "1*a^1 / 1");
  CHECK(FieldElem::fraction(a * a - b * b, a + b).to_text() == "1*a^1 - 1*b^1 / 1");
  CHECK(FieldElem::fraction(MultiPoly(), a).to_text() == "0 / 1");
  CHECK_THROWS_AS(FieldElem::fraction(a, MultiPoly()), std::domain_error);
  // Common factor found only by the multivariate gcd.
  MultiPoly g = a * b + MultiPoly(1), x = a + b * b, y = a * a - b;
  FieldElem f = FieldElem::fraction(g * x, g * y);
  CHECK(f.num().size() == 2);
  CHECK(f == FieldElem::fraction(x, y));
}

TEST_CASE("text form round-trips") {
  for (int i = 0; i < 200; ++i) {
    FieldElem f = testing::random_field({Var::alpha, Var::beta, Var::zeta, Var::eta});
    CHECK(FieldElem::parse(f.to_text()) == f);
    CHECK(FieldElem::parse(f.to_text()).to_text() == f.to_text());
  }
  CHECK(P("1/2*a^2 - 3*b").to_text() == "1*a^2 - 6*b^1 / 2");
  CHECK_THROWS_AS(MultiPoly::parse("2*q"), std::invalid_argument);
}

TEST_CASE("normalize is invariant under scaling") {
  for (int i = 0; i < 100; ++i) {
    MultiPoly n = testing::random_poly({Var::alpha, Var::beta}), d;
    do d = testing::random_poly({Var::alpha, Var::beta});
    while (d.is_zero());
    MultiPoly c;
    do c = testing::random_poly({Var::alpha, Var::beta});
    while (c.is_zero());
    FieldElem x = FieldElem::fraction(n, d), y = FieldElem::fraction(n * c, d * c);
    CHECK(x.to_text() == y.to_text());
  }
}

TEST_CASE("field axioms on random triples") {
  for (int i = 0; i < 1000; ++i) {
    FieldElem x = testing::random_field(), y = testing::random_field(), z = testing::random_field();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == FieldElem());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("gcd of products recovers the common factor") {
  for (int i = 0; i < 60; ++i) {
    MultiPoly g = testing::random_poly({Var::alpha, Var::beta, Var::zeta}, 3, 2);
    MultiPoly x = testing::random_poly({Var::alpha, Var::beta, Var::zeta}, 3, 2);
    MultiPoly y = testing::random_poly({Var::alpha, Var::beta, Var::zeta}, 3, 2);
    if (g.is_zero() || x.is_zero() || y.is_zero()) continue;
    MultiPoly d = gcd(g * x, g * y);
    CHECK(divide_exact(d, gcd(g, g)).has_value());
    CHECK(divide_exact(g * x, d).has_value());
    CHECK(divide_exact(g * y, d).has_value());
    CHECK(d.total_degree() >= g.total_degree());
  }
}

TEST_CASE("series reciprocal") {
  TruncSeries<Rational> s(5);
  s[0] = 1;
  s[1] = 1;
  auto r = s.reciprocal();
  for (int k = 0; k <= 5; ++k) CHECK(r[k] == Rational(k % 2 ? -1 : 1));
  CHECK(TruncSeries<Rational>::one(4).reciprocal()[0] == 1);
  TruncSeries<Rational> z(3);
  CHECK_THROWS_AS(z.reciprocal(), std::domain_error);
  for (int i = 0; i < 50; ++i) {
    TruncSeries<FieldElem> f(6);
    for (int k = 0; k <= 6; ++k) f[k] = testing::random_field();
    if (f[0].is_zero()) f[0] = FieldElem(1);
    auto back = f.reciprocal().reciprocal();
    for (int k = 0; k <= 6; ++k) CHECK(back[k] == f[k]);
    auto one = f * f.reciprocal();
    CHECK(one[0] == FieldElem(1));
    for (int k = 1; k <= 6; ++k) CHECK(one[k].is_zero());
  }
}

TEST_CASE("compositional inverse") {
  // t -> t
  TruncSeries<Rational> id(std::vector<Rational>{1, 0, 0, 0, 0}, 1);
  auto g = id.compositional_inverse();
  CHECK(g[0] == 1);
  for (int k = 1; k <= 4; ++k) CHECK(g[k] == 0);
  // t/(1-t) -> t/(1+t)
  TruncSeries<Rational> s(std::vector<Rational>{1, 1, 1, 1, 1, 1}, 1);
  auto inv = s.compositional_inverse();
  for (int k = 0; k <= 5; ++k) CHECK(inv[k] == Rational(k % 2 ? -1 : 1));
  TruncSeries<Rational> bad(std::vector<Rational>{2, 1}, 1);
  CHECK_THROWS_AS(bad.compositional_inverse(), std::domain_error);
  // Involution and Lagrange inversion: [u^{n+1}] g = 1/(n+1) [t^n] P(t)^{-(n+1)}.
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c(8);
    c[0] = 1;
    for (int k = 1; k < 8; ++k) c[k] = testing::random_rational();
    TruncSeries<Rational> f(c, 1);
    auto h = f.compositional_inverse();
    auto back = h.compositional_inverse();
    for (int k = 0; k < 8; ++k) CHECK(back[k] == c[k]);
    TruncSeries<Rational> p(c, 0);
    for (int n = 0; n < 8; ++n) CHECK(h[n] == p.pow(-(n + 1))[n] / (n + 1));
  }
}

TEST_CASE("series exp and log are inverse") {
  for (int i = 0; i < 30; ++i) {
    TruncSeries<Rational> f(7);
    for (int k = 1; k <= 7; ++k) f[k] = testing::random_rational();
    auto back = f.exp().log();
    for (int k = 0; k <= 7; ++k) CHECK(back[k] == f[k]);
    // exp(2 log F) = F^2
    TruncSeries<Rational> g = f.exp();
    auto sq = (g.log() * Rational(2)).exp();
    auto direct = g * g;
    for (int k = 0; k <= 7; ++k) CHECK(sq[k] == direct[k]);
  }
}

TEST_CASE("linsolve basics") {
  Matrix<FieldElem> eye{{1, 0}, {0, 1}};
  auto x = solve_unique(eye, {alpha(), beta()});
  CHECK(x[0] == alpha());
  CHECK(x[1] == beta());
  Matrix<FieldElem> dup{{1}, {2}};
  auto r = linsolve(dup, {alpha(), alpha() * FieldElem(2)});
  CHECK(r.status == SolveStatus::unique);
  CHECK(r.solution[0] == alpha());
  auto bad = linsolve(dup, {alpha(), alpha()});
  CHECK(bad.status == SolveStatus::inconsistent);
  CHECK(bad.row == 1);
  CHECK_THROWS_AS(solve_unique(dup, {alpha(), alpha()}), LinsolveError);
  Matrix<Rational> under{{1, 1}};
  auto u = linsolve(under, {Rational(1)});
  CHECK(u.status == SolveStatus::underdetermined);
}

TEST_CASE("linsolve recovers x from A x on random systems") {
  for (Elimination method : {Elimination::bareiss, Elimination::gauss}) {
    for (int n : {1, 3, 6, 12}) {
      Matrix<FieldElem> a(n, std::vector<FieldElem>(n));
      std::vector<FieldElem> x(n);
      for (int i = 0; i < n; ++i) {
        x[i] = n <= 6 ? testing::random_field()
                      : FieldElem(testing::random_poly({Var::alpha, Var::beta}));
        for (int j = 0; j < n; ++j)
          a[i][j] = (testing::uniform(0, 2) == 0) ? FieldElem() : FieldElem(testing::random_poly({Var::alpha, Var::beta}, 2, 1));
        a[i][i] = a[i][i] + FieldElem(testing::uniform(1, 3)) + alpha();
      }
      std::vector<FieldElem> b(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i] = b[i] + a[i][j] * x[j];
      auto rep = linsolve(a, b, method);
      REQUIRE(rep.status == SolveStatus::unique);
      for (int i = 0; i < n; ++i) CHECK(rep.solution[i] == x[i]);
    }
  }
}
