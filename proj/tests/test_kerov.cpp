#include <doctest.h>

#include "jk/kerov.hpp"
#include "support.hpp"

using namespace jk;

namespace {

KerovSolver& solver() {
  static KerovSolver s;
  return s;
}

KPoly P(std::string_view text) { return parse_kpoly(text); }

std::map<int, RPoly<Rational>> components(int i, int j, int r_max) {
  std::map<int, RPoly<Rational>> out;
  for (int r = 2; r <= r_max; ++r) {
    const auto g = grade(solver().K(Partition{r}), r);
    const auto* p = g.find(i, j);
    out[r] = p ? *p : RPoly<Rational>();
  }
  return out;
}

// sum_kappa c_kappa m_kappa from "c:kappa" pairs.
std::map<Partition, Rational> symfun(std::initializer_list<std::pair<long, Partition>> terms, long scale) {
  std::map<Partition, Rational> out;
  for (const auto& [c, kappa] : terms) out.emplace(kappa, make_rational(c, scale));
  return out;
}

RPoly<Rational> RP(std::string_view text) { return specialize<Rational>(P(text), Rational(1), Rational(1)); }

}  // namespace

TEST_CASE("parse and render round trip") {
  const KPoly k = P("a^4*R5 + a^3*b*(6*R4 + R2^2) + (5*a^3 + 11*a^2*b^2)*R3 + (7*a^2*b + 6*a*b^3)*R2");
  CHECK(render_text(k) == "a^4*R5 + a^3*b*(6*R4 + R2^2) + 5*a^3*R3 + 11*a^2*b^2*R3 + 7*a^2*b*R2 + 6*a*b^3*R2");
  CHECK(parse_kpoly(render_text(k)) == k);
  CHECK(P("R1*a + 3/2*R2") == P("3/2*R2"));
  CHECK(render_text(P("-a^3*(4*R4 + 2*R2^2) + 2*R2")) == "-a^3*(4*R4 + 2*R2^2) + 2*R2");
  CHECK_THROWS_AS(parse_kpoly("a^2*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kpoly("(R2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kpoly("x"), std::invalid_argument);
}

TEST_CASE("golden rows K_2 .. K_6") {
  CHECK(solver().K(Partition{2}) == P("a^2*R3 + a*b*R2"));
  CHECK(solver().K(Partition{3}) == P("a^3*R4 + 3*a^2*b*R3 + (a^2 + 2*a*b^2)*R2"));
  CHECK(solver().K(Partition{4}) ==
        P("a^4*R5 + a^3*b*(6*R4 + R2^2) + (5*a^3 + 11*a^2*b^2)*R3 + (7*a^2*b + 6*a*b^3)*R2"));
  CHECK(solver().K(Partition{5}) ==
        P("a^5*R6 + a^4*b*(10*R5 + 5*R3*R2) + a^4*(15*R4 + 5*R2^2) + a^3*b^2*(35*R4 + 10*R2^2)"
          " + (55*a^3*b + 50*a^2*b^3)*R3 + (8*a^3 + 46*a^2*b^2 + 24*a*b^4)*R2"));
  CHECK(solver().K(Partition{6}) ==
        P("a^6*R7 + a^5*b*(15*R6 + 9*R4*R2 + 6*R3^2 + R2^3) + a^5*(35*R5 + 35*R3*R2)"
          " + a^4*b^2*(85*R5 + 73*R3*R2) + a^4*b*(238*R4 + 96*R2^2) + a^3*b^3*(225*R4 + 84*R2^2)"
          " + (84*a^4 + 505*a^3*b^2 + 274*a^2*b^4)*R3 + (144*a^3*b + 326*a^2*b^3 + 120*a*b^5)*R2"));
  const auto rows = solver().rows(6);
  REQUIRE(rows.size() == 5);
  for (int r = 2; r <= 6; ++r) CHECK(rows[r - 2] == solver().K(Partition{r}));
  CHECK_THROWS_AS(solver().rows(1), std::invalid_argument);
}

TEST_CASE("golden tilde values") {
  CHECK(solver().tilde(Partition{2, 2}) == P("a^3*(4*R4 + 2*R2^2) + 10*a^2*b*R3 + (2*a^2 + 6*a*b^2)*R2"));
  CHECK(solver().tilde(Partition{3, 2}) ==
        P("a^4*(6*R5 + 6*R3*R2) + a^3*b*(30*R4 + 12*R2^2) + (18*a^3 + 48*a^2*b^2)*R3 + (24*a^2*b + 24*a*b^3)*R2"));
  CHECK(solver().tilde(Partition{4, 2}) ==
        P("a^5*(8*R6 + 8*R4*R2 + 4*R3^2) + a^4*b*(68*R5 + 72*R3*R2) + a^4*(80*R4 + 40*R2^2)"
          " + a^3*b^2*(208*R4 + 88*R2^2) + (268*a^3*b + 268*a^2*b^3)*R3 + (32*a^3 + 212*a^2*b^2 + 120*a*b^4)*R2"));
  CHECK(solver().tilde(Partition{3, 3}) ==
        P("a^5*(9*R6 + 9*R4*R2 + 9*R3^2 + 3*R2^3) + a^4*b*(72*R5 + 81*R3*R2) + a^4*(75*R4 + 27*R2^2)"
          " + a^3*b^2*(213*R4 + 90*R2^2) + (261*a^3*b + 270*a^2*b^3)*R3 + (36*a^3 + 210*a^2*b^2 + 120*a*b^4)*R2"));
  CHECK(solver().tilde(Partition{2, 2, 2}) ==
        P("a^4*(40*R5 + 64*R3*R2) + a^3*b*(176*R4 + 96*R2^2) + (80*a^3 + 256*a^2*b^2)*R3"
          " + (104*a^2*b + 120*a*b^3)*R2"));
  for (int r = 2; r <= 6; ++r) CHECK(solver().tilde(Partition{r}) == solver().K(Partition{r}));
  for (int r = 2; r <= 5; ++r)
    for (int s = 2; s <= r && r + s <= 7; ++s)
      CHECK(solver().K(Partition{r, s}) ==
            solver().K(Partition{r}) * solver().K(Partition{s}) - solver().tilde(Partition{r, s}));
}

TEST_CASE("K_{2,2} with its negative terms") {
  CHECK(solver().K(Partition{2, 2}) ==
        P("a^4*R3^2 + 2*a^3*b*R3*R2 - a^3*(4*R4 + 2*R2^2) + a^2*b^2*R2^2 - 10*a^2*b*R3 - (2*a^2 + 6*a*b^2)*R2"));
  CHECK(render_text(solver().K(Partition{2, 2})) ==
        "a^4*R3^2 + 2*a^3*b*R3*R2 - a^3*(4*R4 + 2*R2^2) + a^2*b^2*R2^2 - 10*a^2*b*R3 - 2*a^2*R2 - 6*a*b^2*R2");
}

TEST_CASE("the system for mu = (2)") {
  const Partition mu{2};
  CHECK(kerov_support(mu) == std::vector<Partition>{Partition{2}, Partition{3}});
  // The ansatz A R_4 + B R_2^2 + C R_3 + D R_2 is the support widened by one.
  const auto support = kerov_support(mu, 1);
  CHECK(std::set<Partition>(support.begin(), support.end()) ==
        std::set<Partition>{Partition{2}, Partition{3}, Partition{2, 2}, Partition{4}});
  const Rational a = make_rational(7, 3), b = make_rational(-2, 5);
  const auto rep = solver().solve_at(mu, a, b, 1);
  REQUIRE(rep.status == SolveStatus::unique);
  std::map<Partition, Rational> sol;
  for (std::size_t j = 0; j < support.size(); ++j) sol.emplace(support[j], rep.solution[j]);
  CHECK(sol.at(Partition{4}) == 0);
  CHECK(sol.at(Partition{2, 2}) == 0);
  CHECK(sol.at(Partition{3}) == a * a);
  CHECK(sol.at(Partition{2}) == a * b);
  const auto sys = kerov_system(support, a, b,
                                kerov_rhs<Rational>(mu, a, [](const Partition&) { return RPoly<Rational>(Rational(1)); }));
  CHECK(sys.rows.front().first == 0);
  CHECK(sys.rows.back().first == 1);
  for (std::size_t i = 1; i < sys.rows.size(); ++i) CHECK(MonomialOrder{}(sys.rows[i - 1], sys.rows[i]));
  // K_2 at lambda = (2) is vartheta = 2 alpha.
  const auto mode = Mode<Rational>::alpha_mode(a);
  const auto r = free_cumulants(Partition{2}, 3, mode).values;
  CHECK(a * a * r[3] + a * mode.beta() * r[2] == 2 * a);
}

TEST_CASE("classical specialization") {
  auto at = [](int r) { return specialize<Rational>(solver().K(Partition{r}), Rational(1), Rational(0)); };
  CHECK(at(2) == RP("R3"));
  CHECK(at(3) == RP("R4 + R2"));
  CHECK(at(4) == RP("R5 + 5*R3"));
}

TEST_CASE("symbolic and interpolation engines agree") {
  KerovSolver sym(Engine::symbolic);
  for (int w = 2; w <= 6; ++w)
    for (const auto& mu : enumerate(w, 2)) {
      if (w - mu.length() > 3) continue;
      CAPTURE(mu.to_string());
      CHECK(sym.K(mu) == solver().K(mu));
    }
  CHECK(std::string(to_string(sym.engine())) == "symbolic");
}

TEST_CASE("support bound is tight") {
  for (const auto& mu : {Partition{2}, Partition{3}, Partition{4}, Partition{2, 2}, Partition{3, 2}, Partition{5},
                         Partition{2, 2, 2}})
    CHECK(solver().support_is_tight(mu));
}

TEST_CASE("partitions with a part 1 are rejected") {
  CHECK_THROWS_AS(solver().K(Partition{2, 1}), std::invalid_argument);
  CHECK(solver().K(Partition{}) == KPoly(FieldElem(1)));
}

TEST_CASE("coefficients are integer polynomials") {
  for (int r = 2; r <= 8; ++r)
    for (const auto& [rho, c] : solver().K(Partition{r}).terms()) CHECK(integer_polynomial(c));
  CHECK_FALSE(integer_polynomial(FieldElem(make_rational(1, 2))));
  CHECK_FALSE(integer_polynomial(FieldElem(1) / testing::alpha()));
}

TEST_CASE("interpolation recovers weighted-homogeneous coefficients") {
  const std::vector<Rational> alphas{2, 3, 5};
  // 3 a^2 + 7 a b^2 - b^4 at beta = 1, degree 4.
  std::vector<std::vector<Rational>> values;
  for (const auto& a : alphas) values.push_back({3 * a * a + 7 * a - 1});
  const auto c = interpolate_weighted({4}, alphas, values);
  const FieldElem &A = testing::alpha(), &B = testing::beta();
  CHECK(c[0] == FieldElem(3) * A * A + FieldElem(7) * A * B * B - B * B * B * B);
  CHECK_THROWS_AS(interpolate_weighted({6}, alphas, values), std::invalid_argument);
}

TEST_CASE("oracle from vartheta equals K for |mu| - l(mu) <= 3") {
  CHECK(interpolation_oracle_K(Partition{}, 4) == KPoly(FieldElem(1)));
  const std::vector<std::pair<Partition, int>> pools{{Partition{2}, 3},    {Partition{3}, 5},    {Partition{4}, 6},
                                                     {Partition{2, 2}, 7}, {Partition{3, 2}, 8}, {Partition{2, 2, 2}, 10}};
  for (const auto& [mu, pool] : pools) {
    CAPTURE(mu.to_string());
    CHECK(interpolation_oracle_K(mu, pool) == solver().K(mu));
  }
  CHECK_THROWS_AS(interpolation_oracle_K(Partition{3, 2}, 6), KerovError);
}

TEST_CASE("two (zeta, eta) pairs with the same (alpha, beta) agree") {
  const std::vector<std::pair<Partition, int>> pools{{Partition{2}, 3}, {Partition{3}, 5}, {Partition{2, 2}, 7},
                                                     {Partition{4}, 6}, {Partition{3, 2}, 8}};
  for (const auto& [z, e] : {std::pair{Rational(-2), make_rational(1, 3)}, std::pair{make_rational(-1, 3), Rational(2)},
                             std::pair{make_rational(-3, 4), make_rational(5, 2)}}) {
    const ZetaEta p{z, e}, q{e, z};
    REQUIRE(p.alpha() == q.alpha());
    REQUIRE(p.beta() == q.beta());
    for (const auto& [mu, pool] : pools) {
      CAPTURE(mu.to_string());
      const auto vp = oracle_values_at(mu, pool, p), vq = oracle_values_at(mu, pool, q);
      CHECK(vp == vq);
      const auto support = kerov_support(mu);
      const auto k = specialize<Rational>(solver().K(mu), p.alpha(), p.beta());
      CHECK(vp[0] == 0);
      for (std::size_t j = 0; j < support.size(); ++j) CHECK(vp[j + 1] == k.coefficient(support[j]));
    }
  }
}

TEST_CASE("evaluating K_mu at lambda gives vartheta") {
  for (const auto& mode : {Mode<Rational>::alpha_mode(make_rational(5, 3)),
                           Mode<Rational>::zeta_eta_mode(make_rational(-3, 7), make_rational(4, 5))}) {
    ThetaTower<Rational> tower(mode);
    for (int w = 2; w <= 6; ++w)
      for (const auto& mu : enumerate(w, 2)) {
        const auto k = specialize<Rational>(solver().K(mu), mode.alpha(), mode.beta());
        for (int n = w; n <= 7; ++n)
          for (const auto& lam : enumerate(n)) {
            const auto r = free_cumulants(lam, w + 2, mode).values;
            Rational v = 0;
            for (const auto& [rho, c] : k.terms()) {
              Rational m = c;
              for (int p : rho.parts()) m *= r[p];
              v += m;
            }
            CAPTURE(mu.to_string());
            CAPTURE(lam.to_string());
            CHECK(v == tower.vartheta(lam, mu));
          }
      }
  }
}

TEST_CASE("grading splits and reassembles") {
  for (int r = 2; r <= 8; ++r) {
    const auto g = grade(solver().K(Partition{r}), r);
    CHECK(g.violations.empty());
    CHECK(reassemble(g) == solver().K(Partition{r}));
    CHECK(*g.find(0, 0) == RPoly<Rational>::monomial(Partition{r + 1}, 1));
  }
  const auto g4 = grade(solver().K(Partition{4}), 4);
  CHECK(*g4.find(1, 1) == RP("6*R4 + R2^2"));
  CHECK(*g4.find(3, 3) == RP("6*R2"));
  CHECK(g4.find(4, 4) == nullptr);
  // A coefficient outside the index range and a non-homogeneous component.
  const auto bad = grade(P("a^2*R3 + a^2*R2 + a^3*R2"), 2);
  CHECK(bad.violations.size() == 3);
  CHECK(grade(KPoly::monomial(Partition{2}, FieldElem(1) / testing::alpha()), 2).violations.size() == 1);
  for (const auto& mu : enumerate(6, 2)) CHECK(reassemble(grade(solver().tilde(mu), 6 - mu.length() + 1)) == solver().tilde(mu));
}

TEST_CASE("Q and C bases") {
  CHECK(basis_element(Basis::Q, Basis::R, 4) == RP("3*R4 + 1/2*R2^2"));
  CHECK(basis_element(Basis::C, Basis::R, 4) == RP("3*R4 + R2^2"));
  CHECK(basis_element(Basis::C, Basis::R, 0) == RPoly<Rational>(Rational(1)));
  for (int n = 2; n <= 8; ++n)
    for (Basis x : {Basis::Q, Basis::C}) {
      CHECK(change_basis(basis_element(Basis::R, x, n), x, Basis::R) == RPoly<Rational>::monomial(Partition{n}, 1));
      CHECK(change_basis(basis_element(x, Basis::R, n), Basis::R, x) == RPoly<Rational>::monomial(Partition{n}, 1));
    }
  for (int n = 2; n <= 7; ++n)
    CHECK(change_basis(basis_element(Basis::C, Basis::R, n), Basis::R, Basis::Q) == basis_element(Basis::C, Basis::Q, n));
  for (int t = 0; t < 50; ++t) {
    RPoly<Rational> p;
    for (int k = 0; k < 4; ++k) {
      const int w = static_cast<int>(testing::uniform(2, 10));
      const auto parts = enumerate(w, 2);
      p.add(parts[static_cast<std::size_t>(testing::uniform(0, static_cast<long>(parts.size()) - 1))],
            testing::random_rational(7));
    }
    for (Basis x : {Basis::Q, Basis::C}) CHECK(change_basis(change_basis(p, Basis::R, x), x, Basis::R) == p);
    CHECK(change_basis(change_basis(p, Basis::R, Basis::Q), Basis::Q, Basis::C) == change_basis(p, Basis::R, Basis::C));
  }
  for (int r = 2; r <= 9; ++r)
    CHECK(change_basis(*grade(solver().K(Partition{r}), r).find(1, 1), Basis::R, Basis::Q) ==
          RPoly<Rational>::monomial(Partition{r}, make_rational(r, 2)));
}

TEST_CASE("monomial symmetric functions at integer vectors") {
  CHECK(monomial_value(Partition{}, {3, 2}) == 1);
  CHECK(monomial_value(Partition{1}, {3, 2, 2}) == 7);
  CHECK(monomial_value(Partition{1, 1}, {3, 2, 2}) == 16);
  CHECK(monomial_value(Partition{2, 1}, {3, 2}) == 30);
  CHECK(monomial_value(Partition{1, 1, 1}, {3, 2}) == 0);
  CHECK(multiplicity_factorial(Partition{3, 2, 2, 2}) == 6);
}

TEST_CASE("structure functions of weight r - 1") {
  const auto c22 = components(2, 2, 9);
  const auto f22 = fit_structure_function(2, 2, FitSide::R, FitScale::r, c22);
  CHECK(f22.coeffs == symfun({{3, Partition{2}}, {4, Partition{1, 1}}, {2, Partition{1}}}, 24));
  CHECK(f22.max_degree == 2);
  CHECK(predict_component(f22, 5) == RP("35*R4 + 10*R2^2"));
  const auto g22 = fit_structure_function(2, 2, FitSide::Q, FitScale::r, c22);
  CHECK(g22.coeffs == symfun({{3, Partition{2}}, {2, Partition{1, 1}}, {2, Partition{1}}}, 24));
  const auto f10 = fit_structure_function(1, 0, FitSide::R, FitScale::r, components(1, 0, 9));
  CHECK(f10.coeffs == symfun({{1, Partition{2}}, {2, Partition{1, 1}}, {2, Partition{1}}}, 24));
  // The fit predicts a row it was not fitted on.
  auto c = components(2, 2, 10);
  const RPoly<Rational> held_out = c.at(10);
  c.erase(10);
  CHECK(predict_component(fit_structure_function(2, 2, FitSide::R, FitScale::r, c), 10) == held_out);
}

TEST_CASE("degree-four structure functions") {
  const int r_max = 10;
  const auto f33 = fit_structure_function(3, 3, FitSide::R, FitScale::r, components(3, 3, r_max));
  CHECK(f33.coeffs == symfun({{15, Partition{4}}, {40, Partition{3, 1}}, {60, Partition{2, 2}}, {90, Partition{2, 1, 1}},
                              {144, Partition{1, 1, 1, 1}}, {60, Partition{3}}, {120, Partition{2, 1}},
                              {180, Partition{1, 1, 1}}, {75, Partition{2}}, {100, Partition{1, 1}}, {30, Partition{1}}},
                             1440));
  const auto g33 = fit_structure_function(3, 3, FitSide::Q, FitScale::r, components(3, 3, r_max));
  CHECK(g33.coeffs == symfun({{1, Partition{4}}, {2, Partition{3, 1}}, {3, Partition{2, 2}}, {3, Partition{2, 1, 1}},
                              {3, Partition{1, 1, 1, 1}}, {4, Partition{3}}, {6, Partition{2, 1}}, {6, Partition{1, 1, 1}},
                              {5, Partition{2}}, {5, Partition{1, 1}}, {2, Partition{1}}},
                             96));
  const auto f21 = fit_structure_function(2, 1, FitSide::R, FitScale::r, components(2, 1, r_max));
  CHECK(f21.coeffs == symfun({{13, Partition{4}}, {40, Partition{3, 1}}, {55, Partition{2, 2}}, {95, Partition{2, 1, 1}},
                              {162, Partition{1, 1, 1, 1}}, {68, Partition{3}}, {150, Partition{2, 1}},
                              {240, Partition{1, 1, 1}}, {103, Partition{2}}, {150, Partition{1, 1}}, {48, Partition{1}}},
                             1440));
  const auto g21 = fit_structure_function(2, 1, FitSide::Q, FitScale::r, components(2, 1, r_max));
  CHECK(g21.coeffs == symfun({{26, Partition{4}}, {68, Partition{3, 1}}, {87, Partition{2, 2}}, {123, Partition{2, 1, 1}},
                              {147, Partition{1, 1, 1, 1}}, {136, Partition{3}}, {246, Partition{2, 1}},
                              {294, Partition{1, 1, 1}}, {206, Partition{2}}, {244, Partition{1, 1}}, {96, Partition{1}}},
                             2880));
  const auto f20 = fit_structure_function(2, 0, FitSide::R, FitScale::binomial, components(2, 0, 11));
  CHECK(f20.coeffs == symfun({{3, Partition{4}}, {8, Partition{3, 1}}, {10, Partition{2, 2}}, {16, Partition{2, 1, 1}},
                              {24, Partition{1, 1, 1, 1}}, {20, Partition{3}}, {36, Partition{2, 1}},
                              {48, Partition{1, 1, 1}}, {35, Partition{2}}, {40, Partition{1, 1}}, {18, Partition{1}}},
                             5760));
}

TEST_CASE("fits report rank deficiency and inconsistency") {
  try {
    fit_structure_function(3, 3, FitSide::R, FitScale::r, components(3, 3, 9));
    FAIL("expected a rank-deficient fit");
  } catch (const FitError& e) {
    CHECK(std::string(e.what()).find("rank deficient") != std::string::npos);
    CHECK(e.witness().find("[1,1,1,1]") != std::string::npos);
  }
  auto c = components(2, 2, 9);
  c[7].add(Partition{2, 2, 2}, 1);
  CHECK_THROWS_AS(fit_structure_function(2, 2, FitSide::R, FitScale::r, c), FitError);
  CHECK_THROWS_AS(fit_structure_function(1, 1, FitSide::Q, FitScale::r, components(1, 1, 6)), FitError);
}

TEST_CASE("vartheta in contents") {
  auto expect = [](const Partition& mu, std::initializer_list<std::tuple<int, Partition, const char*>> terms) {
    std::map<std::pair<int, Partition>, FieldElem> out;
    for (const auto& [k, rho, text] : terms) out.emplace(std::make_pair(k, rho), P(text).coefficient(Partition{}));
    CAPTURE(mu.to_string());
    const auto fit = content_fit(mu, mu.weight() + 3);
    CAPTURE(to_text(fit));
    CHECK(fit.coeffs == out);
    for (const auto& [key, c] : fit.coeffs) CHECK(integer_polynomial(c));
  };
  expect(Partition{2}, {{0, Partition{1}, "2*a"}});
  expect(Partition{3}, {{0, Partition{2}, "3*a^2"}, {0, Partition{1}, "3*a*b"}, {2, Partition{}, "-3*a"}});
  expect(Partition{2, 2}, {{0, Partition{2}, "-12*a^2"}, {0, Partition{1, 1}, "4*a^2"}, {0, Partition{1}, "-8*a*b"},
                           {2, Partition{}, "8*a"}});
  expect(Partition{4}, {{0, Partition{3}, "4*a^3"}, {0, Partition{2}, "12*a^2*b"}, {0, Partition{1}, "8*a*b^2 + 12*a^2"},
                        {1, Partition{1}, "-8*a^2"}, {2, Partition{}, "-8*a*b"}});
  CHECK(to_text(content_fit(Partition{2}, 5)) == "(2*a)*p1");
  // One-row diagrams: J_(n) = sum n!/z_rho a^{n-l} p_rho gives vartheta^(4)_(2,2) = 24 a^2,
  // which fixes the sign of the b*p1 term above.
  for (const Rational a : {Rational(2), Rational(3), make_rational(5, 2)}) {
    const Rational b = 1 - a;  // contents 0, 1, 2, 3
    CHECK(-12 * a * a * 14 + 4 * a * a * 36 - 8 * a * b * 6 + 8 * a * 6 == 24 * a * a);
    ThetaTower<Rational> tower(Mode<Rational>::alpha_mode(a));
    CHECK(tower.vartheta(Partition{4}, Partition{2, 2}) == 24 * a * a);
  }
}

TEST_CASE("claims hold through r = 9") {
  VerifyConfig config;
  config.r_max = 9;
  config.tilde_weight = 7;
  const auto report = verify(solver(), config);
  CHECK(report.size() == claim_catalog().size());
  for (const auto& c : report) {
    CAPTURE(c.id);
    CAPTURE(c.witness);
    CHECK(c.status == CheckStatus::pass);
  }
  config.claims = {"no_such_claim"};
  CHECK_THROWS_AS(verify(solver(), config), std::invalid_argument);
}
