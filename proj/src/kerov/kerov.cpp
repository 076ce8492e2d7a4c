#include "jk/kerov.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jk {

namespace {

using Key = std::pair<int, Partition>;

const RPoly<Rational>& moment_poly(int n) {
  static std::mutex mu;
  static std::map<int, RPoly<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, moment_in_free_cumulants<Rational>(n)).first;
  return it->second;
}

void accumulate(std::map<Partition, InvAlphaPoly>& m, const Partition& key, const InvAlphaPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

KerovColumn build_column(const Partition& rho) {
  KerovColumn col;
  for (const auto& [key, b] : btable(rho).rows) {
    const auto& [k, sigma] = key;
    for (int e = 0; e <= 1; ++e) {
      auto& target = e == 0 ? col.first : col.second;
      for (const auto& [tau, c] : moment_poly(rho.weight() - k + e).terms())
        accumulate(target, RPoly<Rational>::merge(tau, sigma), b * c);
    }
  }
  return col;
}

MultiPoly alpha_beta_monomial(int a, int b, const Rational& c) {
  return MultiPoly::monomial(Monomial::of(Var::alpha, a) * Monomial::of(Var::beta, b), c);
}

std::string describe(const Partition& mu) { return mu.to_string(); }

// Set partitions of {0..n-1} as block index vectors (restricted growth).
void set_partitions(int n, std::vector<int>& cur, int blocks, const std::function<void(const std::vector<int>&, int)>& f) {
  if (static_cast<int>(cur.size()) == n) {
    f(cur, blocks);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    set_partitions(n, cur, std::max(blocks, b + 1), f);
    cur.pop_back();
  }
}

Integer unsigned_stirling(int n, int k) {
  std::vector<std::vector<Integer>> c(n + 1, std::vector<Integer>(n + 1, 0));
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + Integer(i - 1) * c[i - 1][j];
  return (k < 0 || k > n) ? Integer(0) : c[n][k];
}

// Points (alpha, 1) for the interpolation engine.
Rational engine_alpha(int t) { return make_rational(3 * t + 5, 2 * t + 3); }

}  // namespace

const char* to_string(Engine e) { return e == Engine::symbolic ? "symbolic" : "interpolation"; }

const KerovColumn& kerov_column(const Partition& rho) {
  static std::mutex mu;
  static std::map<Partition, KerovColumn> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(rho);
    if (it != cache.end()) return it->second;
  }
  KerovColumn col = build_column(rho);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(rho, std::move(col)).first->second;
}

std::vector<Partition> kerov_support(const Partition& mu, int extra) {
  const int d = mu.weight() - mu.length();
  std::vector<Partition> out;
  for (int w = 1; w <= mu.weight() + mu.length() + extra; ++w)
    for (auto& rho : enumerate_bounded(w, 2, d + 2 + extra)) out.push_back(std::move(rho));
  return out;
}

// ---------------------------------------------------------------------------

const KPoly& KerovSolver::K(const Partition& mu) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = k_.find(mu);
  if (it != k_.end()) return it->second;
  if (mu.multiplicity(1) > 0) throw std::invalid_argument("K: partition has a part 1: " + describe(mu));
  KPoly k = mu.length() == 0 ? KPoly(FieldElem(1)) : compute(mu);
  return k_.emplace(mu, std::move(k)).first->second;
}

void KerovSolver::seed(const Partition& mu, KPoly k) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  k_.emplace(mu, std::move(k));
}

bool KerovSolver::has(const Partition& mu) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return k_.count(mu) > 0;
}

std::vector<KPoly> KerovSolver::rows(int r_max) {
  if (r_max < 2) throw std::invalid_argument("rows: r_max must be at least 2");
  std::vector<KPoly> out;
  for (int r = 2; r <= r_max; ++r) out.push_back(K(Partition{r}));
  return out;
}

KPoly KerovSolver::compute(const Partition& mu) {
  return engine_ == Engine::symbolic ? compute_symbolic(mu) : compute_interpolated(mu);
}

KPoly KerovSolver::compute_symbolic(const Partition& mu) {
  const FieldElem al = FieldElem::variable(Var::alpha), be = FieldElem::variable(Var::beta);
  const auto support = kerov_support(mu);
  const auto rhs = kerov_rhs<FieldElem>(mu, al, [this](const Partition& nu) { return K(nu); });
  const auto sys = kerov_system(support, al, be, rhs);
  const auto rep = linsolve(sys.a, sys.b);
  if (rep.status != SolveStatus::unique)
    throw KerovError("K" + describe(mu) + ": system is " +
                     (rep.status == SolveStatus::inconsistent ? "inconsistent" : "underdetermined"));
  KPoly out;
  for (std::size_t j = 0; j < support.size(); ++j) out.add(support[j], rep.solution[j]);
  return out;
}

SolveReport<Rational> KerovSolver::solve_at(const Partition& mu, const Rational& alpha, const Rational& beta,
                                            int extra) {
  const auto support = kerov_support(mu, extra);
  const auto rhs = kerov_rhs<Rational>(
      mu, alpha, [&](const Partition& nu) { return specialize<Rational>(K(nu), alpha, beta); });
  const auto sys = kerov_system(support, alpha, beta, rhs);
  return linsolve(sys.a, sys.b);
}

KPoly KerovSolver::compute_interpolated(const Partition& mu) {
  const auto support = kerov_support(mu);
  const int d = mu.weight() - mu.length();
  std::vector<int> degrees;
  int need = 0;
  for (const auto& rho : support) {
    degrees.push_back(rho.weight() + d);
    need = std::max(need, degrees.back() / 2 + 1);
  }
  std::vector<Rational> alphas;
  std::vector<std::vector<Rational>> values;
  for (int t = 0; static_cast<int>(alphas.size()) < need; ++t) {
    if (t > need + 10) throw KerovError("K" + describe(mu) + ": too many singular sample points");
    const Rational a = engine_alpha(t);
    auto rep = solve_at(mu, a, Rational(1));
    if (rep.status == SolveStatus::inconsistent)
      throw KerovError("K" + describe(mu) + ": system is inconsistent at alpha = " + a.get_str());
    if (rep.status != SolveStatus::unique) continue;
    alphas.push_back(a);
    values.push_back(std::move(rep.solution));
  }
  const auto coeffs = interpolate_weighted(degrees, alphas, values);
  KPoly out;
  for (std::size_t j = 0; j < support.size(); ++j) out.add(support[j], coeffs[j]);
  // The sampled values determine each coefficient only under the degree
  // bound; confirm at points off the line beta = 1.
  for (const auto& [a, b] : {std::pair{make_rational(7, 5), make_rational(-4, 3)},
                             std::pair{make_rational(-5, 11), make_rational(9, 7)}}) {
    const auto rep = solve_at(mu, a, b);
    if (rep.status != SolveStatus::unique)
      throw KerovError("K" + describe(mu) + ": system is not uniquely solvable at a check point");
    for (std::size_t j = 0; j < support.size(); ++j)
      if (specialize<Rational>(out.coefficient(support[j]), a, b) != rep.solution[j])
        throw KerovError("K" + describe(mu) + ": interpolated coefficient of " + describe(support[j]) +
                         " fails at a check point");
  }
  return out;
}

bool KerovSolver::support_is_tight(const Partition& mu) {
  if (mu.length() == 0) return true;
  const Rational a = make_rational(13, 7), b = make_rational(-2, 5);
  const auto base = solve_at(mu, a, b, 0);
  const auto wide = solve_at(mu, a, b, 1);
  if (base.status != SolveStatus::unique || wide.status != SolveStatus::unique) return false;
  const auto s0 = kerov_support(mu, 0), s1 = kerov_support(mu, 1);
  std::map<Partition, Rational> v0;
  for (std::size_t j = 0; j < s0.size(); ++j) v0.emplace(s0[j], base.solution[j]);
  for (std::size_t j = 0; j < s1.size(); ++j) {
    auto it = v0.find(s1[j]);
    const Rational expect = it == v0.end() ? Rational(0) : it->second;
    if (wide.solution[j] != expect) return false;
  }
  return true;
}

const KPoly& KerovSolver::tilde(const Partition& mu) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = tilde_.find(mu);
  if (it != tilde_.end()) return it->second;
  const int l = mu.length();
  KPoly out;
  if (l <= 1) {
    out = K(mu);
  } else {
    KPoly rest;
    std::vector<int> cur;
    set_partitions(l, cur, 0, [&](const std::vector<int>& block, int blocks) {
      if (blocks < 2) return;
      KPoly prod(FieldElem(1));
      for (int b = 0; b < blocks; ++b) {
        std::vector<int> parts;
        for (int i = 0; i < l; ++i)
          if (block[i] == b) parts.push_back(mu.parts()[i]);
        prod = prod * tilde(Partition::from_unsorted(std::move(parts)));
      }
      rest += (l - blocks) % 2 ? prod * FieldElem(-1) : prod;
    });
    out = K(mu) - rest;
    if ((l - 1) % 2) out = out * FieldElem(-1);
  }
  return tilde_.emplace(mu, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

std::vector<FieldElem> interpolate_weighted(const std::vector<int>& degrees, const std::vector<Rational>& alphas,
                                            const std::vector<std::vector<Rational>>& values) {
  std::vector<FieldElem> out;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    const int dmax = degrees[j] / 2;
    if (static_cast<int>(alphas.size()) < dmax + 1) throw std::invalid_argument("interpolate_weighted: too few points");
    Matrix<Rational> v(dmax + 1, std::vector<Rational>(dmax + 1));
    std::vector<Rational> rhs(dmax + 1);
    for (int p = 0; p <= dmax; ++p) {
      Rational pw = 1;
      for (int a = 0; a <= dmax; ++a) {
        v[p][a] = pw;
        pw *= alphas[p];
      }
      rhs[p] = values[p][j];
    }
    const auto c = solve_unique(v, rhs);
    MultiPoly poly;
    for (int a = 0; a <= dmax; ++a)
      if (c[a] != 0) poly += alpha_beta_monomial(a, degrees[j] - 2 * a, c[a]);
    out.emplace_back(poly);
  }
  return out;
}

bool integer_polynomial(const FieldElem& c) {
  if (!c.den().is_constant() || c.den().constant_value() != 1) return false;
  return c.num().has_integer_coefficients();
}

// ---------------------------------------------------------------------------

std::vector<ZetaEta> unit_beta_points(std::size_t count) {
  std::vector<ZetaEta> out;
  for (std::size_t t = 0; t < count; ++t) {
    const Rational z = make_rational(-(17 + 6 * static_cast<long>(t)), 31);
    out.push_back({z, Rational(z / (z - 1))});
  }
  return out;
}

namespace {

using BasisFn = std::function<std::vector<Rational>(const Partition&, const Mode<Rational>&)>;

// Exact least-structure fit of vartheta^lambda_mu against the basis at one
// point; throws std::domain_error when a Pieri denominator vanishes there.
std::vector<Rational> fit_at(const Partition& mu, int max_weight, const ZetaEta& p, const BasisFn& basis) {
  ThetaTower<Rational> tower(Mode<Rational>::zeta_eta_mode(p.zeta, p.eta));
  const auto mode = tower.mode();
  Matrix<Rational> a;
  std::vector<Rational> b;
  for (int n = mu.weight(); n <= max_weight; ++n)
    for (const auto& lam : enumerate(n)) {
      a.push_back(basis(lam, mode));
      b.push_back(tower.vartheta(lam, mu));
    }
  const auto rep = linsolve(a, b);
  if (rep.status == SolveStatus::underdetermined)
    throw KerovError("fit for " + describe(mu) + ": rank deficient; enlarge the pool beyond weight " +
                     std::to_string(max_weight));
  if (rep.status == SolveStatus::inconsistent)
    throw KerovError("fit for " + describe(mu) + ": no exact fit over the pool");
  return rep.solution;
}

std::vector<FieldElem> fit_weighted(const Partition& mu, int max_weight, const std::vector<int>& degrees,
                                    const BasisFn& basis) {
  int need = 0;
  for (int d : degrees) need = std::max(need, d / 2 + 1);
  std::vector<Rational> alphas;
  std::vector<std::vector<Rational>> values;
  const auto pts = unit_beta_points(need + 10);
  for (const auto& p : pts) {
    if (static_cast<int>(alphas.size()) == need) break;
    try {
      values.push_back(fit_at(mu, max_weight, p, basis));
      alphas.push_back(p.alpha());
    } catch (const std::domain_error&) {
    }
  }
  if (static_cast<int>(alphas.size()) < need) throw KerovError("fit: too many singular sample points");
  auto coeffs = interpolate_weighted(degrees, alphas, values);
  const ZetaEta check{make_rational(-23, 37), make_rational(5, 3)};
  for (const auto& p : {check, ZetaEta{check.eta, check.zeta}}) {
    const auto v = fit_at(mu, max_weight, p, basis);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (specialize<Rational>(coeffs[j], p.alpha(), p.beta()) != v[j])
        throw KerovError("fit for " + describe(mu) + ": coefficient " + std::to_string(j) +
                         " is not a weighted-homogeneous polynomial of the expected degree");
  }
  return coeffs;
}

std::vector<Rational> oracle_basis(const std::vector<Partition>& support, const Partition& lam,
                                   const Mode<Rational>& mode) {
  int top = 2;
  for (const auto& rho : support) top = std::max(top, rho.largest());
  const auto r = free_cumulants(lam, top, mode).values;
  std::vector<Rational> row{Rational(1)};
  for (const auto& rho : support) {
    Rational v = 1;
    for (int p : rho.parts()) v *= r[p];
    row.push_back(v);
  }
  return row;
}

std::vector<std::pair<int, Partition>> content_basis(const Partition& mu) {
  const int budget = mu.weight() + mu.length();
  std::vector<std::pair<int, Partition>> out;
  for (int k = 0; 2 * k <= budget; ++k)
    for (int w = 0; w <= budget - 2 * k; ++w)
      for (const auto& rho : enumerate(w))
        if (w + 2 * rho.length() <= budget - 2 * k) out.emplace_back(k, rho);
  return out;
}

}  // namespace

std::vector<Rational> oracle_values_at(const Partition& mu, int max_weight, const ZetaEta& point) {
  const auto support = kerov_support(mu);
  return fit_at(mu, max_weight, point,
                [&](const Partition& lam, const Mode<Rational>& mode) { return oracle_basis(support, lam, mode); });
}

KPoly interpolation_oracle_K(const Partition& mu, int max_weight) {
  if (mu.length() == 0) return KPoly(FieldElem(1));
  const auto support = kerov_support(mu);
  const int d = mu.weight() - mu.length();
  std::vector<int> degrees{d};
  for (const auto& rho : support) degrees.push_back(rho.weight() + d);
  const auto c = fit_weighted(mu, max_weight, degrees, [&](const Partition& lam, const Mode<Rational>& mode) {
    return oracle_basis(support, lam, mode);
  });
  KPoly out;
  out.add(Partition{}, c[0]);
  for (std::size_t j = 0; j < support.size(); ++j) out.add(support[j], c[j + 1]);
  return out;
}

ContentFit content_fit(const Partition& mu, int max_weight) {
  const auto basis = content_basis(mu);
  const int d = mu.weight() - mu.length();
  std::vector<int> degrees;
  int top = 0;
  for (const auto& [k, rho] : basis) {
    degrees.push_back(rho.weight() + d);
    top = std::max(top, rho.largest());
  }
  const auto c = fit_weighted(mu, max_weight, degrees, [&](const Partition& lam, const Mode<Rational>& mode) {
    std::vector<Rational> pk(top + 1, Rational(0));
    for (int i = 1; i <= lam.length(); ++i)
      for (int j = 1; j <= lam.part(i); ++j) {
        const Rational v = Rational(i - 1) * mode.zeta + Rational(j - 1) * mode.eta;
        Rational pw = 1;
        for (int k = 0; k <= top; ++k) {
          pk[k] += pw;
          pw *= v;
        }
      }
    std::vector<Rational> row;
    for (const auto& [k, rho] : basis) {
      Rational v(binomial(lam.weight(), k));
      for (int p : rho.parts()) v *= pk[p];
      row.push_back(v);
    }
    return row;
  });
  ContentFit out{mu, {}};
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!c[j].is_zero()) out.coeffs.emplace(basis[j], c[j]);
  return out;
}

std::string to_text(const ContentFit& f) {
  std::string out;
  for (const auto& [key, c] : f.coeffs) {
    if (!out.empty()) out += " + ";
    out += "(" + c.num().pretty() + ")";
    if (key.first > 0) out += "*binom(n," + std::to_string(key.first) + ")";
    for (int p : key.second.parts()) out += "*p" + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

const RPoly<Rational>* Grading::find(int i, int j) const {
  for (const auto& c : components)
    if (c.i == i && c.j == j) return &c.poly;
  return nullptr;
}

Grading grade(const KPoly& k, int top) {
  Grading g;
  g.top = top;
  std::map<std::pair<int, int>, RPoly<Rational>> comp;
  for (const auto& [rho, c] : k.terms()) {
    if (!c.den().is_constant()) {
      g.violations.push_back("coefficient of " + monomial_name(rho) + " is not a polynomial");
      continue;
    }
    const Rational den = c.den().constant_value();
    for (const Term& t : c.num().terms()) {
      if (t.mono.exponent(Var::zeta) || t.mono.exponent(Var::eta)) {
        g.violations.push_back("coefficient of " + monomial_name(rho) + " involves zeta or eta");
        continue;
      }
      const int i = top - static_cast<int>(t.mono.exponent(Var::alpha));
      const int j = static_cast<int>(t.mono.exponent(Var::beta));
      comp[{i, j}].add(rho, t.coef / den);
    }
  }
  for (auto& [ij, poly] : comp) {
    const auto [i, j] = ij;
    const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (i < 0 || j < 0 || j > i || 2 * i - j > top - 1)
      if (!(i == 0 && j == 0)) g.violations.push_back("component " + tag + " outside the index range");
    const int w = top + 1 - 2 * i + j;
    for (const auto& [rho, c] : poly.terms())
      if (rho.weight() != w) g.violations.push_back("component " + tag + " has " + monomial_name(rho) + " of weight " +
                                                    std::to_string(rho.weight()) + ", expected " + std::to_string(w));
    g.components.push_back({i, j, poly});
  }
  return g;
}

KPoly reassemble(const Grading& g) {
  KPoly out;
  for (const auto& c : g.components)
    for (const auto& [rho, q] : c.poly.terms()) out.add(rho, FieldElem(alpha_beta_monomial(g.top - c.i, c.j, q)));
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(Basis b) { return b == Basis::R ? "R" : b == Basis::Q ? "Q" : "C"; }

Rational multiplicity_factorial(const Partition& rho) {
  Integer f = 1;
  int prev = 0;
  for (int p : rho.parts()) {
    if (p == prev) continue;
    prev = p;
    f *= factorial(rho.multiplicity(p));
  }
  return Rational(f);
}

const RPoly<Rational>& basis_element(Basis of, Basis in, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, RPoly<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(static_cast<int>(of), static_cast<int>(in), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RPoly<Rational> out;
  if (n == 0) {
    out = RPoly<Rational>(Rational(1));
  } else if (of == in) {
    out = RPoly<Rational>::monomial(Partition{n}, 1);
  } else {
    for (const auto& rho : enumerate(n, 2)) {
      const long l = rho.length();
      const Rational mf = multiplicity_factorial(rho);
      const Rational sign = l % 2 ? -1 : 1;
      const Rational v = Rational(stats(rho).v);
      Rational c;
      if (of == Basis::Q && in == Basis::R) c = Rational(factorial(l - 1)) * v / mf;
      else if (of == Basis::C && in == Basis::R) c = Rational(factorial(l)) * v / mf;
      else if (of == Basis::R && in == Basis::Q) c = sign / mf / Rational(1 - n);
      else if (of == Basis::R && in == Basis::C) c = sign * Rational(factorial(l)) / mf / Rational(1 - n);
      else if (of == Basis::C && in == Basis::Q) c = 1 / mf;
      else c = -sign * Rational(factorial(l - 1)) / mf;  // Q in C
      out.add(rho, c);
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

Rational monomial_value(const Partition& kappa, const std::vector<int>& x) {
  const auto& k = kappa.parts();
  if (k.size() > x.size()) return 0;
  std::vector<bool> used(x.size(), false);
  std::function<Rational(std::size_t)> rec = [&](std::size_t t) -> Rational {
    if (t == k.size()) return 1;
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(x[i]), static_cast<unsigned long>(k[t]));
      s += Rational(pw) * rec(t + 1);
      used[i] = false;
    }
    return s;
  };
  return rec(0) / multiplicity_factorial(kappa);
}

// ---------------------------------------------------------------------------

namespace {

Rational fit_scale(FitScale s, int r) { return s == FitScale::r ? Rational(r) : Rational(binomial(r + 1, 3)); }

// N(rho) times the normalization of cR_rho or cQ_rho, so that the plain
// coefficient of R_rho (or Q_rho) is s(r) * norm * f(rho).
Rational fit_norm(FitSide side, int i, int j, const Partition& rho) {
  const long l = rho.length();
  const Rational mf = multiplicity_factorial(rho);
  if (side == FitSide::R) return Rational(factorial(l + 2 * i - j - 2)) * Rational(stats(rho).v) / mf;
  Integer pw;
  const long base = 2 * i - j - 1;
  if (base < 0) return 0;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(l));
  return Rational(pw) / mf;
}

int fit_degree(int i, int j, FitScale s) { return 4 * i - 2 * j - 2 - (s == FitScale::binomial ? 2 : 0); }

std::vector<Partition> partitions_up_to(int deg) {
  std::vector<Partition> out;
  for (int w = 0; w <= deg; ++w)
    for (auto& k : enumerate(w)) out.push_back(std::move(k));
  return out;
}

}  // namespace

Rational SymFunFit::value(const Partition& rho) const {
  Rational s = 0;
  for (const auto& [kappa, c] : coeffs) s += c * monomial_value(kappa, rho.parts());
  return s;
}

SymFunFit fit_structure_function(int i, int j, FitSide side, FitScale scale,
                                 const std::map<int, RPoly<Rational>>& components) {
  SymFunFit fit;
  fit.i = i;
  fit.j = j;
  fit.side = side;
  fit.scale = scale;
  fit.max_degree = fit_degree(i, j, scale);
  if (fit.max_degree < 0) throw FitError("no structure function for this component", "");
  const auto kappas = partitions_up_to(fit.max_degree);
  Matrix<Rational> a;
  std::vector<Rational> b;
  std::vector<std::string> labels;
  for (const auto& [r, comp] : components) {
    const int w = r - 2 * i + j + 1;
    if (w < 2 || 2 * i - j > r - 1) continue;
    const auto poly = side == FitSide::R ? comp : change_basis(comp, Basis::R, Basis::Q);
    for (const auto& [rho, c] : poly.terms())
      if (rho.weight() != w) throw FitError("component is not homogeneous", "r=" + std::to_string(r) + " " + describe(rho));
    for (const auto& rho : enumerate(w, 2)) {
      const Rational norm = fit_norm(side, i, j, rho);
      if (norm == 0) throw FitError("normalization vanishes for this component", describe(rho));
      std::vector<Rational> row;
      for (const auto& kappa : kappas) row.push_back(monomial_value(kappa, rho.parts()));
      a.push_back(std::move(row));
      b.push_back(poly.coefficient(rho) / (fit_scale(scale, r) * norm));
      labels.push_back("r=" + std::to_string(r) + " " + describe(rho));
    }
    fit.r_used.push_back(r);
  }
  const auto rep = linsolve(a, b);
  if (rep.status == SolveStatus::underdetermined)
    throw FitError("rank deficient: more rows needed", "free monomial " + describe(kappas[rep.column]));
  if (rep.status == SolveStatus::inconsistent) throw FitError("no symmetric function fits all rows", labels[rep.row]);
  for (std::size_t t = 0; t < kappas.size(); ++t)
    if (rep.solution[t] != 0) fit.coeffs.emplace(kappas[t], rep.solution[t]);
  return fit;
}

RPoly<Rational> predict_component(const SymFunFit& fit, int r) {
  RPoly<Rational> out;
  const int w = r - 2 * fit.i + fit.j + 1;
  if (w < 2) return out;
  for (const auto& rho : enumerate(w, 2))
    out.add(rho, fit_scale(fit.scale, r) * fit_norm(fit.side, fit.i, fit.j, rho) * fit.value(rho));
  return fit.side == FitSide::R ? out : change_basis(out, Basis::Q, Basis::R);
}

// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& claim_catalog() {
  static const std::vector<std::pair<std::string, std::string>> c{
      {"top_weight", "the weight r+1 part of K_r is a^r R_{r+1}"},
      {"weight_r", "the weight r part of K_r is a^{r-1} b (r/2) sum_{|rho|=r} (l-1)! cR_rho"},
      {"weight_r_minus_1", "K_r^(1,0) = binom(r+1,3)/4 sum_{|rho|=r-1} l! cR_rho"},
      {"weight_r_minus_3", "K_r^(2,0) = binom(r+1,3)/5760 sum_{|rho|=r-3} (l+2)! f(rho) cR_rho"},
      {"integer_coefficients", "every coefficient of K_r is a polynomial in a, b with integer coefficients"},
      {"nonnegative_grading", "K_r = sum a^{r-i} b^j K_r^(i,j) over 0<=j<=i, 2i-j<=r-1, each homogeneous of weight r-2i+j+1 with nonnegative integer coefficients"},
      {"q_positive", "for (i,j) != (0,0), K_r^(i,j) has nonnegative coefficients in the Q basis"},
      {"stirling_linear", "the linear part of K_r^(i,i) is |s(r,r-i)| R_{r-i+1}"},
      {"c_form_22", "K_r^(2,2) = (r/24)(2r(r-1) C_{r-1} + sum_{i+j+k=r-1} i^2(i-1) R_i C_j C_k)"},
      {"c_form_33", "K_r^(3,3) = (r/48) sum_{i+j=r-2} i(i+1)^2(i+2) C_i C_j"},
      {"c_negative", "the C expansion of K_5^(2,2) has a negative coefficient"},
      {"tilde_structure", "K~_mu has highest weight |mu|-l(mu)+2 and nonnegative integer graded coefficients"},
  };
  return c;
}

namespace {

RPoly<Rational> cR(const Partition& rho) {
  return RPoly<Rational>::monomial(rho, Rational(stats(rho).v) / multiplicity_factorial(rho));
}

RPoly<Rational> c_in_r(int n) { return n == 1 ? RPoly<Rational>() : basis_element(Basis::C, Basis::R, n); }

RPoly<Rational> component_or_zero(const Grading& g, int i, int j) {
  const auto* p = g.find(i, j);
  return p ? *p : RPoly<Rational>();
}

std::string diff_witness(const std::string& where, const RPoly<Rational>& got, const RPoly<Rational>& want) {
  return where + ": got " + render_terms(got) + ", expected " + render_terms(want);
}

Rational f_weight_r_minus_3(const Partition& rho) {
  static const std::vector<std::pair<Partition, int>> f{
      {Partition{4}, 3},     {Partition{3, 1}, 8},  {Partition{2, 2}, 10}, {Partition{2, 1, 1}, 16},
      {Partition{1, 1, 1, 1}, 24}, {Partition{3}, 20}, {Partition{2, 1}, 36}, {Partition{1, 1, 1}, 48},
      {Partition{2}, 35},    {Partition{1, 1}, 40}, {Partition{1}, 18}};
  Rational s = 0;
  for (const auto& [kappa, c] : f) s += Rational(c) * monomial_value(kappa, rho.parts());
  return s;
}

}  // namespace

std::vector<ClaimResult> verify(KerovSolver& solver, const VerifyConfig& config) {
  std::vector<ClaimResult> out;
  auto wanted = [&](const std::string& id) {
    return config.claims.empty() || std::find(config.claims.begin(), config.claims.end(), id) != config.claims.end();
  };
  for (const auto& id : config.claims) {
    const auto& cat = claim_catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const auto& e) { return e.first == id; }))
      throw std::invalid_argument("unknown claim: " + id);
  }
  std::map<int, Grading> grades;
  auto graded = [&](int r) -> const Grading& {
    auto it = grades.find(r);
    if (it == grades.end()) it = grades.emplace(r, grade(solver.K(Partition{r}), r)).first;
    return it->second;
  };
  for (const auto& [id, statement] : claim_catalog()) {
    if (!wanted(id)) continue;
    ClaimResult res{id, statement, CheckStatus::pass, ""};
    auto fail = [&](const std::string& w) {
      if (res.status == CheckStatus::pass) {
        res.status = CheckStatus::fail;
        res.witness = w;
      }
    };
    const std::string rtag = "r=";
    if (id == "tilde_structure") {
      for (int w = 2; w <= config.tilde_weight; ++w)
        for (const auto& mu : enumerate(w, 2)) {
          const KPoly& kt = solver.tilde(mu);
          const int d = mu.weight() - mu.length();
          int top_w = 0;
          for (const auto& [rho, c] : kt.terms()) top_w = std::max(top_w, rho.weight());
          if (top_w != d + 2) fail(describe(mu) + ": highest weight " + std::to_string(top_w));
          const auto g = grade(kt, d + 1);
          if (!g.violations.empty()) fail(describe(mu) + ": " + g.violations.front());
          for (const auto& c : g.components)
            for (const auto& [rho, q] : c.poly.terms())
              if (q < 0 || q.get_den() != 1) fail(describe(mu) + ": coefficient " + q.get_str() + " of " + monomial_name(rho));
        }
      out.push_back(res);
      continue;
    }
    if (id == "c_negative") {
      const auto c = change_basis(component_or_zero(graded(5), 2, 2), Basis::R, Basis::C);
      const bool neg = std::any_of(c.terms().begin(), c.terms().end(), [](const auto& t) { return t.second < 0; });
      if (!neg) fail("all C coefficients of K_5^(2,2) are nonnegative: " + render_terms(c, 'C'));
      out.push_back(res);
      continue;
    }
    for (int r = 2; r <= config.r_max; ++r) {
      const Grading& g = graded(r);
      const std::string where = rtag + std::to_string(r);
      if (id == "top_weight") {
        const auto want = RPoly<Rational>::monomial(Partition{r + 1}, 1);
        const auto got = component_or_zero(g, 0, 0);
        if (!(got == want)) fail(diff_witness(where, got, want));
      } else if (id == "weight_r") {
        RPoly<Rational> want;
        for (const auto& rho : enumerate(r, 2))
          want += cR(rho) * (Rational(factorial(rho.length() - 1)) * make_rational(r, 2));
        const auto got = component_or_zero(g, 1, 1);
        if (!(got == want)) fail(diff_witness(where, got, want));
      } else if (id == "weight_r_minus_1") {
        RPoly<Rational> want;
        for (const auto& rho : enumerate(r - 1, 2))
          want += cR(rho) * (Rational(factorial(rho.length())) * Rational(binomial(r + 1, 3)) / 4);
        const auto got = component_or_zero(g, 1, 0);
        if (!(got == want)) fail(diff_witness(where, got, want));
      } else if (id == "weight_r_minus_3") {
        RPoly<Rational> want;
        if (r >= 5)
          for (const auto& rho : enumerate(r - 3, 2))
            want += cR(rho) * (Rational(factorial(rho.length() + 2)) * Rational(binomial(r + 1, 3)) / 5760 *
                               f_weight_r_minus_3(rho));
        const auto got = component_or_zero(g, 2, 0);
        if (!(got == want)) fail(diff_witness(where, got, want));
      } else if (id == "integer_coefficients") {
        for (const auto& [rho, c] : solver.K(Partition{r}).terms())
          if (!integer_polynomial(c)) fail(where + ": coefficient of " + monomial_name(rho) + " is " + to_text(c));
      } else if (id == "nonnegative_grading") {
        if (!g.violations.empty()) fail(where + ": " + g.violations.front());
        for (const auto& c : g.components)
          for (const auto& [rho, q] : c.poly.terms())
            if (q < 0 || q.get_den() != 1)
              fail(where + " (" + std::to_string(c.i) + "," + std::to_string(c.j) + "): " + q.get_str() + " " +
                   monomial_name(rho));
      } else if (id == "q_positive") {
        for (const auto& c : g.components) {
          if (c.i == 0 && c.j == 0) continue;
          const auto inq = change_basis(c.poly, Basis::R, Basis::Q);
          for (const auto& [rho, q] : inq.terms())
            if (q < 0)
              fail(where + " (" + std::to_string(c.i) + "," + std::to_string(c.j) + "): " + q.get_str() + " " +
                   monomial_name(rho, 'Q'));
        }
      } else if (id == "stirling_linear") {
        for (int i = 1; i <= 3 && i <= r - 1; ++i) {
          const auto comp = component_or_zero(g, i, i);
          const Rational got = comp.coefficient(Partition{r - i + 1});
          const Rational want(unsigned_stirling(r, r - i));
          if (got != want) fail(where + " i=" + std::to_string(i) + ": " + got.get_str() + " vs " + want.get_str());
        }
      } else if (id == "c_form_22" && r >= 5) {
        RPoly<Rational> inner = c_in_r(r - 1) * Rational(2 * r * (r - 1));
        for (int i = 2; i <= r - 1; ++i)
          for (int j = 0; i + j <= r - 1; ++j) {
            const int k = r - 1 - i - j;
            inner += RPoly<Rational>::monomial(Partition{i}, Rational(i * i * (i - 1))) * c_in_r(j) * c_in_r(k);
          }
        const auto want = inner * make_rational(r, 24);
        const auto got = component_or_zero(g, 2, 2);
        if (!(got == want)) fail(diff_witness(where, got, want));
      } else if (id == "c_form_33" && r >= 5) {
        RPoly<Rational> sum;
        for (int i = 0; i <= r - 2; ++i)
          sum += c_in_r(i) * c_in_r(r - 2 - i) * Rational(i * (i + 1) * (i + 1) * (i + 2));
        const auto want = sum * make_rational(r, 48);
        const auto got = component_or_zero(g, 3, 3);
        if (!(got == want)) fail(diff_witness(where, got, want));
      }
    }
    out.push_back(res);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string monomial_name(const Partition& rho, char letter) {
  if (rho.length() == 0) return "1";
  std::string s;
  int prev = 0;
  for (int p : rho.parts()) {
    if (p == prev) continue;
    prev = p;
    if (!s.empty()) s += "*";
    s += letter + std::to_string(p);
    const int m = rho.multiplicity(p);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

namespace {

// Monomials by weight descending, then reverse lexicographic.
template <class S>
std::vector<std::pair<Partition, S>> display_order(const RPoly<S>& p) {
  std::vector<std::pair<Partition, S>> t(p.terms().begin(), p.terms().end());
  std::stable_sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
    if (x.first.weight() != y.first.weight()) return x.first.weight() > y.first.weight();
    return y.first < x.first;
  });
  return t;
}

std::string join_factors(const Rational& c, const std::vector<std::string>& factors) {
  std::vector<std::string> parts;
  if (c != 1) parts.push_back(c.get_str());
  for (const auto& f : factors)
    if (!f.empty() && f != "1") parts.push_back(f);
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

std::string ab_prefix(int a, int b) {
  std::string s;
  if (a > 0) s += a == 1 ? "a" : "a^" + std::to_string(a);
  if (b > 0) s += std::string(s.empty() ? "" : "*") + (b == 1 ? "b" : "b^" + std::to_string(b));
  return s;
}

std::string signed_sum(const std::vector<std::pair<bool, std::string>>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [neg, body] = items[i];
    if (i == 0) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

template <class S>
std::string render_terms(const RPoly<S>& p, char letter) {
  std::vector<std::pair<bool, std::string>> items;
  for (const auto& [rho, c] : display_order(p)) {
    if constexpr (std::is_same_v<S, Rational>) {
      items.emplace_back(c < 0, join_factors(abs(c), {monomial_name(rho, letter)}));
    } else {
      items.emplace_back(false, "(" + c.to_text() + ")*" + monomial_name(rho, letter));
    }
  }
  return signed_sum(items);
}

template std::string render_terms<Rational>(const RPoly<Rational>&, char);
template std::string render_terms<FieldElem>(const RPoly<FieldElem>&, char);

std::string render_text(const KPoly& k) {
  std::map<std::pair<int, int>, RPoly<Rational>, std::greater<>> groups;
  std::vector<std::pair<bool, std::string>> extra;
  for (const auto& [rho, c] : k.terms()) {
    if (!c.den().is_constant()) {
      extra.emplace_back(false, "(" + c.to_text() + ")*" + monomial_name(rho));
      continue;
    }
    const Rational den = c.den().constant_value();
    for (const Term& t : c.num().terms())
      groups[{static_cast<int>(t.mono.exponent(Var::alpha)), static_cast<int>(t.mono.exponent(Var::beta))}].add(
          rho, t.coef / den);
  }
  std::vector<std::pair<bool, std::string>> items;
  for (const auto& [ab, poly] : groups) {
    const std::string prefix = ab_prefix(ab.first, ab.second);
    const auto terms = display_order(poly);
    if (terms.size() == 1) {
      const auto& [rho, c] = terms.front();
      items.emplace_back(c < 0, join_factors(abs(c), {prefix, monomial_name(rho)}));
      continue;
    }
    const bool neg = terms.front().second < 0;
    std::vector<std::pair<bool, std::string>> inner;
    for (const auto& [rho, c] : terms) {
      const Rational v = neg ? Rational(-c) : c;
      inner.emplace_back(v < 0, join_factors(abs(v), {monomial_name(rho)}));
    }
    if (prefix.empty()) {
      for (auto& [n, body] : inner) items.emplace_back(n != neg, body);
    } else {
      items.emplace_back(neg, prefix + "*(" + signed_sum(inner) + ")");
    }
  }
  items.insert(items.end(), extra.begin(), extra.end());
  return signed_sum(items);
}

}  // namespace jk

namespace jk {

namespace {

class KPolyParser {
 public:
  explicit KPolyParser(std::string_view s) : s_(s) {}

  KPoly parse() {
    KPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_kpoly: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  int exponent() { return eat('^') ? static_cast<int>(integer()) : 1; }

  KPoly expr() {
    KPoly acc;
    bool neg = eat('-');
    for (;;) {
      KPoly t = term();
      acc += neg ? t * FieldElem(-1) : t;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else return acc;
    }
  }
  KPoly term() {
    KPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  static KPoly power(const KPoly& x, int e) {
    KPoly r(FieldElem(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  }
  KPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      KPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return power(inner, exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long n = integer();
      const long d = eat('/') ? integer() : 1;
      if (d == 0) fail("zero denominator");
      return KPoly(FieldElem(make_rational(n, d)));
    }
    if (c == 'a' || c == 'b') {
      ++pos_;
      return power(KPoly(FieldElem::variable(c == 'a' ? Var::alpha : Var::beta)), exponent());
    }
    if (c == 'R') {
      ++pos_;
      const long k = integer();
      if (k < 1) fail("R index must be positive");
      const int e = exponent();
      if (k == 1) return KPoly();
      return KPoly::monomial(Partition(std::vector<int>(e, static_cast<int>(k))), FieldElem(1));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

KPoly parse_kpoly(std::string_view text) { return KPolyParser(text).parse(); }

}  // namespace jk
