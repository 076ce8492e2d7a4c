#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jk/cumulants.hpp"
#include "jk/field.hpp"
#include "jk/linsolve.hpp"
#include "jk/partition.hpp"
#include "jk/rpoly.hpp"

namespace jk {

// Polynomial in free cumulants with coefficients in Q[alpha, beta].
using KPoly = RPoly<FieldElem>;

// c(alpha, beta) at a point.
template <class S>
S specialize(const FieldElem& c, const S& alpha, const S& beta) {
  const std::array<S, kVarCount> v{alpha, beta, S(0), S(0)};
  return evaluate<S>(c.num(), v) / evaluate<S>(c.den(), v);
}

template <class S>
RPoly<S> specialize(const KPoly& k, const S& alpha, const S& beta) {
  RPoly<S> out;
  for (const auto& [rho, c] : k.terms()) out.add(rho, specialize<S>(c, alpha, beta));
  return out;
}

// Contributions of one unknown a_rho to the two equations: coefficient of
// each R-monomial in sum_k M_{|rho|-k+e} sum_sigma b_{k,sigma}(rho) R_sigma,
// e = 0 for the first equation and e = 1 for the second.
struct KerovColumn {
  std::map<Partition, InvAlphaPoly> first, second;
};
// Memoized; safe for concurrent callers.
const KerovColumn& kerov_column(const Partition& rho);

// Unknowns of K_mu: parts in [2, |mu|-l(mu)+2+extra], weight in [1, |mu|+l(mu)+extra].
std::vector<Partition> kerov_support(const Partition& mu, int extra = 0);

// Equation rows: weight descending, reverse lexicographic within a weight.
struct MonomialOrder {
  bool operator()(const std::pair<int, Partition>& a, const std::pair<int, Partition>& b) const {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.weight() != b.second.weight()) return a.second.weight() > b.second.weight();
    return b.second < a.second;
  }
};

template <class S>
struct KerovSystem {
  std::vector<std::pair<int, Partition>> rows;  // (equation, R-monomial)
  Matrix<S> a;
  std::vector<S> b;
};

// The linear system for the coefficients a_rho of K_mu at (alpha, beta); rhs
// is the right-hand side of the second equation.
template <class S>
KerovSystem<S> kerov_system(const std::vector<Partition>& support, const S& alpha, const S& beta,
                            const RPoly<S>& rhs) {
  std::set<std::pair<int, Partition>, MonomialOrder> keys;
  for (const auto& rho : support) {
    const auto& col = kerov_column(rho);
    for (const auto& [m, c] : col.first) keys.emplace(0, m);
    for (const auto& [m, c] : col.second) keys.emplace(1, m);
  }
  for (const auto& [m, c] : rhs.terms()) keys.emplace(1, m);
  KerovSystem<S> sys;
  sys.rows.assign(keys.begin(), keys.end());
  std::map<std::pair<int, Partition>, std::size_t> index;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) index.emplace(sys.rows[i], i);
  sys.a.assign(sys.rows.size(), std::vector<S>(support.size(), S(0)));
  sys.b.assign(sys.rows.size(), S(0));
  for (std::size_t j = 0; j < support.size(); ++j) {
    const auto& col = kerov_column(support[j]);
    for (const auto& [m, c] : col.first) sys.a[index.at({0, m})][j] = evaluate_inv_alpha(c, alpha, beta);
    for (const auto& [m, c] : col.second) sys.a[index.at({1, m})][j] = evaluate_inv_alpha(c, alpha, beta);
  }
  for (const auto& [m, c] : rhs.terms()) sys.b[index.at({1, m})] = c;
  return sys;
}

// Right-hand side 2(alpha R_2 - |mu| + 2) m_2 K_{mu\2} + sum_{r>=3} r m_r K_{mu down r},
// given the lower polynomials already specialized.
template <class S>
RPoly<S> kerov_rhs(const Partition& mu, const S& alpha, const std::function<RPoly<S>(const Partition&)>& lower) {
  RPoly<S> out;
  int prev = 0;
  for (int r : mu.parts()) {
    if (r == prev) continue;
    prev = r;
    const int m = mu.multiplicity(r);
    if (r == 2) {
      RPoly<S> f = RPoly<S>::monomial(Partition{2}, alpha) + RPoly<S>(S(2 - mu.weight()));
      out += f * lower(remove_part(mu, 2)) * S(2 * m);
    } else {
      out += lower(down(mu, r)) * S(r * m);
    }
  }
  return out;
}

enum class Engine {
  symbolic,       // one solve over Q(alpha, beta)
  interpolation,  // exact solves at rational points, then interpolation
};

const char* to_string(Engine e);

class KerovError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// K_mu for partitions without part 1, built by induction on |mu| - l(mu).
// Results are memoized; one solver may be shared between threads.
class KerovSolver {
 public:
  explicit KerovSolver(Engine engine = Engine::interpolation) : engine_(engine) {}

  Engine engine() const { return engine_; }
  const KPoly& K(const Partition& mu);
  // K_2, ..., K_{r_max}.
  std::vector<KPoly> rows(int r_max);
  // The cumulant-like family inverse to products over set partitions of parts.
  const KPoly& tilde(const Partition& mu);
  // Stores a known K_mu (for example from a cache); existing values win.
  void seed(const Partition& mu, KPoly k);
  bool has(const Partition& mu);

  // Solves the system at one point, with the support enlarged by `extra`.
  SolveReport<Rational> solve_at(const Partition& mu, const Rational& alpha, const Rational& beta, int extra = 0);
  // True when enlarging the support by one weight only adds zero coefficients
  // and leaves the others unchanged.
  bool support_is_tight(const Partition& mu);

 private:
  KPoly compute(const Partition& mu);
  KPoly compute_symbolic(const Partition& mu);
  KPoly compute_interpolated(const Partition& mu);

  Engine engine_;
  std::recursive_mutex mutex_;
  std::map<Partition, KPoly> k_;
  std::map<Partition, KPoly> tilde_;
};

// Coefficient polynomials sum_{2a+b=D} c_{ab} alpha^a beta^b recovered from
// their values at beta = 1 and the given alphas.
std::vector<FieldElem> interpolate_weighted(const std::vector<int>& degrees, const std::vector<Rational>& alphas,
                                            const std::vector<std::vector<Rational>>& values);

// A polynomial in alpha, beta with integer coefficients.
bool integer_polynomial(const FieldElem& c);

// ---------------------------------------------------------------------------
// Fits against Jack coefficients computed directly.

struct ZetaEta {
  Rational zeta, eta;
  Rational alpha() const { return Rational(-1 / (zeta * eta)); }
  Rational beta() const { return Rational(1 / zeta + 1 / eta); }
};

// Points with beta = 1: eta = zeta/(zeta - 1).
std::vector<ZetaEta> unit_beta_points(std::size_t count);

// K_mu fitted from vartheta^lambda_mu and R_rho(lambda) over all lambda with
// |mu| <= |lambda| <= max_weight; the constant term is a free unknown.
KPoly interpolation_oracle_K(const Partition& mu, int max_weight);

// The fitted coefficients at one (zeta, eta) point: a_rho in kerov_support
// order, preceded by the constant term.
std::vector<Rational> oracle_values_at(const Partition& mu, int max_weight, const ZetaEta& point);

// vartheta^lambda_mu as a polynomial in binomial(|lambda|, k) p_rho(C_lambda),
// C_lambda the (zeta, eta)-contents of lambda; key (k, rho).
struct ContentFit {
  Partition mu;
  std::map<std::pair<int, Partition>, FieldElem> coeffs;
};
ContentFit content_fit(const Partition& mu, int max_weight);
std::string to_text(const ContentFit& f);

// ---------------------------------------------------------------------------
// Grading by powers of alpha and beta.

struct GradedComponent {
  int i = 0, j = 0;
  RPoly<Rational> poly;
};

struct Grading {
  int top = 0;  // exponent of alpha for i = 0
  std::vector<GradedComponent> components;  // sorted by (i, j)
  std::vector<std::string> violations;
  const RPoly<Rational>* find(int i, int j) const;
};

// Component (i, j) is the coefficient of alpha^{top-i} beta^j; top is
// |mu| - l(mu) + 1, so r for K_r. Reports non-polynomial coefficients,
// indices outside 0 <= j <= i, 2i - j <= top - 1, and components that are
// not of weight top + 1 - 2i + j.
Grading grade(const KPoly& k, int top);
KPoly reassemble(const Grading& g);

// ---------------------------------------------------------------------------
// The bases Q_n = sum_{|rho|=n} (l-1)! cR_rho and C_n = sum l! cR_rho, with
// cR_rho = prod_i ((i-1) R_i)^{m_i} / m_i!.

enum class Basis { R, Q, C };
const char* to_string(Basis b);

// X_n of basis `of` written in basis `in`.
const RPoly<Rational>& basis_element(Basis of, Basis in, int n);

template <class S>
RPoly<S> change_basis(const RPoly<S>& p, Basis from, Basis to) {
  if (from == to) return p;
  RPoly<S> out;
  for (const auto& [rho, c] : p.terms()) {
    RPoly<Rational> t(Rational(1));
    for (int k : rho.parts()) t = t * basis_element(from, to, k);
    for (const auto& [sigma, d] : t.terms()) out.add(sigma, c * S(d));
  }
  return out;
}

// prod_i m_i(rho)!
Rational multiplicity_factorial(const Partition& rho);

// Monomial symmetric function m_kappa evaluated at the vector x.
Rational monomial_value(const Partition& kappa, const std::vector<int>& x);

// ---------------------------------------------------------------------------
// Structure functions: K_r^{(i,j)} = s(r) sum_rho N(rho) f(rho) X_rho with
// X = cR (side R, N = (l + 2i - j - 2)!) or X = cQ (side Q, N = (2i-j-1)^l),
// and s(r) = r or binomial(r+1, 3).

enum class FitSide { R, Q };
enum class FitScale { r, binomial };

struct SymFunFit {
  int i = 0, j = 0;
  FitSide side = FitSide::R;
  FitScale scale = FitScale::r;
  int max_degree = 0;
  std::map<Partition, Rational> coeffs;  // m_kappa -> coefficient
  std::vector<int> r_used;
  Rational value(const Partition& rho) const;
};

class FitError : public std::runtime_error {
 public:
  FitError(const std::string& what, std::string witness) : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// components[r] = K_r^{(i,j)}. Throws FitError on rank deficiency or
// inconsistency.
SymFunFit fit_structure_function(int i, int j, FitSide side, FitScale scale,
                                 const std::map<int, RPoly<Rational>>& components);
// The component the fit predicts for r.
RPoly<Rational> predict_component(const SymFunFit& fit, int r);

// ---------------------------------------------------------------------------
// Claims checked over computed polynomials.

struct ClaimResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
};

struct VerifyConfig {
  std::vector<std::string> claims;  // empty: all
  int r_max = 9;
  int tilde_weight = 7;
};

const std::vector<std::pair<std::string, std::string>>& claim_catalog();
std::vector<ClaimResult> verify(KerovSolver& solver, const VerifyConfig& config);

// ---------------------------------------------------------------------------
// Rendering.

// "a^2*R3 + a*b*R2": grouped by alpha^a beta^b, a then b descending.
std::string render_text(const KPoly& k);
// Plain term list, e.g. "R4^2 + 2*R3*R2" in the given basis letter.
template <class S>
std::string render_terms(const RPoly<S>& p, char letter = 'R');
std::string monomial_name(const Partition& rho, char letter = 'R');
// Inverse of render_text; also accepts grouped forms such as
// "(5*a^3 + 11*a^2*b^2)*R3" and rationals "3/2". Throws std::invalid_argument.
KPoly parse_kpoly(std::string_view text);

}  // namespace jk
