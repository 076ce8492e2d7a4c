#include "jk/cumulants.hpp"

#include <mutex>

namespace jk {

namespace {

InvAlphaPoly inv_alpha_power(int k) { return MultiPoly::monomial(Monomial::of(Var::alpha, k)); }
InvAlphaPoly beta_power(int k) { return MultiPoly::monomial(Monomial::of(Var::beta, k)); }

bool only_var(const MultiPoly& p, Var v) {
  for (const Term& t : p.terms())
    for (int w = 0; w < kVarCount; ++w)
      if (w != static_cast<int>(v) && t.mono.exponent(w) > 0) return false;
  return true;
}

}  // namespace

FieldElem inv_alpha_to_field(const InvAlphaPoly& p) {
  const unsigned top = p.degree(Var::alpha);
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    const unsigned a = t.mono.exponent(Var::alpha);
    terms.push_back({t.mono.with_exponent(Var::alpha, top - a), t.coef});
  }
  return FieldElem::fraction(MultiPoly::from_terms(std::move(terms)),
                             MultiPoly::monomial(Monomial::of(Var::alpha, top)));
}

void add_to(NodeExpansion& e, int xpow, const Partition& sigma, const InvAlphaPoly& c) {
  if (c.is_zero() || sigma.multiplicity(1) > 0) return;
  auto [it, fresh] = e.emplace(std::make_pair(xpow, sigma), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

NodeExpansion multiply(const NodeExpansion& a, const NodeExpansion& b) {
  NodeExpansion out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      add_to(out, ka.first + kb.first, RPoly<Rational>::merge(ka.second, kb.second), ca * cb);
  return out;
}

NodeExpansion node_delta(int n) {
  NodeExpansion out;
  for (int r = 1; 2 * r <= n; ++r)
    for (int s = 0; 2 * r + s <= n; ++s)
      for (int t = 0; 2 * r + s + t <= n; ++t) {
        const Rational lead = Rational(binomial(n - t - 1, 2 * r + s - 1)) * Rational(binomial(r + s - 1, s)) *
                              Rational(binomial(n - 1, r)) * Rational((r + s) % 2 ? -1 : 1);
        if (lead == 0) continue;
        const InvAlphaPoly c = inv_alpha_power(r + s) * beta_power(s) * lead;
        const long m = 1 - n + t;  // at most -1
        for (const auto& sigma : enumerate(t, 2)) {
          const Rational w = Rational(stats(sigma).u) * Rational(binomial(m, sigma.length())) / Rational(m);
          add_to(out, n - 2 * r - s - t, sigma, c * w);
        }
      }
  return out;
}

BTable add_node_delta(const Partition& rho) {
  NodeExpansion prod;
  add_to(prod, 0, Partition{}, MultiPoly(1));
  for (int p : rho.parts()) {
    NodeExpansion f = node_delta(p);
    add_to(f, 0, Partition{p}, MultiPoly(1));
    prod = multiply(prod, f);
  }
  add_to(prod, 0, rho, MultiPoly(-1));
  BTable out{rho, {}};
  for (auto& [key, c] : prod) out.rows.emplace(std::make_pair(rho.weight() - key.first, key.second), std::move(c));
  return out;
}

const BTable& btable(const Partition& rho) {
  static std::mutex mu;
  static std::map<Partition, BTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rho);
  if (it == cache.end()) it = cache.emplace(rho, add_node_delta(rho)).first;
  return it->second;
}

std::map<std::pair<int, Partition>, InvAlphaPoly> leading_stratum(const Partition& rho) {
  NodeExpansion acc;
  const int w = rho.weight();
  int prev = 0;
  for (int p : rho.parts()) {
    if (p == prev) continue;
    prev = p;
    const Partition rest = remove_part(rho, p);
    const Rational mult(rho.multiplicity(p) * (p - 1));
    for (int k2 = 2; k2 <= p; ++k2)
      for (const auto& nu : enumerate(k2 - 2, 2)) {
        const Rational c = mult * Rational(binomial(k2 - p - 1, nu.length())) * Rational(stats(nu).u);
        // key (k, sigma) with x power |rho| - k = p - k2
        add_to(acc, w - p + k2, RPoly<Rational>::merge(rest, nu), inv_alpha_power(1) * c);
      }
  }
  return {acc.begin(), acc.end()};
}

bool polynomial_in_inv_alpha(const FieldElem& f) {
  const MultiPoly& den = f.den();
  if (!den.is_monomial() || !only_var(den, Var::alpha) || !only_var(f.num(), Var::alpha)) return false;
  return f.num().is_zero() || f.num().degree(Var::alpha) <= den.degree(Var::alpha);
}

bool nonnegative_in_minus_inv_alpha(const FieldElem& minus_r) {
  if (!polynomial_in_inv_alpha(minus_r)) return false;
  const Rational lead = minus_r.den().leading().coef;
  const unsigned m = minus_r.den().degree(Var::alpha);
  for (const Term& t : minus_r.num().terms()) {
    // c alpha^e / (lead alpha^m) = c/lead (-1)^{m-e} (-1/alpha)^{m-e}
    const unsigned j = m - t.mono.exponent(Var::alpha);
    const Rational d = t.coef / lead * Rational(j % 2 ? -1 : 1);
    if (d < 0 || d.get_den() != 1) return false;
  }
  return true;
}

bool nonnegative_integer_polynomial(const FieldElem& f) {
  if (!f.den().is_constant()) return false;
  const Rational d = f.den().constant_value();
  for (const Term& t : f.num().terms()) {
    const Rational c = t.coef / d;
    if (c < 0 || c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace jk
