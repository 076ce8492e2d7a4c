#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jk/field.hpp"
#include "jk/jack.hpp"
#include "jk/mode.hpp"
#include "jk/partition.hpp"
#include "jk/rpoly.hpp"
#include "jk/series.hpp"
#include "jk/symfun.hpp"

namespace jk {

// Contents of the inside corners x_1..x_d and outside corners y_1..y_{d-1}
// of the anisotropic diagram, coincident pairs x_k = y_{k-1} removed.
template <class S>
struct Corners {
  std::vector<S> x;
  std::vector<S> y;
};

// x_k = (k-1) eta + lambda'_k zeta, y_k = k eta + lambda'_k zeta; in alpha
// mode these are k - 1 - lambda'_k/alpha and k - lambda'_k/alpha.
template <class S>
Corners<S> corners(const Partition& lambda, const Mode<S>& mode) {
  const Partition c = lambda.conjugate();
  const int d = lambda.largest() + 1;
  Corners<S> out;
  for (int k = 1; k <= d; ++k) {
    if (k >= 2 && c.part(k) == c.part(k - 1)) {
      out.y.pop_back();
    } else {
      out.x.push_back(S(k - 1) * mode.eta + S(c.part(k)) * mode.zeta);
    }
    if (k < d) out.y.push_back(S(k) * mode.eta + S(c.part(k)) * mode.zeta);
  }
  S center;
  for (const auto& v : out.x) center += v;
  for (const auto& v : out.y) center -= v;
  if (!is_zero(center)) throw std::logic_error("corners: nonzero center for " + lambda.to_string());
  return out;
}

// A_lambda = I_lambda - O_lambda.
template <class S>
SignedAlphabet<S> corner_alphabet(const Corners<S>& c) {
  return {c.x, c.y};
}

enum class CumulantKind { M, B, R };

inline const char* to_string(CumulantKind k) { return k == CumulantKind::M ? "M" : k == CumulantKind::B ? "B" : "R"; }

// values[k] for k = 0..N; values[0] is 1 for moments and 0 for cumulants.
template <class S>
struct CumulantVector {
  CumulantKind kind = CumulantKind::M;
  std::vector<S> values;
  int order() const { return static_cast<int>(values.size()) - 1; }
  const S& operator[](int k) const { return values[k]; }
};

// M_k as coefficients of the product over nodes of lambda of
// (z - c)(z - c - zeta - eta) / ((z - c - zeta)(z - c - eta)), c the content.
template <class S>
CumulantVector<S> moment_series(const Partition& lambda, int n, const Mode<S>& mode) {
  if (n < 0) throw std::invalid_argument("moment_series: negative order");
  TruncSeries<S> num = TruncSeries<S>::one(n), den = TruncSeries<S>::one(n);
  auto factor = [n](const S& root) {
    TruncSeries<S> s = TruncSeries<S>::one(n);
    if (n >= 1) s[1] = -root;
    return s;
  };
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const S c = S(j - 1) * mode.eta + S(i - 1) * mode.zeta;
      num = num * factor(c) * factor(c + mode.zeta + mode.eta);
      den = den * factor(c + mode.zeta) * factor(c + mode.eta);
    }
  return {CumulantKind::M, (num * den.reciprocal()).coeffs()};
}

// M_k = sum_i c_i(lambda) x_i^k with the Pieri coefficients as probabilities.
template <class S>
CumulantVector<S> moments_via_probabilities(const Partition& lambda, int n, const Mode<S>& mode) {
  const auto pr = pieri(lambda, mode);
  CumulantVector<S> out{CumulantKind::M, std::vector<S>(n + 1)};
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    const S& c = pr.c[i - 1];
    if (is_zero(c)) continue;
    const S x = mode.x(lambda, i);
    S pw = c;
    for (int k = 0; k <= n; ++k) {
      out.values[k] += pw;
      pw = pw * x;
    }
  }
  return out;
}

// M_k = h_k(A_lambda).
template <class S>
CumulantVector<S> moments_via_corners(const Partition& lambda, int n, const Mode<S>& mode) {
  return {CumulantKind::M, corner_alphabet(corners(lambda, mode)).h(n)};
}

// Boolean cumulants from 1/H_t, free cumulants from the compositional inverse.
template <class S>
std::pair<CumulantVector<S>, CumulantVector<S>> cumulants_from_moments(const CumulantVector<S>& m) {
  if (m.kind != CumulantKind::M) throw std::invalid_argument("cumulants_from_moments: expected moments");
  const int n = m.order();
  TruncSeries<S> h(m.values, 0);
  auto inv = h.reciprocal();
  CumulantVector<S> b{CumulantKind::B, std::vector<S>(n + 1)};
  for (int k = 1; k <= n; ++k) b.values[k] = -inv[k];
  // u = t H_t; its inverse is t = u G(u), and R(u) = u^{-1} / G(u).
  TruncSeries<S> u(m.values, 1);
  TruncSeries<S> g(u.compositional_inverse().coeffs(), 0);
  auto rg = g.reciprocal();
  CumulantVector<S> r{CumulantKind::R, std::vector<S>(n + 1)};
  for (int k = 1; k <= n; ++k) r.values[k] = rg[k];
  return {b, r};
}

template <class S>
CumulantVector<S> free_cumulants(const Partition& lambda, int n, const Mode<S>& mode) {
  return cumulants_from_moments(moment_series(lambda, n, mode)).second;
}

namespace detail {

// f_mu with f given by values[0..N].
template <class S>
S product_of(const CumulantVector<S>& f, const Partition& mu) {
  S r(1);
  for (int p : mu.parts()) r = r * f.values[p];
  return r;
}

inline Rational u_of(const Partition& mu) { return Rational(stats(mu).u); }

}  // namespace detail

// The six closed-form conversions among moments, Boolean and free cumulants.
template <class S>
CumulantVector<S> convert(const CumulantVector<S>& from, CumulantKind to) {
  const int n_max = from.order();
  if (from.kind == to) return from;
  CumulantVector<S> out{to, std::vector<S>(n_max + 1)};
  if (to == CumulantKind::M) out.values[0] = S(1);
  for (int n = 1; n <= n_max; ++n) {
    S acc;
    const auto parts = enumerate(n);
    auto sum = [&](auto weight) {
      S s;
      for (const auto& mu : parts) {
        const Rational w = weight(mu);
        if (w == 0) continue;
        s += S(w) * detail::product_of(from, mu);
      }
      return s;
    };
    const long l1 = n - 1;
    using FK = CumulantKind;
    if (from.kind == FK::M && to == FK::B) {
      acc = -sum([](const Partition& mu) -> Rational { return Rational(mu.length() % 2 ? -1 : 1) * detail::u_of(mu); });
    } else if (from.kind == FK::B && to == FK::M) {
      acc = sum([](const Partition& mu) -> Rational { return detail::u_of(mu); });
    } else if (from.kind == FK::R && to == FK::M) {
      acc = sum([n](const Partition& mu) -> Rational { return Rational(binomial(n + 1, mu.length())) * detail::u_of(mu); }) /
            S(n + 1);
    } else if (n == 1) {
      acc = from.values[1];
    } else if (from.kind == FK::R && to == FK::B) {
      acc = sum([l1](const Partition& mu) -> Rational { return Rational(binomial(l1, mu.length())) * detail::u_of(mu); }) / S(l1);
    } else if (from.kind == FK::B && to == FK::R) {
      acc = -sum([l1](const Partition& mu) -> Rational {
              return Rational(mu.length() % 2 ? -1 : 1) * Rational(binomial(l1, mu.length())) * detail::u_of(mu);
            }) / S(l1);
    } else {  // M -> R
      acc = -sum([n](const Partition& mu) -> Rational {
              return Rational(mu.length() % 2 ? -1 : 1) * Rational(binomial(n + mu.length() - 2, mu.length())) *
                     detail::u_of(mu);
            }) / S(n - 1);
    }
    out.values[n] = acc;
  }
  return out;
}

// M_n as a polynomial in free cumulants: (n+1) M_n = sum C(n+1, l) u_mu R_mu.
template <class S>
RPoly<S> moment_in_free_cumulants(int n) {
  if (n == 0) return RPoly<S>(S(1));
  RPoly<S> r;
  for (const auto& mu : enumerate(n, 2))
    r.add(mu, S(Rational(binomial(n + 1, mu.length())) * detail::u_of(mu) / Rational(n + 1)));
  return r;
}

// ---------------------------------------------------------------------------
// Adding a node. Coefficients live in Q[1/alpha, beta]: a MultiPoly in which
// Var::alpha stands for 1/alpha and Var::beta for beta.
using InvAlphaPoly = MultiPoly;

FieldElem inv_alpha_to_field(const InvAlphaPoly& p);

template <class S>
S evaluate_inv_alpha(const InvAlphaPoly& p, const S& alpha, const S& beta) {
  return evaluate<S>(p, {S(1) / alpha, beta, S(0), S(0)});
}

// Polynomial in x_i and the R_k(lambda): key (power of x_i, sigma).
using NodeExpansion = std::map<std::pair<int, Partition>, InvAlphaPoly>;

void add_to(NodeExpansion& e, int xpow, const Partition& sigma, const InvAlphaPoly& c);
NodeExpansion multiply(const NodeExpansion& a, const NodeExpansion& b);

// R_n(lambda^(i)) - R_n(lambda) as a polynomial in x_i and the R_k(lambda).
NodeExpansion node_delta(int n);

// R_rho(lambda^(i)) - R_rho(lambda) = sum_k x_i^{|rho|-k} sum_sigma b_{k,sigma}(rho) R_sigma.
struct BTable {
  Partition rho;
  std::map<std::pair<int, Partition>, InvAlphaPoly> rows;  // (k, sigma) -> b_{k,sigma}(rho)
};

BTable add_node_delta(const Partition& rho);
// Memoized; safe for concurrent callers.
const BTable& btable(const Partition& rho);

// Closed form of the |sigma| = k - 2 rows of the table for rho.
std::map<std::pair<int, Partition>, InvAlphaPoly> leading_stratum(const Partition& rho);

template <class S>
S evaluate(const NodeExpansion& e, const S& x, const std::vector<S>& r, const S& alpha, const S& beta) {
  S total;
  for (const auto& [key, c] : e) {
    S t = evaluate_inv_alpha(c, alpha, beta);
    for (int k = 0; k < key.first; ++k) t = t * x;
    for (int p : key.second.parts()) t = t * r[p];
    total += t;
  }
  return total;
}

// -R expressed in -1/alpha has nonnegative integer coefficients (r in alpha mode).
bool nonnegative_in_minus_inv_alpha(const FieldElem& minus_r);
// A polynomial in zeta, eta with nonnegative integer coefficients.
bool nonnegative_integer_polynomial(const FieldElem& f);
// A polynomial in 1/alpha.
bool polynomial_in_inv_alpha(const FieldElem& f);

// The four moment/free-cumulant identities obtained from the Lagrange images
// of the Cauchy identity families, for 2 <= n <= n_max.
template <class S>
std::vector<IdentityCheck> identity_suite(const Partition& lambda, int n_max, const Mode<S>& mode) {
  const auto m = moment_series(lambda, n_max, mode);
  const auto r = cumulants_from_moments(m).second;
  // T(j, k) = sum_{|mu| = j} C(-k, l) u_mu R_mu
  auto t = [&](int j, int k) {
    S s;
    for (const auto& mu : enumerate(j)) {
      const Rational w = Rational(binomial(-k, mu.length())) * detail::u_of(mu);
      if (w != 0) s += S(w) * detail::product_of(r, mu);
    }
    return s;
  };
  std::vector<IdentityCheck> out;
  for (int n = 2; n <= n_max; ++n) {
    S l1, l2, l3, l4, r3, r4;
    for (int k = 1; k <= n; ++k) {
      const S tk = t(n - k, k);
      l1 += m[k] * tk;
      l2 += m[k - 1] * tk;
      if (k >= 2) {
        l3 += S(k - 1) * m[k - 2] * tk;
        l4 += S(k - 1) * m[k - 1] * tk;
      }
    }
    for (const auto& rho : enumerate(n - 2)) {
      const auto st = stats(rho);
      r3 += S(Rational(st.v * st.u)) * detail::product_of(r, rho);
    }
    for (const auto& rho : enumerate(n - 1)) {
      const auto st = stats(rho);
      r4 += S(st.w * Rational(st.u) / Rational(rho.length())) * detail::product_of(r, rho);
    }
    out.push_back(detail::compare<S>("moments_1", n, l1, r[n]));
    out.push_back(detail::compare<S>("moments_2", n, l2, S(0)));
    out.push_back(detail::compare<S>("moments_3", n, l3, r3));
    out.push_back(detail::compare<S>("moments_4", n, l4, r4));
  }
  return out;
}

}  // namespace jk
