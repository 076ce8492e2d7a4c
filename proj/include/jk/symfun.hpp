#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jk/field.hpp"
#include "jk/partition.hpp"
#include "jk/series.hpp"

namespace jk {

// Formal difference plus - minus of two finite multisets.
template <class S>
struct SignedAlphabet {
  std::vector<S> plus;
  std::vector<S> minus;

  // h_0..h_N from H_t = prod_plus (1 - t a)^{-1} * prod_minus (1 - t b).
  std::vector<S> h(int n) const {
    TruncSeries<S> num = TruncSeries<S>::one(n), den = TruncSeries<S>::one(n);
    for (const auto& b : minus) num = num * linear(n, -b);
    for (const auto& a : plus) den = den * linear(n, -a);
    return (num * den.reciprocal()).coeffs();
  }
  // e_0..e_N from E_t = prod_plus (1 + t a) / prod_minus (1 + t b).
  std::vector<S> e(int n) const {
    TruncSeries<S> num = TruncSeries<S>::one(n), den = TruncSeries<S>::one(n);
    for (const auto& a : plus) num = num * linear(n, a);
    for (const auto& b : minus) den = den * linear(n, b);
    return (num * den.reciprocal()).coeffs();
  }
  // p_0..p_N; p_0 is card(plus) - card(minus).
  std::vector<S> p(int n) const {
    std::vector<S> out(n + 1);
    out[0] = S(static_cast<long>(plus.size()) - static_cast<long>(minus.size()));
    for (int k = 1; k <= n; ++k) {
      S acc;
      for (const auto& a : plus) acc += power(a, k);
      for (const auto& b : minus) acc -= power(b, k);
      out[k] = acc;
    }
    return out;
  }
  S e1() const { return p(1)[1]; }

 private:
  static TruncSeries<S> linear(int n, const S& c) {
    TruncSeries<S> s = TruncSeries<S>::one(n);
    if (n >= 1) s[1] = c;
    return s;
  }
  static S power(const S& x, int k) {
    S r(1);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
  }
};

template <class S>
struct HEP {
  S h, e, p;
};

template <class S>
HEP<S> hep(const SignedAlphabet<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("hep: negative degree");
  return {a.h(n)[n], a.e(n)[n], a.p(n)[n]};
}

// f_mu = prod_i f_{mu_i} from f_0..f_N.
template <class S>
S product_over(const std::vector<S>& f, const Partition& mu) {
  S r(1);
  for (int part : mu.parts()) r = r * f[part];
  return r;
}

template <class S>
S rational_scalar(const Integer& z) {
  return S(Rational(z));
}

// Newton: n h_n = sum_{k=1}^n p_k h_{n-k}, and (-1)^{k-1} k e_k likewise.
template <class S>
std::vector<S> h_from_p(const std::vector<S>& p) {
  std::vector<S> h(p.size());
  h[0] = S(1);
  for (std::size_t n = 1; n < p.size(); ++n) {
    S acc;
    for (std::size_t k = 1; k <= n; ++k) acc += p[k] * h[n - k];
    h[n] = acc * S(make_rational(1, static_cast<long>(n)));
  }
  return h;
}

template <class S>
std::vector<S> p_from_h(const std::vector<S>& h) {
  std::vector<S> p(h.size());
  for (std::size_t n = 1; n < h.size(); ++n) {
    S acc = S(static_cast<long>(n)) * h[n];
    for (std::size_t k = 1; k < n; ++k) acc -= p[k] * h[n - k];
    p[n] = acc;
  }
  return p;
}

// E_t = 1 / H_{-t}.
template <class S>
std::vector<S> e_from_h(const std::vector<S>& h) {
  const int n = static_cast<int>(h.size()) - 1;
  TruncSeries<S> s(n);
  for (int k = 0; k <= n; ++k) s[k] = k % 2 ? -h[k] : h[k];
  return s.reciprocal().coeffs();
}

enum class ScaledKind { h, e };

// h_n(xA) or e_n(xA) from the power-sum expansion.
template <class S>
S scaled_power_sum(const SignedAlphabet<S>& a, const S& x, int n, ScaledKind kind) {
  const auto p = a.p(n);
  S total;
  for (const auto& mu : enumerate(n)) {
    S term = product_over(p, mu) / rational_scalar<S>(stats(mu).z);
    for (int i = 0; i < mu.length(); ++i) term = term * x;
    if (kind == ScaledKind::e && (n - mu.length()) % 2) term = -term;
    total += term;
  }
  return total;
}

// h_n(xA) = sum binom(x, l) u_mu h_mu(A); e_n(xA) likewise with e.
template <class S>
S scaled_binomial(const SignedAlphabet<S>& a, const S& x, int n, ScaledKind kind) {
  const auto f = kind == ScaledKind::h ? a.h(n) : a.e(n);
  S total;
  for (const auto& mu : enumerate(n))
    total += binomial_poly(x, mu.length()) * rational_scalar<S>(stats(mu).u) * product_over(f, mu);
  return total;
}

// Both expansions; throws std::logic_error if they disagree.
template <class S>
S scaled(const SignedAlphabet<S>& a, const S& x, int n, ScaledKind kind) {
  if (n < 0) throw std::invalid_argument("scaled: negative degree");
  S v = scaled_power_sum(a, x, n, kind);
  if (!(v == scaled_binomial(a, x, n, kind))) throw std::logic_error("scaled: expansions disagree");
  return v;
}

enum class StarKind { h, e, p };

// h*_0..h*_N from the compositional inverse t = u H*_u of u = t H_t.
template <class S>
std::vector<S> h_star(const SignedAlphabet<S>& a, int n) {
  TruncSeries<S> u(a.h(n), 1);
  return u.compositional_inverse().coeffs();
}

template <class S>
std::vector<S> star_values(const SignedAlphabet<S>& a, int n, StarKind kind) {
  auto hs = h_star(a, n);
  switch (kind) {
    case StarKind::h: return hs;
    case StarKind::e: return e_from_h(hs);
    case StarKind::p: return p_from_h(hs);
  }
  return hs;
}

template <class S>
S star(const SignedAlphabet<S>& a, int n, StarKind kind) {
  if (n < 0) throw std::invalid_argument("star: negative degree");
  return star_values(a, n, kind)[n];
}

enum class CheckStatus { pass, fail, skipped };

struct IdentityCheck {
  std::string id;
  int n = 0;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  std::string reason;
};

inline const char* to_string(CheckStatus s) {
  return s == CheckStatus::pass ? "pass" : s == CheckStatus::fail ? "fail" : "skipped";
}

namespace detail {

template <class S>
IdentityCheck compare(std::string id, int n, const S& lhs, const S& rhs) {
  IdentityCheck c{std::move(id), n, lhs == rhs ? CheckStatus::pass : CheckStatus::fail, to_text(lhs), to_text(rhs), {}};
  return c;
}

template <class S>
S quot(const S& a, const S& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return a / b;
}

inline IdentityCheck skipped(std::string id, int n, std::string reason) {
  return {std::move(id), n, CheckStatus::skipped, {}, {}, std::move(reason)};
}

}  // namespace detail

// The four sums over h_k(-(z+k)A) h_{n-k}(...) and their four images under
// the Lagrange involution. Each left side is evaluated at z and at z + 1;
// an identity passes when both equal the z-free right side.
template <class S>
std::vector<IdentityCheck> check_identities(const SignedAlphabet<S>& a, const S& z, int n) {
  if (n < 0) throw std::invalid_argument("check_identities: negative degree");
  std::vector<IdentityCheck> out;
  const auto e = a.e(n);
  const auto es = star_values(a, n, StarKind::e);
  const bool centered = is_zero(a.e1());
  auto hx = [&](const S& x, int k) { return scaled_power_sum(a, x, k, ScaledKind::h); };
  const S sign = n % 2 ? S(-1) : S(1);
  S rhs3, rhs4, rhs3s, rhs4s;
  for (const auto& rho : enumerate(n)) {
    const auto st = stats(rho);
    const S vu = rational_scalar<S>(st.v * st.u);
    rhs3 += vu * product_over(e, rho);
    rhs3s += vu * product_over(es, rho);
    if (rho.length() > 0) {
      const S wu = S(st.w * Rational(st.u) / Rational(rho.length()));
      rhs4 += wu * product_over(e, rho);
      rhs4s += wu * product_over(es, rho);
    }
  }
  rhs3 *= sign;
  rhs4 *= sign;
  rhs3s *= sign;
  rhs4s *= sign;

  struct Family {
    std::string id;
    std::function<S(const S&)> lhs;  // throws std::domain_error on a pole
    S rhs;
    bool needs_center;
    bool needs_positive_n;
  };
  std::vector<Family> fam;
  fam.push_back({"cauchy_1", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k) s += detail::quot<S>(w, w + S(k)) * hx(-(w + S(k)), k) * hx(w + S(k - 1), n - k);
                   return s;
                 }, sign * e[n], false, false});
  fam.push_back({"cauchy_2", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k) s += detail::quot<S>(S(1), w + S(k)) * hx(-(w + S(k)), k) * hx(w + S(k), n - k);
                   return s;
                 }, S(0), false, true});
  fam.push_back({"cauchy_3", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k) s += hx(-(w + S(k)), k) * hx(w + S(k + 1), n - k);
                   return s;
                 }, rhs3, false, false});
  fam.push_back({"cauchy_4", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k) s += hx(-(w + S(k)), k) * hx(w + S(k), n - k);
                   return s;
                 }, rhs4, true, true});
  fam.push_back({"lagrange_1", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k)
                     s += detail::quot<S>(w + S(k - 1), w + S(n - 1)) * hx(w, k) * hx(-(w + S(n - 1)), n - k);
                   return s;
                 }, sign * es[n], false, false});
  fam.push_back({"lagrange_2", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k) s += (w + S(k)) * hx(w, k) * hx(-(w + S(n)), n - k);
                   return s;
                 }, S(0), false, true});
  fam.push_back({"lagrange_3", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k)
                     s += detail::quot<S>((w + S(k)) * (w + S(k + 1)), w * (w + S(n + 1))) * hx(w, k) * hx(-(w + S(n + 1)), n - k);
                   return s;
                 }, rhs3s, false, false});
  fam.push_back({"lagrange_4", [&](const S& w) {
                   S s;
                   for (int k = 0; k <= n; ++k)
                     s += detail::quot<S>((w + S(k)) * (w + S(k)), w * (w + S(n))) * hx(w, k) * hx(-(w + S(n)), n - k);
                   return s;
                 }, rhs4s, true, true});

  for (const auto& f : fam) {
    if (f.needs_center && !centered) {
      out.push_back(detail::skipped(f.id, n, "requires e_1(A) = 0"));
      continue;
    }
    if (f.needs_positive_n && n == 0) {
      out.push_back(detail::skipped(f.id, n, "stated for n >= 1"));
      continue;
    }
    try {
      S l0 = f.lhs(z);
      S l1 = f.lhs(z + S(1));
      IdentityCheck c = detail::compare(f.id, n, l0, f.rhs);
      if (!(l1 == f.rhs)) {
        c.status = CheckStatus::fail;
        c.reason = "left side at z + 1 differs: " + to_text(l1);
      }
      out.push_back(std::move(c));
    } catch (const std::domain_error& err) {
      out.push_back(detail::skipped(f.id, n, std::string("pole at the chosen z: ") + err.what()));
    }
  }
  return out;
}

// sum_{i+j+k=n} (-1)^i i h_i e_j e_k = -n e_n, and the two expansions of the
// i^2 variant.
template <class S>
std::vector<IdentityCheck> prop9_check(const SignedAlphabet<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("prop9_check: negative degree");
  const auto h = a.h(n), e = a.e(n), p = a.p(n);
  S s1, s2;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const int k = n - i - j;
      S t = h[i] * e[j] * e[k];
      if (i % 2) t = -t;
      s1 += S(i) * t;
      s2 += S(i * i) * t;
    }
  S mid, right;
  for (const auto& rho : enumerate(n)) {
    const auto st = stats(rho);
    const S sgn = (n - rho.length()) % 2 ? S(-1) : S(1);
    const S p2 = S(static_cast<long>(rho.sum_of_squares()));
    mid += sgn * (S(n * n) - S(2) * p2) * product_over(p, rho) / rational_scalar<S>(st.z);
    right -= sgn * p2 * rational_scalar<S>(st.u) * product_over(h, rho);
  }
  std::vector<IdentityCheck> out;
  out.push_back(detail::compare<S>("linear", n, s1, -S(n) * e[n]));
  out.push_back(detail::compare<S>("quadratic_power_sums", n, s2, mid));
  out.push_back(detail::compare<S>("quadratic_complete", n, s2, right));
  return out;
}

}  // namespace jk
