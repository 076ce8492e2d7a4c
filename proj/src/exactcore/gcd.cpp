// Multivariate gcd by recursive primitive polynomial remainder sequences.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jk/multipoly.hpp"

namespace jk {
namespace {

// Polynomial in one distinguished variable with coefficients free of it.
using Univariate = std::vector<MultiPoly>;

Univariate split(const MultiPoly& p, Var v) {
  Univariate u(p.degree(v) + 1);
  std::vector<std::vector<Term>> buckets(u.size());
  for (const auto& t : p.terms())
    buckets[t.mono.exponent(v)].push_back({t.mono.with_exponent(v, 0), t.coef});
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = MultiPoly::from_terms(std::move(buckets[k]));
  return u;
}

MultiPoly join(const Univariate& u, Var v) {
  MultiPoly p;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero()) p += u[k].mul_monomial(Monomial::of(v, static_cast<unsigned>(k)), 1);
  return p;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading().coef);
}

// Integer coefficients with content 1 and positive leading coefficient.
MultiPoly primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  if (p.leading().coef < 0) c = -c;
  return c == 1 ? p : p * Rational(1 / c);
}

MultiPoly exact(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const Univariate& u) {
  MultiPoly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive(c) : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Univariate divide_all(const Univariate& u, const MultiPoly& d) {
  if (d.is_constant()) {
    Univariate r = u;
    Rational inv = 1 / d.constant_value();
    for (auto& c : r) c *= inv;
    return r;
  }
  Univariate r;
  r.reserve(u.size());
  for (const auto& c : u) r.push_back(exact(c, d));
  return r;
}

// Removes the integer content shared by all coefficients.
void strip_integer_content(Univariate& u) {
  Integer g = 0;
  for (const auto& c : u)
    for (const auto& t : c.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  if (g <= 1) return;
  Rational inv(Integer(1), g);
  for (auto& c : u) c *= inv;
}

// lc(b)^k * a reduced modulo b, degree below deg b.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const MultiPoly& lb = b.back();
  std::size_t db = b.size() - 1;
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    MultiPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

// Largest absolute value of a coefficient of an integer polynomial.
Integer max_norm(const MultiPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms())
    if (abs(t.coef.get_num()) > m) m = abs(t.coef.get_num());
  return m;
}

MultiPoly substitute(const MultiPoly& p, Var v, const Integer& xi) {
  std::vector<Integer> powers{1};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    out.push_back({t.mono.with_exponent(v, 0), t.coef * Rational(powers[e])});
  }
  return MultiPoly::from_terms(std::move(out));
}

// Inverse of substitute for a polynomial whose coefficients, read in base xi
// with symmetric digits, are the coefficients in v.
MultiPoly xi_adic(MultiPoly gamma, Var v, const Integer& xi) {
  std::vector<Term> out;
  Integer half = xi / 2;
  for (unsigned i = 0; !gamma.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : gamma.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, Rational(r)});
    }
    MultiPoly d = MultiPoly::from_terms(digit);
    gamma -= d;
    gamma *= Rational(Integer(1), xi);
    for (auto& t : digit) out.push_back({t.mono.with_exponent(v, i), t.coef});
    if (i > 4096) break;
  }
  return MultiPoly::from_terms(std::move(out));
}

// Heuristic gcd of primitive integer polynomials; nullopt when it gives up.
// Returns the gcd over Z, integer content included.
std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a, const MultiPoly& b, int depth = 0) {
  if (a.is_constant() && b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_num_mpz_t(), b.constant_value().get_num_mpz_t());
    return MultiPoly(Rational(g));
  }
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  Var v = Var::alpha;
  for (int k = 0; k < kVarCount; ++k)
    if (a.has_var(static_cast<Var>(k)) || b.has_var(static_cast<Var>(k))) {
      v = static_cast<Var>(k);
      break;
    }
  Integer content_gcd;
  {
    Rational ca = a.content(), cb = b.content();
    mpz_gcd(content_gcd.get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
  }
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  unsigned dmin = std::min(a.degree(v), b.degree(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(a.total_degree(), b.total_degree()) > 400000)
      return std::nullopt;
    MultiPoly av = substitute(a, v, xi), bv = substitute(b, v, xi);
    if (!av.is_zero() && !bv.is_zero()) {
      auto gamma = gcd_heuristic(av, bv, depth + 1);
      if (gamma) {
        MultiPoly g = xi_adic(*gamma, v, xi);
        if (!g.is_zero() && g.degree(v) <= dmin) {
          g = primitive(g);
          if (divide_exact(a, g) && divide_exact(b, g)) return g * Rational(content_gcd);
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Result is primitive over Z.
MultiPoly gcd_rec(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero()) return primitive(b0);
  if (b0.is_zero()) return primitive(a0);
  if (a0.is_constant() || b0.is_constant()) return MultiPoly(1);
  if (a0.is_monomial() || b0.is_monomial()) {
    Monomial m = Monomial::min(a0.monomial_content(), b0.monomial_content());
    return MultiPoly::monomial(m);
  }
  MultiPoly a = primitive(a0), b = primitive(b0);
  if (a.size() <= b.size() ? divide_exact(b, a).has_value() : false) return a;
  if (b.size() <= a.size() ? divide_exact(a, b).has_value() : false) return b;
  {
    // Pull out the common monomial factor first.
    Monomial m = Monomial::min(a.monomial_content(), b.monomial_content());
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    if (!ma.is_one() || !mb.is_one()) {
      MultiPoly ra = exact(a, MultiPoly::monomial(ma)), rb = exact(b, MultiPoly::monomial(mb));
      return primitive(gcd_rec(ra, rb).mul_monomial(m, 1));
    }
  }
  if (auto h = gcd_heuristic(a, b)) return *h;
  // A variable present in only one argument cannot occur in the gcd.
  for (int k = 0; k < kVarCount; ++k) {
    Var v = static_cast<Var>(k);
    bool in_a = a.has_var(v), in_b = b.has_var(v);
    if (in_a && !in_b) return gcd_rec(content_in(split(a, v)), b);
    if (in_b && !in_a) return gcd_rec(a, content_in(split(b, v)));
  }
  Var v = Var::alpha;
  unsigned best = ~0u;
  for (int k = 0; k < kVarCount; ++k) {
    Var w = static_cast<Var>(k);
    unsigned d = std::max(a.degree(w), b.degree(w));
    if (d > 0 && d < best) {
      best = d;
      v = w;
    }
  }
  Univariate ua = split(a, v), ub = split(b, v);
  MultiPoly ca = content_in(ua), cb = content_in(ub);
  MultiPoly c = gcd_rec(ca, cb);
  ua = divide_all(ua, ca);
  ub = divide_all(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    if (ub.size() == 1) return c;  // nonzero constant in v: primitive gcd is 1
    Univariate r = pseudo_remainder(ua, ub);
    ua = std::move(ub);
    if (r.empty()) break;
    ub = divide_all(r, content_in(r));
    strip_integer_content(ub);
  }
  return primitive(primitive(join(ua, v)) * c);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return MultiPoly();
  return monic(gcd_rec(a, b));
}

}  // namespace jk
