#include "jk/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jk {

char var_name(Var v) {
  static constexpr char names[kVarCount] = {'a', 'b', 'z', 'e'};
  return names[static_cast<int>(v)];
}

Monomial Monomial::of(Var v, unsigned exponent) {
  if (exponent > 0xffffu) throw std::overflow_error("exponent too large");
  Monomial m;
  m.packed_ = static_cast<std::uint64_t>(exponent) << shift(v);
  return m;
}

unsigned Monomial::total_degree() const {
  return exponent(0) + exponent(1) + exponent(2) + exponent(3);
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kVarCount; ++v)
    if (exponent(v) > other.exponent(v)) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  for (int v = 0; v < kVarCount; ++v)
    if (exponent(v) + o.exponent(v) > 0xffffu) throw std::overflow_error("exponent too large");
  Monomial m;
  m.packed_ = packed_ + o.packed_;
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  m.packed_ = other.packed_ - packed_;
  return m;
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  Monomial m = *this;
  m.packed_ &= ~(static_cast<std::uint64_t>(0xffffu) << shift(v));
  m.packed_ |= static_cast<std::uint64_t>(e) << shift(v);
  return m;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kVarCount; ++v)
    m = m.with_exponent(static_cast<Var>(v), std::min(a.exponent(v), b.exponent(v)));
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.packed() > b.packed();
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.push_back({Monomial(), Rational(c)});
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coef.get_den() == 1; });
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

template <bool kSubtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
      if constexpr (kSubtract) out.back().coef = -out.back().coef;
    } else {
      Rational c = kSubtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coef * y.coef});
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves graded-lex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == k) out.push_back({t.mono.with_exponent(v, 0), t.coef});
  return from_terms(std::move(out));
}

namespace {

void append_monomial(std::string& s, const Monomial& m, bool always_exponent) {
  bool first = true;
  for (int v = 0; v < kVarCount; ++v) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!first) s += '*';
    first = false;
    s += var_name(static_cast<Var>(v));
    if (always_exponent || e > 1) s += '^' + std::to_string(e);
  }
}

std::string render(const std::vector<Term>& terms, bool canonical) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    bool neg = t.coef < 0;
    if (i == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    Rational mag = abs(t.coef);
    bool unit = mag == 1 && !t.mono.is_one();
    if (canonical || !unit) {
      s += mag.get_str();
      if (!t.mono.is_one()) s += '*';
    }
    append_monomial(s, t.mono, canonical);
  }
  return s;
}

}  // namespace

std::string MultiPoly::to_text() const { return render(terms_, true); }

std::string MultiPoly::pretty() const { return render(terms_, false); }

MultiPoly MultiPoly::parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("cannot parse polynomial (") + why + "): " +
                                std::string(text));
  };
  bool negative = false;
  skip_ws();
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  while (true) {
    skip_ws();
    Rational coef = 1;
    Monomial mono;
    std::size_t start = i;
    while (i < text.size() && ((text[i] >= '0' && text[i] <= '9') || text[i] == '/')) ++i;
    bool has_coef = i > start;
    if (has_coef) coef = parse_rational(text.substr(start, i - start));
    bool expect_factor = !has_coef;
    while (i < text.size() && (expect_factor || text[i] == '*')) {
      if (!expect_factor) ++i;
      expect_factor = false;
      if (i >= text.size()) fail("dangling '*'");
      int v = -1;
      for (int k = 0; k < kVarCount; ++k)
        if (text[i] == var_name(static_cast<Var>(k))) v = k;
      if (v < 0) fail("unknown variable");
      ++i;
      unsigned e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t s = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (s == i) fail("missing exponent");
        e = static_cast<unsigned>(std::stoul(std::string(text.substr(s, i - s))));
      }
      mono = mono * Monomial::of(static_cast<Var>(v), e);
    }
    terms.push_back({mono, negative ? Rational(-coef) : coef});
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("expected '+' or '-'");
    negative = text[i] == '-';
    ++i;
  }
  return from_terms(std::move(terms));
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return MultiPoly();
  const Term& ld = d.leading();
  if (d.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    Rational inv = 1 / ld.coef;
    for (const auto& t : p.terms()) {
      if (!ld.mono.divides(t.mono)) return std::nullopt;
      out.push_back({ld.mono.quotient_of(t.mono), t.coef * inv});
    }
    MultiPoly q;
    q = MultiPoly::from_terms(std::move(out));
    return q;
  }
  if (p.total_degree() < d.total_degree()) return std::nullopt;
  for (int v = 0; v < kVarCount; ++v)
    if (p.degree(static_cast<Var>(v)) < d.degree(static_cast<Var>(v))) return std::nullopt;
  MultiPoly r = p;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!ld.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = ld.mono.quotient_of(lr.mono);
    Rational c = lr.coef / ld.coef;
    r -= d.mul_monomial(m, c);
    q.push_back({m, c});
  }
  return MultiPoly::from_terms(std::move(q));
}

}  // namespace jk
