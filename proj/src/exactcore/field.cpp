#include "jk/field.hpp"

#include <stdexcept>

namespace jk {
namespace {

MultiPoly exact(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw std::logic_error("field: expected exact division");
  return *q;
}

}  // namespace

// (a/b)(c/d) for reduced a/b and c/d: cancelling gcd(a, d) and gcd(c, b)
// leaves a reduced product.
FieldElem FieldElem::multiply_reduced(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                                      const MultiPoly& d) {
  MultiPoly g1 = gcd(a, d), g2 = gcd(c, b);
  MultiPoly an = g1.is_constant() ? a : exact(a, g1), dn = g1.is_constant() ? d : exact(d, g1);
  MultiPoly cn = g2.is_constant() ? c : exact(c, g2), bn = g2.is_constant() ? b : exact(b, g2);
  MultiPoly num = an * cn, den = bn * dn;
  Rational lc = den.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return FieldElem(std::move(num), std::move(den), true);
}

FieldElem FieldElem::fraction(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return FieldElem();
  if (den.is_constant()) return FieldElem(num * Rational(1 / den.constant_value()), MultiPoly(1), true);
  if (auto q = divide_exact(num, den)) return FieldElem(std::move(*q), MultiPoly(1), true);
  if (den.is_monomial()) {
    Monomial m = Monomial::min(num.monomial_content(), den.leading().mono);
    if (!m.is_one()) {
      num = exact(num, MultiPoly::monomial(m));
      den = exact(den, MultiPoly::monomial(m));
    }
  } else {
    MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  Rational lc = den.leading().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return FieldElem(std::move(num), std::move(den), true);
}

Rational FieldElem::constant_value() const {
  if (!is_constant()) throw std::logic_error("field element is not constant");
  return num_.constant_value() / den_.constant_value();
}

FieldElem FieldElem::operator-() const { return FieldElem(-num_, den_, true); }

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) {
    if (x.is_polynomial()) return FieldElem(x.num_ + y.num_, x.den_, true);
    return FieldElem::fraction(x.num_ + y.num_, x.den_);
  }
  if (y.is_polynomial()) return FieldElem(x.num_ + y.num_ * x.den_, x.den_, true);
  if (x.is_polynomial()) return FieldElem(x.num_ * y.den_ + y.num_, y.den_, true);
  // With g = gcd(b, d): a/b + c/d = (a d' + c b') / (b d'), b = g b', d = g d';
  // any common factor of the result divides g.
  MultiPoly g = gcd(x.den_, y.den_);
  if (g.is_constant()) return FieldElem(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, true);
  MultiPoly bp = exact(x.den_, g), dp = exact(y.den_, g);
  MultiPoly num = x.num_ * dp + y.num_ * bp;
  MultiPoly den = x.den_ * dp;
  if (num.is_zero()) return FieldElem();
  MultiPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = exact(num, h);
    den = exact(den, h);
  }
  return FieldElem::fraction(std::move(num), std::move(den));
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) { return x + (-y); }

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  if (x.is_zero() || y.is_zero()) return FieldElem();
  if (x.is_polynomial() && y.is_polynomial()) return FieldElem(x.num_ * y.num_, MultiPoly(1), true);
  if (x.is_constant()) return FieldElem(y.num_ * x.constant_value(), y.den_, true);
  if (y.is_constant()) return FieldElem(x.num_ * y.constant_value(), x.den_, true);
  return FieldElem::multiply_reduced(x.num_, x.den_, y.num_, y.den_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return fraction(den_, num_);
}

FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  if (x.is_zero()) return FieldElem();
  if (y.is_constant()) return FieldElem(x.num_ * Rational(1 / y.constant_value()), x.den_, true);
  return FieldElem::multiply_reduced(x.num_, x.den_, y.den_, y.num_);
}

FieldElem FieldElem::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return FieldElem(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), true);
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string FieldElem::to_text() const {
  if (is_zero()) return "0 / 1";
  // Scale to integer coefficients with joint content 1.
  Integer g = 0, l = 1;
  for (const MultiPoly* p : {&num_, &den_})
    for (const auto& t : p->terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    }
  Rational scale(l, g);
  scale.canonicalize();
  return (num_ * scale).to_text() + " / " + (den_ * scale).to_text();
}

FieldElem FieldElem::parse(std::string_view text) {
  auto sep = text.find(" / ");
  if (sep == std::string_view::npos) return FieldElem(MultiPoly::parse(text));
  return fraction(MultiPoly::parse(text.substr(0, sep)), MultiPoly::parse(text.substr(sep + 3)));
}

std::string FieldElem::pretty() const {
  if (is_polynomial()) return num_.pretty();
  auto wrap = [](const MultiPoly& p) {
    return p.size() > 1 ? "(" + p.pretty() + ")" : p.pretty();
  };
  return wrap(num_) + "/" + wrap(den_);
}

FieldElem denominator_of(const FieldElem& x) { return FieldElem(x.den()); }

Rational lcm_of(const Rational& x, const Rational& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
  return Rational(l);
}

FieldElem lcm_of(const FieldElem& x, const FieldElem& y) {
  if (x.is_constant()) return y;
  if (y.is_constant()) return x;
  return FieldElem(exact(x.num(), gcd(x.num(), y.num())) * y.num());
}

}  // namespace jk
