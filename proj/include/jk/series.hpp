#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace jk {

// Truncated Laurent series t^offset * (c_0 + c_1 t + ... + c_N t^N) with
// offset in {-1, 0, 1}. S is a field (Rational, FieldElem).
template <class S>
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  explicit TruncSeries(int order, int offset = 0) : offset_(offset), c_(order + 1, S(0)) {
    check_offset(offset);
    if (order < 0) throw std::invalid_argument("negative series order");
  }
  TruncSeries(std::vector<S> coeffs, int offset) : offset_(offset), c_(std::move(coeffs)) {
    check_offset(offset);
    if (c_.empty()) throw std::invalid_argument("empty series");
  }
  static TruncSeries one(int order) {
    TruncSeries s(order);
    s.c_[0] = S(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  int offset() const { return offset_; }
  const std::vector<S>& coeffs() const { return c_; }
  // Coefficient of t^k in the series including the offset; zero outside range.
  S at(int k) const {
    int i = k - offset_;
    return (i < 0 || i > order()) ? S(0) : c_[i];
  }
  S& operator[](int i) { return c_[i]; }
  const S& operator[](int i) const { return c_[i]; }

  TruncSeries truncated(int order) const {
    TruncSeries r(order, offset_);
    for (int i = 0; i <= std::min(order, this->order()); ++i) r.c_[i] = c_[i];
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    same_shape(x, y);
    TruncSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + y.c_[i];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    same_shape(x, y);
    TruncSeries r = x;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - y.c_[i];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& x, const S& s) {
    TruncSeries r = x;
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  // Product truncated to the shorter order.
  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    int n = std::min(x.order(), y.order());
    TruncSeries r(n, x.offset_ + y.offset_);
    for (int i = 0; i <= n; ++i) {
      if (is_zero_s(x.c_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero_s(y.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + x.c_[i] * y.c_[j];
      }
    }
    return r;
  }

  // Multiplicative inverse; requires c_0 != 0. Offset is negated.
  TruncSeries reciprocal() const {
    if (is_zero_s(c_[0])) throw std::domain_error("series reciprocal: zero constant term");
    TruncSeries r(order(), -offset_);
    S inv = S(1) / c_[0];
    r.c_[0] = inv;
    for (int n = 1; n <= order(); ++n) {
      S acc(0);
      for (int k = 1; k <= n; ++k)
        if (!is_zero_s(c_[k])) acc = acc + c_[k] * r.c_[n - k];
      r.c_[n] = -(acc * inv);
    }
    return r;
  }

  // Integer power of a series with offset 0.
  TruncSeries pow(int k) const {
    require_offset0("pow");
    if (k < 0) return reciprocal().pow(-k);
    TruncSeries result = one(order()), base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // log of a series with offset 0 and constant term 1.
  TruncSeries log() const {
    require_offset0("log");
    if (!(c_[0] == S(1))) throw std::domain_error("series log: constant term must be 1");
    // L' = F'/F
    TruncSeries d(order());
    for (int n = 1; n <= order(); ++n) d.c_[n - 1] = c_[n] * S(n);
    TruncSeries q = d * reciprocal();
    TruncSeries r(order());
    for (int n = 1; n <= order(); ++n) r.c_[n] = q.c_[n - 1] / S(n);
    return r;
  }

  // exp of a series with offset 0 and constant term 0.
  TruncSeries exp() const {
    require_offset0("exp");
    if (!is_zero_s(c_[0])) throw std::domain_error("series exp: constant term must be 0");
    // E' = F'E, so n e_n = sum_k k f_k e_{n-k}.
    TruncSeries r(order());
    r.c_[0] = S(1);
    for (int n = 1; n <= order(); ++n) {
      S acc(0);
      for (int k = 1; k <= n; ++k)
        if (!is_zero_s(c_[k])) acc = acc + S(k) * c_[k] * r.c_[n - k];
      r.c_[n] = acc / S(n);
    }
    return r;
  }

  // Compositional inverse of s(t) = t + c_1 t^2 + ... (offset 1, c_0 = 1).
  // Returns g(u) = u + ... with s(g(u)) = u to the same order.
  TruncSeries compositional_inverse() const {
    if (offset_ != 1) throw std::domain_error("compositional inverse: series must have offset 1");
    if (!(c_[0] == S(1)))
      throw std::domain_error("compositional inverse: linear coefficient must be 1");
    int n_max = order();
    // g = u * q(u); find q with q(u) * P(u q(u)) = 1 where s = t P(t).
    std::vector<S> q(n_max + 1, S(0));
    q[0] = S(1);
    for (int n = 1; n <= n_max; ++n) {
      TruncSeries qs(std::vector<S>(q.begin(), q.begin() + n + 1), 0);
      // w = u q(u) as offset-0 series of order n
      TruncSeries w(n);
      for (int i = 1; i <= n; ++i) w.c_[i] = qs.c_[i - 1];
      // Horner evaluation of P at w.
      TruncSeries pw(n);
      pw.c_[0] = c_[std::min(n, n_max)];
      for (int k = std::min(n, n_max) - 1; k >= 0; --k) {
        pw = pw * w;
        pw.c_[0] = pw.c_[0] + c_[k];
      }
      S d = (qs * pw).c_[n];
      q[n] = -d;
    }
    return TruncSeries(std::move(q), 1);
  }

 private:
  static bool is_zero_s(const S& s) { return s == S(0); }
  static void check_offset(int offset) {
    if (offset < -1 || offset > 1) throw std::invalid_argument("series offset must be -1, 0 or 1");
  }
  static void same_shape(const TruncSeries& x, const TruncSeries& y) {
    if (x.offset_ != y.offset_ || x.order() != y.order())
      throw std::invalid_argument("series shape mismatch");
  }
  void require_offset0(const char* what) const {
    if (offset_ != 0) throw std::domain_error(std::string(what) + ": series must have offset 0");
  }

  int offset_;
  std::vector<S> c_;
};

}  // namespace jk
