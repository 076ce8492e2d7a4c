#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "jk/field.hpp"
#include "jk/partition.hpp"

namespace jk {

// Polynomial in free cumulants R_2, R_3, ...; the key rho stands for
// prod_k R_{rho_k}. R_1 vanishes identically, so keys never contain a part 1.
template <class S>
class RPoly {
 public:
  using Map = std::map<Partition, S>;

  RPoly() = default;
  explicit RPoly(const S& c) {
    if (!jk::is_zero(c)) terms_.emplace(Partition{}, c);
  }
  static RPoly monomial(const Partition& rho, const S& c) {
    RPoly r;
    r.add(rho, c);
    return r;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  S coefficient(const Partition& rho) const {
    auto it = terms_.find(rho);
    return it == terms_.end() ? S(0) : it->second;
  }
  // Adds c R_rho; ignored when rho has a part 1.
  void add(const Partition& rho, const S& c) {
    if (jk::is_zero(c) || rho.multiplicity(1) > 0) return;
    auto [it, fresh] = terms_.emplace(rho, c);
    if (!fresh) {
      it->second += c;
      if (jk::is_zero(it->second)) terms_.erase(it);
    }
  }
  int max_weight() const {
    int w = -1;
    for (const auto& [rho, c] : terms_) w = std::max(w, rho.weight());
    return w;
  }

  RPoly& operator+=(const RPoly& o) {
    for (const auto& [rho, c] : o.terms_) add(rho, c);
    return *this;
  }
  RPoly& operator-=(const RPoly& o) {
    for (const auto& [rho, c] : o.terms_) add(rho, -c);
    return *this;
  }
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const S& s) {
    RPoly r;
    if (jk::is_zero(s)) return r;
    for (const auto& [rho, c] : a.terms_) r.terms_.emplace(rho, c * s);
    return r;
  }
  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    RPoly r;
    for (const auto& [x, cx] : a.terms_)
      for (const auto& [y, cy] : b.terms_) r.add(merge(x, y), cx * cy);
    return r;
  }
  friend bool operator==(const RPoly& a, const RPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  // r[k] holds R_k; r must reach the largest part.
  template <class T>
  T evaluate(const std::vector<T>& r) const {
    T total(0);
    for (const auto& [rho, c] : terms_) {
      T t = convert<T>(c);
      for (int p : rho.parts()) t = t * r[p];
      total += t;
    }
    return total;
  }

  // Union of the parts of two monomials.
  static Partition merge(const Partition& x, const Partition& y) {
    std::vector<int> p = x.parts();
    p.insert(p.end(), y.parts().begin(), y.parts().end());
    return Partition::from_unsorted(std::move(p));
  }

 private:
  template <class T>
  static T convert(const S& c) {
    if constexpr (std::is_same_v<T, S>) return c;
    else return T(c);
  }
  Map terms_;
};

}  // namespace jk
