#pragma once

#include <deque>
#include <map>
#include <vector>

#include "jk/field.hpp"
#include "jk/mode.hpp"
#include "jk/partition.hpp"

namespace jk {

// Pieri coefficients c_1..c_{l+1} of p_1 J_lambda = sum_i c_i J_{lambda^(i)};
// c[i-1] holds c_i, and c_i = 0 when row i cannot grow.
template <class S>
struct PieriRow {
  Partition lambda;
  std::vector<S> c;
};

// Throws std::domain_error naming the factor when a denominator vanishes.
template <class S>
PieriRow<S> pieri(const Partition& lambda, const Mode<S>& mode);

// theta^lambda_rho for all partitions lambda, rho of one weight, in
// enumeration order.
template <class S>
class ThetaTable {
 public:
  ThetaTable() = default;
  explicit ThetaTable(int n);

  int weight() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t index(const Partition& p) const;  // throws std::out_of_range
  const S& at(std::size_t lambda, std::size_t rho) const { return v_[lambda * parts_.size() + rho]; }
  S& at(std::size_t lambda, std::size_t rho) { return v_[lambda * parts_.size() + rho]; }
  const S& at(const Partition& lambda, const Partition& rho) const {
    return at(index(lambda), index(rho));
  }

 private:
  int n_ = 0;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
  std::vector<S> v_;
};

// Builds theta tables weight by weight with the two-row induction on the
// Pieri relations for p_1 and for the operator sum_i x_i^2 d/dx_i; the
// normalization is theta^lambda_{1^n} = 1.
template <class S>
class ThetaTower {
 public:
  explicit ThetaTower(Mode<S> mode);
  const Mode<S>& mode() const { return mode_; }
  // Computes missing weights on demand; returned references stay valid.
  const ThetaTable<S>& table(int n);
  // z_mu theta^lambda_{mu, 1^{n-|mu|}}; throws std::domain_error if |mu| > |lambda|.
  S vartheta(const Partition& lambda, const Partition& mu);

 private:
  void extend();
  Mode<S> mode_;
  std::deque<ThetaTable<S>> tables_;  // references stay valid as it grows
};

template <class S>
ThetaTable<S> theta_all(int n, const Mode<S>& mode) {
  ThetaTower<S> tower(mode);
  return tower.table(n);
}

struct HookPair {
  FieldElem h;
  FieldElem h_prime;
};

// Upper and lower hook products in alpha.
HookPair hooks(const Partition& lambda);

// Jack polynomials by Gram-Schmidt on monomial functions, ordered by a total
// order refining dominance, under <p_l, p_m> = delta alpha^{l(l)} z_l.
// Independent of the Pieri induction; alpha mode only.
ThetaTable<FieldElem> oracle_gram_schmidt(int n, int bound = 8);

// <f, g> for f, g given by power-sum coefficients in enumeration order.
FieldElem power_sum_inner_product(int n, const std::vector<FieldElem>& f, const std::vector<FieldElem>& g);

}  // namespace jk
