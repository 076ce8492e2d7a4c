#include "jk/jack.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jk/linsolve.hpp"

namespace jk {

Mode<FieldElem> symbolic_alpha_mode() {
  return Mode<FieldElem>::alpha_mode(FieldElem::variable(Var::alpha));
}

Mode<FieldElem> symbolic_zeta_eta_mode() {
  return Mode<FieldElem>::zeta_eta_mode(FieldElem::variable(Var::zeta), FieldElem::variable(Var::eta));
}

std::string to_string(ModeKind kind) { return kind == ModeKind::alpha ? "alpha" : "zeta_eta"; }

namespace {

template <class S>
S checked_divide(const S& num, const S& den, const std::string& factor) {
  if (is_zero(den)) throw std::domain_error("vanishing denominator: " + factor);
  return num / den;
}

}  // namespace

template <class S>
PieriRow<S> pieri(const Partition& lambda, const Mode<S>& mode) {
  const int l = lambda.length();
  const S& z = mode.zeta;
  const S& e = mode.eta;
  PieriRow<S> row{lambda, std::vector<S>(l + 1)};
  for (int i = 1; i <= l + 1; ++i) {
    if (i > 1 && lambda.part(i - 1) == lambda.part(i)) continue;
    const int li = lambda.part(i);
    S den = S(l - i + 2) * z - S(li) * e;
    S c = checked_divide(z, den,
                         "(" + std::to_string(l - i + 2) + ")zeta - (" + std::to_string(li) +
                             ")eta at i=" + std::to_string(i) + " for " + lambda.to_string());
    for (int j = 1; j <= l + 1; ++j) {
      if (j == i) continue;
      const int dl = lambda.part(j) - li;
      S num = S(j - i + 1) * z + S(dl) * e;
      S d = S(j - i) * z + S(dl) * e;
      c = c * checked_divide(num, d,
                             "(" + std::to_string(j - i) + ")zeta + (" + std::to_string(dl) +
                                 ")eta at i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                 " for " + lambda.to_string());
    }
    row.c[i - 1] = c;
  }
  S total;
  for (const auto& c : row.c) total += c;
  if (!(total == S(1))) throw std::logic_error("pieri: coefficients do not sum to 1 for " + lambda.to_string());
  return row;
}

template <class S>
ThetaTable<S>::ThetaTable(int n) : n_(n), parts_(enumerate(n)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) index_.emplace(parts_[k], k);
  v_.assign(parts_.size() * parts_.size(), S());
}

template <class S>
std::size_t ThetaTable<S>::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("partition " + p.to_string() + " not of weight " + std::to_string(n_));
  return it->second;
}

template <class S>
ThetaTower<S>::ThetaTower(Mode<S> mode) : mode_(std::move(mode)) {
  ThetaTable<S> t0(0);
  t0.at(0, 0) = S(1);
  tables_.push_back(std::move(t0));
}

template <class S>
const ThetaTable<S>& ThetaTower<S>::table(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  while (static_cast<int>(tables_.size()) <= n) extend();
  return tables_[n];
}

// One step of the induction. For each lambda-hat of weight n-1, taken by
// (length d, last part u), the children lambda-hat^(i) with i < d are already
// known; the two Pieri relations give a 2x2 system for the children growing
// row d and row d+1 (or a single unknown when row d cannot grow).
template <class S>
void ThetaTower<S>::extend() {
  const int n = static_cast<int>(tables_.size());
  const ThetaTable<S>& prev = tables_.back();
  ThetaTable<S> next(n);
  const auto& rhos = next.partitions();
  std::vector<bool> known(rhos.size(), false);

  std::vector<Partition> hats = prev.partitions();
  std::sort(hats.begin(), hats.end(), [](const Partition& a, const Partition& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.part(a.length()) != b.part(b.length())) return a.part(a.length()) < b.part(b.length());
    return a < b;
  });

  for (const auto& hat : hats) {
    const int d = hat.length();
    const int u = hat.part(d);
    const std::size_t ih = prev.index(hat);
    PieriRow<S> pr = pieri(hat, mode_);
    const bool grow_d = d >= 1 && (d == 1 || u < hat.part(d - 1));
    std::vector<S> x(d + 1);
    for (int i = 1; i <= d + 1; ++i) x[i - 1] = mode_.x(hat, i);
    std::vector<std::size_t> child(d + 1, 0);
    std::vector<bool> grows(d + 1, false);
    for (int i = 1; i <= d + 1; ++i) {
      grows[i - 1] = i == 1 || hat.part(i - 1) > hat.part(i);
      if (grows[i - 1]) child[i - 1] = next.index(add_node(hat, i));
    }
    for (int i = 1; i < d; ++i)
      if (grows[i - 1] && !known[child[i - 1]])
        throw std::logic_error("theta induction: child " + rhos[child[i - 1]].to_string() + " not yet known");

    for (std::size_t ir = 0; ir < rhos.size(); ++ir) {
      const Partition& rho = rhos[ir];
      S a, b;
      if (rho.multiplicity(1) > 0) a = prev.at(ih, prev.index(remove_part(rho, 1)));
      for (int r = 1; r + 1 <= rho.largest(); ++r)
        if (rho.multiplicity(r + 1) > 0)
          b += S(r * (rho.multiplicity(r) + 1)) * prev.at(ih, prev.index(down(rho, r + 1)));
      for (int i = 1; i < d; ++i) {
        if (!grows[i - 1]) continue;
        const S& t = next.at(child[i - 1], ir);
        a -= pr.c[i - 1] * t;
        b -= pr.c[i - 1] * x[i - 1] * t;
      }
      const S& cl = pr.c[d];
      if (grow_d) {
        const S& cd = pr.c[d - 1];
        S gap = x[d] - x[d - 1];
        if (is_zero(gap) || is_zero(cd) || is_zero(cl))
          throw std::logic_error("theta induction: singular 2x2 system at " + hat.to_string());
        next.at(child[d - 1], ir) = (x[d] * a - b) / (cd * gap);
        next.at(child[d], ir) = (b - x[d - 1] * a) / (cl * gap);
      } else {
        if (is_zero(cl)) throw std::logic_error("theta induction: singular system at " + hat.to_string());
        S y = a / cl;
        if (!(cl * x[d] * y == b))
          throw std::logic_error("theta induction: inconsistent relations at " + hat.to_string() + ", " +
                                 rho.to_string());
        next.at(child[d], ir) = y;
      }
    }
    if (grow_d) known[child[d - 1]] = true;
    known[child[d]] = true;
  }
  tables_.push_back(std::move(next));
}

template <class S>
S ThetaTower<S>::vartheta(const Partition& lambda, const Partition& mu) {
  const int n = lambda.weight();
  const int r = mu.weight();
  if (r > n)
    throw std::domain_error("vartheta: |mu| = " + std::to_string(r) + " exceeds |lambda| = " + std::to_string(n));
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), n - r, 1);
  const Partition rho(parts);
  return S(stats(mu).z) * table(n).at(lambda, rho);
}

template struct PieriRow<Rational>;
template struct PieriRow<FieldElem>;
template PieriRow<Rational> pieri(const Partition&, const Mode<Rational>&);
template PieriRow<FieldElem> pieri(const Partition&, const Mode<FieldElem>&);
template class ThetaTable<Rational>;
template class ThetaTable<FieldElem>;
template class ThetaTower<Rational>;
template class ThetaTower<FieldElem>;

HookPair hooks(const Partition& lambda) {
  const FieldElem a = FieldElem::variable(Var::alpha);
  const Partition conj = lambda.conjugate();
  FieldElem h(1), hp(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int leg = conj.part(j) - i;
      const int arm = lambda.part(i) - j;
      h *= FieldElem(leg + 1) + a * FieldElem(arm);
      hp *= FieldElem(leg) + a * FieldElem(arm + 1);
    }
  return {h, hp};
}

FieldElem power_sum_inner_product(int n, const std::vector<FieldElem>& f, const std::vector<FieldElem>& g) {
  const auto parts = enumerate(n);
  if (f.size() != parts.size() || g.size() != parts.size())
    throw std::invalid_argument("power_sum_inner_product: size mismatch");
  const FieldElem a = FieldElem::variable(Var::alpha);
  FieldElem total;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    total += f[k] * g[k] * a.pow(parts[k].length()) * FieldElem(Rational(stats(parts[k]).z));
  }
  return total;
}

ThetaTable<FieldElem> oracle_gram_schmidt(int n, int bound) {
  if (n > bound) throw std::invalid_argument("oracle_gram_schmidt: weight " + std::to_string(n) + " above bound " + std::to_string(bound));
  ThetaTable<FieldElem> out(n);
  const auto& parts = out.partitions();
  const std::size_t m = parts.size();
  // p_rho = sum_mu T[rho][mu] m_mu, so the p-coordinates of m_mu solve T^t x = e_mu.
  Matrix<Rational> tt(m, std::vector<Rational>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) tt[c][r] = Rational(refinement_count(parts[r], parts[c]));
  // Lexicographic order refines dominance; enumeration order is its reverse.
  std::vector<std::vector<FieldElem>> basis;
  std::vector<FieldElem> norms;
  for (std::size_t k = m; k-- > 0;) {
    std::vector<Rational> e(m);
    e[k] = 1;
    auto coords = solve_unique(tt, e);
    std::vector<FieldElem> v(coords.begin(), coords.end());
    const std::vector<FieldElem> mono = v;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElem proj = power_sum_inner_product(n, mono, basis[b]) / norms[b];
      if (proj.is_zero()) continue;
      for (std::size_t r = 0; r < m; ++r) v[r] -= proj * basis[b][r];
    }
    const FieldElem scale = v[m - 1];
    if (scale.is_zero()) throw std::logic_error("oracle_gram_schmidt: zero coefficient of p_1^n");
    for (std::size_t r = 0; r < m; ++r) out.at(k, r) = v[r] / scale;
    norms.push_back(power_sum_inner_product(n, v, v));
    basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace jk
