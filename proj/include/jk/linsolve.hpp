#pragma once

#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "jk/field.hpp"

namespace jk {

template <class S>
using Matrix = std::vector<std::vector<S>>;

enum class SolveStatus { unique, inconsistent, underdetermined };

enum class Elimination {
  bareiss,  // fraction-free, rows cleared of denominators first
  gauss,    // plain elimination over the field
};

template <class S>
struct SolveReport {
  SolveStatus status = SolveStatus::unique;
  std::vector<S> solution;  // filled when status == unique
  std::size_t rank = 0;
  // Original index of a row whose residual is nonzero (inconsistent) or of a
  // column without a pivot (underdetermined).
  std::size_t row = npos;
  std::size_t column = npos;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

class LinsolveError : public std::runtime_error {
 public:
  LinsolveError(SolveStatus status, std::size_t index, const std::string& what)
      : std::runtime_error(what), status_(status), index_(index) {}
  SolveStatus status() const { return status_; }
  std::size_t index() const { return index_; }

 private:
  SolveStatus status_;
  std::size_t index_;
};

// Solves A x = b exactly. Full pivoting prefers the entry with the smallest
// representation; ties go to the lowest (row, column).
template <class S>
SolveReport<S> linsolve(const Matrix<S>& a, const std::vector<S>& b,
                        Elimination method = Elimination::bareiss) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("linsolve: rhs size mismatch");
  const std::size_t n = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("linsolve: ragged matrix");

  Matrix<S> w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = a[i];
    w[i].push_back(b[i]);
  }
  if (method == Elimination::bareiss) {
    for (auto& row : w) {
      S l(1);
      for (const auto& x : row)
        if (!is_zero(x)) l = lcm_of(l, denominator_of(x));
      if (!(l == S(1)))
        for (auto& x : row)
          if (!is_zero(x)) x = x * l;
    }
  }

  std::vector<std::size_t> row_of(m), col_of(n);
  std::iota(row_of.begin(), row_of.end(), 0);
  std::iota(col_of.begin(), col_of.end(), 0);
  S prev(1);
  std::size_t k = 0;
  for (; k < std::min(m, n); ++k) {
    std::size_t pr = m, pc = n, best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (is_zero(w[i][j])) continue;
        std::size_t s = scalar_size(w[i][j]);
        if (s < best) {
          best = s;
          pr = i;
          pc = j;
        }
      }
    if (pr == m) break;
    std::swap(w[k], w[pr]);
    std::swap(row_of[k], row_of[pr]);
    if (pc != k) {
      for (auto& row : w) std::swap(row[k], row[pc]);
      std::swap(col_of[k], col_of[pc]);
    }
    const S& piv = w[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      if (method == Elimination::gauss) {
        if (is_zero(w[i][k])) continue;
        S f = w[i][k] / piv;
        for (std::size_t j = k + 1; j <= n; ++j)
          if (!is_zero(w[k][j])) w[i][j] = w[i][j] - f * w[k][j];
      } else {
        for (std::size_t j = k + 1; j <= n; ++j) {
          S t = piv * w[i][j];
          if (!is_zero(w[i][k]) && !is_zero(w[k][j])) t = t - w[i][k] * w[k][j];
          w[i][j] = is_zero(t) ? S(0) : t / prev;
        }
      }
      w[i][k] = S(0);
    }
    if (method == Elimination::bareiss) prev = piv;
  }

  SolveReport<S> report;
  report.rank = k;
  for (std::size_t i = k; i < m; ++i)
    if (!is_zero(w[i][n])) {
      report.status = SolveStatus::inconsistent;
      report.row = row_of[i];
      return report;
    }
  if (k < n) {
    report.status = SolveStatus::underdetermined;
    report.column = col_of[k];
    return report;
  }
  std::vector<S> x(n, S(0));
  for (std::size_t kk = n; kk-- > 0;) {
    S acc = w[kk][n];
    for (std::size_t j = kk + 1; j < n; ++j)
      if (!is_zero(w[kk][j])) acc = acc - w[kk][j] * x[j];
    x[kk] = acc / w[kk][kk];
  }
  report.solution.assign(n, S(0));
  for (std::size_t j = 0; j < n; ++j) report.solution[col_of[j]] = x[j];
  return report;
}

// As linsolve, but throws LinsolveError unless the solution is unique.
template <class S>
std::vector<S> solve_unique(const Matrix<S>& a, const std::vector<S>& b,
                            Elimination method = Elimination::bareiss) {
  SolveReport<S> r = linsolve(a, b, method);
  if (r.status == SolveStatus::inconsistent)
    throw LinsolveError(r.status, r.row,
                        "inconsistent linear system: residual in row " + std::to_string(r.row));
  if (r.status == SolveStatus::underdetermined)
    throw LinsolveError(r.status, r.column,
                        "underdetermined linear system: free column " + std::to_string(r.column));
  return r.solution;
}

}  // namespace jk
