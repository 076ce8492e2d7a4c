#pragma once

#include <string>

#include "jk/field.hpp"
#include "jk/partition.hpp"

namespace jk {

enum class ModeKind { alpha, zeta_eta };

// Deformation parameters. Alpha mode is the zeta-eta mode at zeta = -1/alpha,
// eta = 1; formulas are written once in terms of (zeta, eta).
template <class S>
struct Mode {
  ModeKind kind = ModeKind::alpha;
  S zeta;
  S eta;

  static Mode alpha_mode(const S& alpha) { return {ModeKind::alpha, S(-1) / alpha, S(1)}; }
  static Mode zeta_eta_mode(const S& zeta, const S& eta) { return {ModeKind::zeta_eta, zeta, eta}; }

  S alpha() const { return S(-1) / (zeta * eta); }
  S beta() const { return S(1) / zeta + S(1) / eta; }
  // Content-like position of the corner where row i (1-based) of lambda
  // would grow: (i-1) zeta + lambda_i eta.
  S x(const Partition& lambda, int i) const { return S(i - 1) * zeta + S(lambda.part(i)) * eta; }
};

// alpha mode with a symbolic alpha.
Mode<FieldElem> symbolic_alpha_mode();
// zeta-eta mode with symbolic zeta and eta.
Mode<FieldElem> symbolic_zeta_eta_mode();

std::string to_string(ModeKind kind);

}  // namespace jk
