#pragma once

#include <string>
#include <vector>

#include "rslv/partition.hpp"
#include "rslv/series.hpp"
#include "rslv/symfunc.hpp"

namespace rslv {

/// Inverse roots of an unramified representation. Parameters are rational
/// functions: fresh symbols in symbolic mode, constants in numeric mode.
/// With `unit_product` set, the last parameter is the inverse of the product
/// of the others, so every downstream identity is checked on the constrained
/// family directly.
struct SatakeData {
  int rank = 0;
  std::vector<Rat> params;
  bool unit_product = false;

  /// Interns `prefix`1..`prefix`m and returns symbolic data.
  static SatakeData symbolic(VarRegistry& reg, const std::string& prefix, int m,
                             bool unit_product = false);
  static SatakeData numeric(const std::vector<BigRat>& values, bool unit_product = false);

  /// Data with parameter j (0-based) removed; the constraint flag is dropped.
  SatakeData drop(int j) const;

  /// Throws degenerate_error if two parameters coincide symbolically.
  void require_regular() const;
};

/// Inverse-root multiset of a local L-factor, plus the variable that stands
/// for the s-power in series expansions.
struct LFactorRoots {
  std::vector<Rat> inverse_roots;
  Var s_var;

  /// prod (1 - r * X)^{-1} as a rational function.
  Rat euler_product() const;
};

/// Rankin-Selberg factor: all pairwise products of the two parameter lists.
LFactorRoots rs_lfactor(const SatakeData& pi1, const SatakeData& pi2, Var s_var);

/// Local zeta factor zeta(k) = (1 - q^{-k})^{-1} in the variable V = q^{1/2}.
Rat zeta_local(int k, Var V);

/// Eigenvalue of the i-th fundamental Hecke operator: e_i of the parameters.
Rat hecke_eigenvalue_fundamental(const SatakeData& pi, int i);

/// delta^{1/2}(diag(p^nu)) on GL_m as a power of V (always an integer power).
Rat modulus_char_sqrt(int m, const TorusVector& nu, Var V);

/// Spherical Whittaker value at diag(p^nu): delta^{1/2} * schur_nu on dominant
/// nu, zero otherwise. Negative parts are handled by a central shift.
Rat shintani_value(const SatakeData& pi, const TorusVector& nu, Var V);

/// Whittaker value of the shifted vector: evaluation at
/// nu + lambda_valuation * (m-1, m-2, ..., 1, 0).
Rat shifted_shintani_value(const SatakeData& pi, int lambda_valuation, const TorusVector& nu,
                           Var V);

/// Torus-sum form of the GL(m) x GL(m-1) zeta integral as a series in X,
/// where X stands for q^{-1/2-s}. The Haar/modulus weight is assembled from
/// the Iwasawa decomposition, not hard-coded.
Series zeta_series_gl_m_m1(const SatakeData& Pi, const SatakeData& pi_prime, int order, Var X,
                           Var V);

/// Torus-sum form of the GL(m) x GL(m) zeta integral with the standard lattice
/// characteristic function; X stands for q^{-s}.
Series zeta_series_gl_m_m(const SatakeData& pi, const SatakeData& pi_prime, int order, Var X,
                          Var V);

/// Euler-product side matching the torus sums above.
Series euler_product_series(const LFactorRoots& roots, int order);

/// Checks the one-step Whittaker recursion
///   W_pi(diag(p^nu, 1)) = V^{-|nu|} * sum_j mu_j^{-1} W_{pi_j}(diag(p^nu))
///                                       / prod_{i != j}(mu_i - mu_j)
/// for dominant nu with nonnegative last entry, under the unit-product
/// constraint. Returns true on exact equality.
bool whittaker_recursion_check(const SatakeData& pi, const TorusVector& nu, Var V);

}  // namespace rslv
