#pragma once

#include <memory>
#include <vector>

#include "rslv/satake.hpp"

namespace rslv {

/// (n+1) x (n+1) matrix of rational functions; rows/columns are stored
/// 0-based, offset by one from the 1-based indexing of the defining formulas.
struct WeightMatrix {
  int size = 0;
  std::vector<std::vector<Rat>> entries;

  const Rat& at(int i, int j) const { return entries[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

/// Symbols for the level-prime spectral-weight computation: a and b of rank n,
/// x of rank n+1, the two shifted variables T1, T2, and V = q^{1/2}.
struct ResidueContext {
  int n = 0;
  std::shared_ptr<VarRegistry> reg;
  SatakeData a, b, x;
  Var T1, T2, V;

  static ResidueContext symbolic(int n);

  /// Satake parameters specialized to random rationals (x pairwise distinct);
  /// T1, T2, V stay symbolic, so identities are still checked as rational
  /// functions in three variables.
  static ResidueContext numeric(int n, uint64_t seed);

  /// Numeric a, b with the unit-product constraint imposed; x stays symbolic
  /// so the residue substitutions can be applied.
  static ResidueContext numeric_residue(int n, uint64_t seed);

  Rat q() const { return Rat::variable(V, 2); }
};

/// F_{ij} = T1^{n+1-i} T2^{n+1-j} e_{n+1-i}(a) e_{n+1-j}(b), 1-based i,j.
WeightMatrix build_F(const ResidueContext& ctx);

/// (G^{-T})_{ij} = zeta(n+1)^{-1} q^{n+1-j}
///     sum_k (-x_k)^{n+j-i} / prod_{a != k}(x_k - x_a)
///           * prod_b (1 - q^{-1} x_k x_b^{-1})^{-1}.
WeightMatrix build_Ginv_T(const ResidueContext& ctx);

/// tr(F^T G^{-T}) = sum_{i,j} F_{ij} (G^{-T})_{ij}.
Rat spectral_weight_trace(const ResidueContext& ctx);

/// Closed form:
/// (-1)^n zeta(n+1)^{-1} sum_k prod_g(1 - x_k T1 a_g) prod_d(x_k - T2 q b_d)
///     / [ prod_{a != k}(x_k - x_a) prod_b(1 - q^{-1} x_k x_b^{-1}) ].
Rat spectral_weight_closed(const ResidueContext& ctx);

struct ResidueResult {
  Rat value;           // the substituted weight
  bool matches = false;  // equality with the stated closed forms
};

/// Substitutes x_b := q^{-1} (T1 a_b)^{-1}, x_{n+1} := T1^n q^n and checks the
/// result against the stated L-quotient closed form (built two ways).
ResidueResult residue_eval_1(const ResidueContext& ctx);

/// Substitutes x_d := b_d T2 q, x_{n+1} := q^{-n} T2^{-n} and checks against
/// the second closed form. Only the k = n+1 summand survives; this collapse is
/// verified as well.
ResidueResult residue_eval_2(const ResidueContext& ctx);

}  // namespace rslv
