#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rslv/partition.hpp"
#include "rslv/rat.hpp"
#include "rslv/series.hpp"

namespace rslv {

/// e_k of the given variables; e_0 = 1. Requires 0 <= k <= #vars.
Poly elementary_symmetric(int k, std::span<const Var> vars);

/// h_k: sum of all monomials of total degree k; h_0 = 1. Requires k >= 0.
Poly complete_homogeneous(int k, std::span<const Var> vars);

/// Schur polynomial by the bialternant quotient
///   det(x_j^{m-i+nu_i}) / det(x_j^{m-i});
/// the division is exact and this is asserted.
Poly schur(const Partition& nu, std::span<const Var> vars);

/// Independent route: Jacobi-Trudi determinant det(h_{nu_i - i + j}).
Poly schur_jacobi_trudi(const Partition& nu, std::span<const Var> vars);

/// e_k evaluated at rational-function arguments (Vieta recurrence).
Rat elementary_symmetric_at(int k, const std::vector<Rat>& values);

/// h_k evaluated at rational-function arguments.
Rat complete_homogeneous_at(int k, const std::vector<Rat>& values);

/// Schur value at rational-function arguments, by the bialternant quotient in
/// the fraction field. Arguments must be pairwise distinct.
Rat schur_at(const Partition& nu, const std::vector<Rat>& values);

/// Value at `eval_at` of the unique polynomial of degree < #points through the
/// given (node, value) pairs. Nodes must be pairwise distinct.
Rat lagrange_reconstruct(const std::vector<std::pair<Rat, Rat>>& points, const Rat& eval_at);

/// Geometric-series expansion of a rational function (re-export of the series
/// constructor, under the name the rest of the library uses).
Series series_from_rational(const Rat& r, std::vector<Var> evars, std::vector<int> order);

}  // namespace rslv
