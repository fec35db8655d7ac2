#pragma once

#include <map>
#include <string>
#include <vector>

#include "rslv/rat.hpp"

namespace rslv {

/// Truncated formal power series in one or two distinguished expansion
/// variables, with rational-function coefficients free of those variables.
/// Truncation order is per expansion variable and inclusive.
class Series {
 public:
  Series(std::vector<Var> expansion_vars, std::vector<int> order);

  const std::vector<Var>& expansion_vars() const { return evars_; }
  const std::vector<int>& order() const { return order_; }

  Rat coeff(const std::vector<int>& exps) const;
  void set_coeff(const std::vector<int>& exps, Rat value);
  void add_coeff(const std::vector<int>& exps, const Rat& value);
  const std::map<std::vector<int>, Rat>& coeffs() const { return coeffs_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  /// Product truncated at the common order.
  Series operator*(const Series& o) const;
  Series scale(const Rat& c) const;

  /// Multiplicative inverse; requires an invertible constant term.
  Series inverse() const;

  bool equals(const Series& o) const;

  /// Extracts the series of a polynomial: exponents of the expansion variables
  /// index coefficients, everything beyond the truncation order is dropped.
  static Series from_poly(const Poly& p, std::vector<Var> evars, std::vector<int> order);

  /// Geometric-series expansion of a rational function; every denominator
  /// factor must have a nonzero constant term in the expansion variables.
  static Series from_rational(const Rat& r, std::vector<Var> evars, std::vector<int> order);

  std::string to_string(const VarRegistry& reg) const;

 private:
  void check_compatible(const Series& o) const;
  bool within(const std::vector<int>& exps) const;

  std::vector<Var> evars_;
  std::vector<int> order_;
  std::map<std::vector<int>, Rat> coeffs_;  // only nonzero entries
};

}  // namespace rslv
