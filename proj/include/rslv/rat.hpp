#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rslv/poly.hpp"

namespace rslv {

/// A Laurent-monomial substitution target: coef * prod var^exp with exp in Z.
struct LaurentMono {
  BigRat coef = BigRat(1);
  std::vector<std::pair<int, int>> powers;  // (variable index, exponent)

  static LaurentMono constant(const BigRat& c) { return LaurentMono{c, {}}; }
  static LaurentMono var_power(Var v, int e, const BigRat& c = BigRat(1)) {
    return LaurentMono{c, {{v.index, e}}};
  }
};

/// variable index -> replacement value
using SubstMap = std::map<int, LaurentMono>;

/// Rational function num / prod f_i^{m_i} over the rationals.
///
/// Denominators are kept as a multiset of monic factors exactly as they were
/// assembled; identical factors cancel syntactically, but no factorization or
/// multivariate gcd is ever attempted. Equality is decided by
/// cross-multiplication after removing shared factors.
class Rat {
 public:
  struct Factor {
    Poly poly;  // monic (leading graded-lex coefficient 1), non-constant
    int mult;
  };

  Rat() = default;  // zero

  static Rat zero() { return Rat(); }
  static Rat one() { return from_poly(Poly::constant(1)); }
  static Rat from_poly(Poly p);
  static Rat constant(const BigRat& c) { return from_poly(Poly::constant(c)); }
  static Rat constant(long c) { return constant(BigRat(c)); }
  static Rat variable(Var v, int exp = 1);
  static Rat fraction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  Poly den_expanded() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial_form() const { return den_.empty(); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  Rat inverse() const;
  Rat pow(int e) const;

  /// Equality by cross-multiplication: p/q == r/s iff p*s - r*q == 0,
  /// with syntactically shared denominator factors cancelled first.
  bool equals(const Rat& o) const;

  /// Exact division of the numerator by every denominator factor; nullopt if
  /// the value is not a polynomial.
  std::optional<Poly> as_polynomial() const;

  /// Splits the value as (polynomial, monomial denominator); nullopt if some
  /// non-monomial denominator factor does not divide out. This is the natural
  /// "is it a Laurent polynomial" test.
  std::optional<std::pair<Poly, Mono>> as_laurent() const;

  /// Substitutes variables by Laurent monomials (or constants), exactly.
  Rat substitute(const SubstMap& sub) const;

  std::set<int> variables() const;

  std::string to_string(const VarRegistry& reg) const;

 private:
  void normalize();

  Poly num_;
  std::vector<Factor> den_;
};

/// Substitutes into a polynomial; the result may pick up a monomial
/// denominator when exponents go negative.
Rat substitute_poly(const Poly& p, const SubstMap& sub);

/// Evaluates a polynomial at rational-function values (indexed by variable).
/// Variables absent from `values` stay symbolic.
Rat eval_poly(const Poly& p, const std::map<int, Rat>& values);

}  // namespace rslv
