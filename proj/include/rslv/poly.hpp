#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rslv/rational.hpp"
#include "rslv/registry.hpp"

namespace rslv {

/// Exponent vector of a monomial. Trailing zeros are trimmed so the same
/// monomial has one representation regardless of how many variables have been
/// interned since it was built.
using Mono = std::vector<int32_t>;

int mono_total_degree(const Mono& m);
void mono_trim(Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
/// Componentwise a - b; returns nullopt if any exponent would go negative.
std::optional<Mono> mono_div(const Mono& a, const Mono& b);

/// Graded-lexicographic order: higher total degree first, ties broken
/// lexicographically with earlier registry indices weighing more.
bool mono_grlex_less(const Mono& a, const Mono& b);

struct MonoGrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_grlex_less(b, a); }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending graded-lex order; no zero coefficients are
/// stored. Immutable in spirit: arithmetic returns new values.
class Poly {
 public:
  using Terms = std::map<Mono, BigRat, MonoGrlexGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(const BigRat& c);
  static Poly constant(long c) { return constant(BigRat(c)); }
  static Poly variable(Var v, int exp = 1);
  static Poly monomial(Mono m, const BigRat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial included).
  BigRat constant_value() const;
  /// True if the polynomial is c * x^m for a single monomial.
  bool is_single_term() const { return terms_.size() == 1; }

  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  int total_degree() const;

  /// Leading term under graded-lex (largest). Polynomial must be nonzero.
  const std::pair<const Mono, BigRat>& leading() const;

  void add_term(const Mono& m, const BigRat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const BigRat& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Total order consistent with ==, used to keep factor lists canonical.
  static int compare(const Poly& a, const Poly& b);

  /// Exact division: returns q with *this == q * divisor, or nullopt if the
  /// division is not exact. Divisor must be nonzero.
  std::optional<Poly> divide_exactly(const Poly& divisor) const;

  /// Indices of variables that occur with nonzero exponent.
  std::set<int> variables() const;

  /// Canonical textual form: terms sorted descending graded-lex, e.g.
  /// "3*x1^2*x2 - 1/2*x3 + 5".
  std::string to_string(const VarRegistry& reg) const;

 private:
  Terms terms_;
};

inline Poly operator*(const BigRat& c, const Poly& p) { return p * c; }

}  // namespace rslv
