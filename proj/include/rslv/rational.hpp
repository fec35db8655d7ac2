#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rslv {

/// Exact arbitrary-precision rational; the coefficient domain everywhere.
using BigRat = mpq_class;

inline BigRat rat_from(long num, long den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const BigRat& r) { return r.get_str(); }

inline BigRat rat_pow(const BigRat& base, long exp) {
  if (exp == 0) return BigRat(1);
  BigRat b = exp > 0 ? base : BigRat(1) / base;
  unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                            : static_cast<unsigned long>(-exp);
  BigRat acc(1);
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

}  // namespace rslv
