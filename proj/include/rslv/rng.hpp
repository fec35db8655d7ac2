#pragma once

#include <cstdint>

namespace rslv {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random> so
/// that seeded runs are byte-identical across platforms and standard-library
/// implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) by rejection; bound must be positive.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace rslv
