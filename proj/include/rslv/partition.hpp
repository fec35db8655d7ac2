#pragma once

#include <numeric>
#include <vector>

#include "rslv/errors.hpp"

namespace rslv {

/// Weakly decreasing vector of nonnegative integers. Trailing zeros are kept:
/// the length records the number of variables the partition is paired with.
struct Partition {
  std::vector<int> parts;

  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) throw domain_error("partition parts must be nonnegative");
      if (i + 1 < parts.size() && parts[i] < parts[i + 1])
        throw domain_error("partition parts must be weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  /// Identifies the partition with its zero-padded form of length m.
  Partition padded(int m) const {
    if (m < length()) {
      for (int i = m; i < length(); ++i)
        if (parts[static_cast<size_t>(i)] != 0)
          throw domain_error("cannot truncate nonzero partition parts");
      return Partition(std::vector<int>(parts.begin(), parts.begin() + m));
    }
    std::vector<int> p(parts);
    p.resize(static_cast<size_t>(m), 0);
    return Partition(std::move(p));
  }
};

/// Integer torus exponent vector, not necessarily dominant.
using TorusVector = std::vector<int>;

inline bool is_dominant(const TorusVector& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

inline int vector_weight(const TorusVector& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

/// All partitions of weight <= max_weight with at most `length` parts,
/// returned as padded vectors of exactly `length` parts.
std::vector<Partition> partitions_up_to(int length, int max_weight);

}  // namespace rslv
