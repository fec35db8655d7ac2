#pragma once

#include <stdexcept>
#include <string>

namespace rslv {

/// Precondition violation: the requested value lies outside the operation's domain.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Degenerate input: coincident parameters, duplicate interpolation nodes, etc.
class degenerate_error : public std::invalid_argument {
 public:
  explicit degenerate_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation whose exactness is asserted internally (e.g. an exact division)
/// failed; indicates a bug, not bad input.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration would exceed the configured element budget.
class budget_error : public std::runtime_error {
 public:
  budget_error(const std::string& what, unsigned long long estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  unsigned long long estimate() const { return estimate_; }

 private:
  unsigned long long estimate_;
};

/// A rational function cannot be expanded as a power series in the requested
/// variables (denominator constant term vanishes).
class non_expandable_error : public std::invalid_argument {
 public:
  explicit non_expandable_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rslv
