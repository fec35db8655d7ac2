#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rslv/errors.hpp"

namespace rslv {

/// Index of a variable inside a VarRegistry.
struct Var {
  int index = -1;
  bool operator==(const Var& o) const { return index == o.index; }
};

/// Ordered, append-only table of variable names. Indices are stable for the
/// lifetime of the registry, so polynomials created early remain valid as more
/// variables are interned.
class VarRegistry {
 public:
  /// Returns the variable named `name`, interning it if new.
  Var intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return Var{it->second};
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return Var{idx};
  }

  /// Looks up an existing variable; throws if absent.
  Var var(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw domain_error("unknown variable: " + name);
    return Var{it->second};
  }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  const std::string& name(Var v) const {
    if (v.index < 0 || v.index >= static_cast<int>(names_.size()))
      throw domain_error("variable index out of range");
    return names_[static_cast<size_t>(v.index)];
  }

  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace rslv
