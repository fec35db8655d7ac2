#include "rslv/series.hpp"

#include <algorithm>
#include <sstream>

#include "rslv/errors.hpp"

namespace rslv {

Series::Series(std::vector<Var> expansion_vars, std::vector<int> order)
    : evars_(std::move(expansion_vars)), order_(std::move(order)) {
  if (evars_.empty() || evars_.size() > 2)
    throw domain_error("series supports one or two expansion variables");
  if (order_.size() != evars_.size()) throw domain_error("order/variable count mismatch");
  for (int o : order_)
    if (o < 0) throw domain_error("negative truncation order");
}

bool Series::within(const std::vector<int>& exps) const {
  if (exps.size() != evars_.size()) throw domain_error("exponent arity mismatch");
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 || exps[i] > order_[i]) return false;
  return true;
}

Rat Series::coeff(const std::vector<int>& exps) const {
  auto it = coeffs_.find(exps);
  return it == coeffs_.end() ? Rat::zero() : it->second;
}

void Series::set_coeff(const std::vector<int>& exps, Rat value) {
  if (!within(exps)) throw domain_error("series exponent outside truncation order");
  if (value.is_zero())
    coeffs_.erase(exps);
  else
    coeffs_[exps] = std::move(value);
}

void Series::add_coeff(const std::vector<int>& exps, const Rat& value) {
  if (!within(exps)) throw domain_error("series exponent outside truncation order");
  auto it = coeffs_.find(exps);
  if (it == coeffs_.end()) {
    if (!value.is_zero()) coeffs_.emplace(exps, value);
  } else {
    it->second = it->second + value;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void Series::check_compatible(const Series& o) const {
  if (evars_.size() != o.evars_.size()) throw domain_error("series arity mismatch");
  for (size_t i = 0; i < evars_.size(); ++i)
    if (!(evars_[i] == o.evars_[i])) throw domain_error("series expansion variables differ");
  if (order_ != o.order_) throw domain_error("series truncation orders differ");
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  Series r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, c);
  return r;
}

Series Series::operator-(const Series& o) const {
  check_compatible(o);
  Series r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, -c);
  return r;
}

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  Series r(evars_, order_);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      std::vector<int> e(ea.size());
      bool ok = true;
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > order_[i]) {
          ok = false;
          break;
        }
      }
      if (ok) r.add_coeff(e, ca * cb);
    }
  }
  return r;
}

Series Series::scale(const Rat& c) const {
  Series r(evars_, order_);
  for (const auto& [e, v] : coeffs_) r.add_coeff(e, v * c);
  return r;
}

Series Series::inverse() const {
  std::vector<int> origin(evars_.size(), 0);
  Rat c0 = coeff(origin);
  if (c0.is_zero())
    throw non_expandable_error("series has no invertible constant term");
  Rat c0inv = c0.inverse();
  Series inv(evars_, order_);
  inv.set_coeff(origin, c0inv);
  // graded recursion: b_m = -c0^{-1} * sum_{0 < k <= m} a_k b_{m-k}
  std::vector<std::vector<int>> grid;
  {
    std::vector<int> e(evars_.size(), 0);
    if (evars_.size() == 1) {
      for (e[0] = 0; e[0] <= order_[0]; ++e[0]) grid.push_back(e);
    } else {
      for (e[0] = 0; e[0] <= order_[0]; ++e[0])
        for (e[1] = 0; e[1] <= order_[1]; ++e[1]) grid.push_back(e);
    }
    std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int x : a) da += x;
      for (int x : b) db += x;
      if (da != db) return da < db;
      return a < b;
    });
  }
  for (const auto& m : grid) {
    bool is_origin = true;
    for (int x : m)
      if (x != 0) is_origin = false;
    if (is_origin) continue;
    Rat acc = Rat::zero();
    for (const auto& [k, ak] : coeffs_) {
      bool positive = false, fits = true;
      std::vector<int> rest(m.size());
      for (size_t i = 0; i < m.size(); ++i) {
        rest[i] = m[i] - k[i];
        if (k[i] > 0) positive = true;
        if (rest[i] < 0) fits = false;
      }
      if (!positive || !fits) continue;
      Rat b = inv.coeff(rest);
      if (!b.is_zero()) acc = acc + ak * b;
    }
    if (!acc.is_zero()) inv.set_coeff(m, -(c0inv * acc));
  }
  return inv;
}

bool Series::equals(const Series& o) const {
  check_compatible(o);
  for (const auto& [e, c] : coeffs_)
    if (!c.equals(o.coeff(e))) return false;
  for (const auto& [e, c] : o.coeffs_)
    if (coeffs_.find(e) == coeffs_.end() && !c.is_zero()) return false;
  return true;
}

Series Series::from_poly(const Poly& p, std::vector<Var> evars, std::vector<int> order) {
  Series s(std::move(evars), std::move(order));
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(s.evars_.size(), 0);
    Mono rest(m);
    bool keep = true;
    for (size_t i = 0; i < s.evars_.size(); ++i) {
      size_t idx = static_cast<size_t>(s.evars_[i].index);
      if (idx < rest.size()) {
        e[i] = rest[idx];
        rest[idx] = 0;
      }
      if (e[i] > s.order_[i]) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    mono_trim(rest);
    s.add_coeff(e, Rat::from_poly(Poly::monomial(rest, c)));
  }
  return s;
}

Series Series::from_rational(const Rat& r, std::vector<Var> evars, std::vector<int> order) {
  Series s = from_poly(r.num(), evars, order);
  for (const auto& f : r.den_factors()) {
    Series fs = from_poly(f.poly, evars, order);
    std::vector<int> origin(evars.size(), 0);
    if (fs.coeff(origin).is_zero())
      throw non_expandable_error(
          "denominator factor has zero constant term in the expansion variables");
    Series finv = fs.inverse();
    for (int k = 0; k < f.mult; ++k) s = s * finv;
  }
  return s;
}

std::string Series::to_string(const VarRegistry& reg) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << "[" << c.to_string(reg) << "]";
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*" << reg.name(evars_[i]);
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace rslv
