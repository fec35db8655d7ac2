#include "rslv/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rslv/errors.hpp"

namespace rslv {

int mono_total_degree(const Mono& m) {
  int d = 0;
  for (int32_t e : m) d += e;
  return d;
}

void mono_trim(Mono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  mono_trim(r);
  return r;
}

std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
  if (b.size() > a.size()) {
    for (size_t i = a.size(); i < b.size(); ++i)
      if (b[i] != 0) return std::nullopt;
  }
  Mono r(a);
  for (size_t i = 0; i < b.size() && i < a.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) return std::nullopt;
  }
  mono_trim(r);
  return r;
}

bool mono_grlex_less(const Mono& a, const Mono& b) {
  int da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int32_t ea = i < a.size() ? a[i] : 0;
    int32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

Poly Poly::constant(const BigRat& c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Mono{}, c);
  return p;
}

Poly Poly::variable(Var v, int exp) {
  if (v.index < 0) throw domain_error("invalid variable");
  if (exp < 0) throw domain_error("negative exponent in polynomial monomial");
  if (exp == 0) return constant(1);
  Mono m(static_cast<size_t>(v.index) + 1, 0);
  m[static_cast<size_t>(v.index)] = exp;
  Poly p;
  p.terms_.emplace(std::move(m), BigRat(1));
  return p;
}

Poly Poly::monomial(Mono m, const BigRat& c) {
  Poly p;
  if (c != 0) {
    mono_trim(m);
    for (int32_t e : m)
      if (e < 0) throw domain_error("negative exponent in polynomial monomial");
    p.terms_.emplace(std::move(m), c);
  }
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

BigRat Poly::constant_value() const {
  if (terms_.empty()) return BigRat(0);
  if (!is_constant()) throw domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return 0;
  return mono_total_degree(terms_.begin()->first);
}

const std::pair<const Mono, BigRat>& Poly::leading() const {
  if (terms_.empty()) throw domain_error("leading term of zero polynomial");
  return *terms_.begin();
}

void Poly::add_term(const Mono& m, const BigRat& c) {
  if (c == 0) return;
  Mono key(m);
  mono_trim(key);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  // Iterate the smaller factor outermost: fewer passes over the big one.
  const Poly& a = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& b = terms_.size() <= o.terms_.size() ? o : *this;
  BigRat prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(mono_mul(ma, mb), prod);
    }
  }
  return r;
}

Poly Poly::operator*(const BigRat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(1);
  Poly base(*this);
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

int Poly::compare(const Poly& a, const Poly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return mono_grlex_less(ia->first, ib->first) ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::optional<Poly> Poly::divide_exactly(const Poly& divisor) const {
  if (divisor.is_zero()) throw domain_error("division by zero polynomial");
  Poly quotient;
  Poly rem(*this);
  const auto& [dm, dc] = divisor.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    auto q = mono_div(rm, dm);
    if (!q) return std::nullopt;
    BigRat qc = rc / dc;
    quotient.add_term(*q, qc);
    // rem -= (qc * q) * divisor
    Poly sub;
    for (const auto& [m, c] : divisor.terms()) sub.add_term(mono_mul(*q, m), c * qc);
    rem -= sub;
  }
  return quotient;
}

std::set<int> Poly::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) vars.insert(static_cast<int>(i));
  return vars;
}

std::string Poly::to_string(const VarRegistry& reg) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRat coef = c;
    if (first) {
      if (coef < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool has_vars = !m.empty();
    bool coef_shown = !has_vars || coef != 1;
    if (coef_shown) out << rat_to_string(coef);
    bool first_var = true;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var || coef_shown) out << "*";
      out << reg.name(Var{static_cast<int>(i)});
      if (m[i] != 1) out << "^" << m[i];
      first_var = false;
    }
  }
  return out.str();
}

}  // namespace rslv
