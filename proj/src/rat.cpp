#include "rslv/rat.hpp"

#include <algorithm>
#include <sstream>

#include "rslv/errors.hpp"

namespace rslv {

namespace {

// Scales p so its leading graded-lex coefficient is 1; returns the scale taken out.
BigRat make_monic(Poly& p) {
  BigRat lc = p.leading().second;
  if (lc != 1) p = p * (BigRat(1) / lc);
  return lc;
}

}  // namespace

Rat Rat::from_poly(Poly p) {
  Rat r;
  r.num_ = std::move(p);
  return r;
}

Rat Rat::variable(Var v, int exp) {
  if (exp >= 0) return from_poly(Poly::variable(v, exp));
  return fraction(Poly::constant(1), Poly::variable(v, -exp));
}

Rat Rat::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw domain_error("zero denominator");
  Rat r;
  r.num_ = std::move(num);
  if (den.is_constant()) {
    r.num_ = r.num_ * (BigRat(1) / den.constant_value());
  } else {
    BigRat lc = make_monic(den);
    r.num_ = r.num_ * (BigRat(1) / lc);
    r.den_.push_back(Factor{std::move(den), 1});
  }
  r.normalize();
  return r;
}

Poly Rat::den_expanded() const {
  Poly d = Poly::constant(1);
  for (const auto& f : den_) d = d * f.poly.pow(static_cast<unsigned>(f.mult));
  return d;
}

void Rat::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
    return Poly::compare(a.poly, b.poly) < 0;
  });
  // merge equal factors
  std::vector<Factor> merged;
  for (auto& f : den_) {
    if (!merged.empty() && Poly::compare(merged.back().poly, f.poly) == 0)
      merged.back().mult += f.mult;
    else
      merged.push_back(std::move(f));
  }
  den_ = std::move(merged);

  // Cancel the numerator's monomial content against monomial denominator factors.
  if (!den_.empty()) {
    Mono content;
    bool first = true;
    for (const auto& [m, c] : num_.terms()) {
      if (first) {
        content = m;
        first = false;
      } else {
        if (m.size() < content.size()) content.resize(m.size());
        for (size_t i = 0; i < content.size(); ++i)
          content[i] = std::min(content[i], i < m.size() ? m[i] : 0);
      }
      if (content.empty()) break;
    }
    mono_trim(content);
    if (!content.empty()) {
      for (auto& f : den_) {
        if (content.empty()) break;
        if (!f.poly.is_single_term()) continue;
        const Mono& fm = f.poly.leading().first;
        while (f.mult > 0) {
          auto q = mono_div(content, fm);
          if (!q) break;
          content = *q;
          f.mult -= 1;
          // shift the numerator down by fm
          Poly shifted;
          for (const auto& [m, c] : num_.terms()) shifted.add_term(*mono_div(m, fm), c);
          num_ = std::move(shifted);
        }
      }
      den_.erase(std::remove_if(den_.begin(), den_.end(),
                                [](const Factor& f) { return f.mult == 0; }),
                 den_.end());
    }
  }

  // If the whole numerator equals a denominator factor up to scale, cancel it.
  if (!den_.empty() && !num_.is_constant()) {
    Poly monic_num = num_;
    BigRat scale = make_monic(monic_num);
    for (auto it = den_.begin(); it != den_.end(); ++it) {
      if (Poly::compare(it->poly, monic_num) == 0) {
        num_ = Poly::constant(scale);
        if (--it->mult == 0) den_.erase(it);
        break;
      }
    }
  }
}

Rat Rat::operator-() const {
  Rat r(*this);
  r.num_ = -r.num_;
  return r;
}

Rat Rat::operator*(const Rat& o) const {
  Rat r;
  if (is_zero() || o.is_zero()) return r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.normalize();
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // lcd: max multiplicity per distinct factor
  std::vector<Factor> lcd;
  {
    size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
      if (i == den_.size()) {
        lcd.push_back(o.den_[j++]);
      } else if (j == o.den_.size()) {
        lcd.push_back(den_[i++]);
      } else {
        int c = Poly::compare(den_[i].poly, o.den_[j].poly);
        if (c < 0)
          lcd.push_back(den_[i++]);
        else if (c > 0)
          lcd.push_back(o.den_[j++]);
        else {
          lcd.push_back(Factor{den_[i].poly, std::max(den_[i].mult, o.den_[j].mult)});
          ++i;
          ++j;
        }
      }
    }
  }
  auto cofactor = [&lcd](const std::vector<Factor>& own) {
    Poly c = Poly::constant(1);
    size_t i = 0;
    for (const auto& l : lcd) {
      int have = 0;
      if (i < own.size() && Poly::compare(own[i].poly, l.poly) == 0) have = own[i++].mult;
      if (l.mult > have) c = c * l.poly.pow(static_cast<unsigned>(l.mult - have));
    }
    return c;
  };
  Rat r;
  r.num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
  r.den_ = std::move(lcd);
  r.normalize();
  return r;
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::inverse() const {
  if (is_zero()) throw domain_error("inverse of zero rational function");
  Rat r;
  r.num_ = den_expanded();
  if (num_.is_constant()) {
    r.num_ = r.num_ * (BigRat(1) / num_.constant_value());
  } else {
    Poly f = num_;
    BigRat lc = make_monic(f);
    r.num_ = r.num_ * (BigRat(1) / lc);
    r.den_.push_back(Factor{std::move(f), 1});
  }
  r.normalize();
  return r;
}

Rat Rat::operator/(const Rat& o) const { return *this * o.inverse(); }

Rat Rat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rat r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  if (r.num_.is_zero()) return r;
  for (const auto& f : den_) r.den_.push_back(Factor{f.poly, f.mult * e});
  r.normalize();
  return r;
}

bool Rat::equals(const Rat& o) const {
  // strip shared factors
  std::vector<Factor> da, db;
  {
    size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
      if (i == den_.size()) {
        db.push_back(o.den_[j++]);
      } else if (j == o.den_.size()) {
        da.push_back(den_[i++]);
      } else {
        int c = Poly::compare(den_[i].poly, o.den_[j].poly);
        if (c < 0)
          da.push_back(den_[i++]);
        else if (c > 0)
          db.push_back(o.den_[j++]);
        else {
          int m = den_[i].mult - o.den_[j].mult;
          if (m > 0) da.push_back(Factor{den_[i].poly, m});
          if (m < 0) db.push_back(Factor{den_[i].poly, -m});
          ++i;
          ++j;
        }
      }
    }
  }
  Poly lhs = num_;
  for (const auto& f : db) lhs = lhs * f.poly.pow(static_cast<unsigned>(f.mult));
  Poly rhs = o.num_;
  for (const auto& f : da) rhs = rhs * f.poly.pow(static_cast<unsigned>(f.mult));
  return lhs == rhs;
}

std::optional<Poly> Rat::as_polynomial() const {
  Poly p = num_;
  for (const auto& f : den_) {
    for (int k = 0; k < f.mult; ++k) {
      auto q = p.divide_exactly(f.poly);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  }
  return p;
}

std::optional<std::pair<Poly, Mono>> Rat::as_laurent() const {
  Poly p = num_;
  Mono den;
  for (const auto& f : den_) {
    if (f.poly.is_single_term()) {
      const auto& [m, c] = f.poly.leading();
      for (int k = 0; k < f.mult; ++k) den = mono_mul(den, m);
      continue;  // monic single term has coefficient 1
    }
    for (int k = 0; k < f.mult; ++k) {
      auto q = p.divide_exactly(f.poly);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
  }
  return std::make_pair(std::move(p), std::move(den));
}

Rat substitute_poly(const Poly& p, const SubstMap& sub) {
  if (sub.empty()) return Rat::from_poly(p);
  // Laurent accumulation: exponents may go negative, split at the end.
  std::map<Mono, BigRat, MonoGrlexGreater> laurent;
  for (const auto& [m, c] : p.terms()) {
    BigRat coef = c;
    Mono acc;
    auto bump = [&acc](int idx, long delta) {
      if (acc.size() <= static_cast<size_t>(idx)) acc.resize(static_cast<size_t>(idx) + 1, 0);
      acc[static_cast<size_t>(idx)] += static_cast<int32_t>(delta);
    };
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = sub.find(static_cast<int>(i));
      if (it == sub.end()) {
        bump(static_cast<int>(i), m[i]);
        continue;
      }
      const LaurentMono& lm = it->second;
      if (lm.coef == 0) {
        coef = 0;  // the exponent here is positive, so the term vanishes
        break;
      }
      coef *= rat_pow(lm.coef, m[i]);
      for (const auto& [vi, e] : lm.powers) bump(vi, static_cast<long>(e) * m[i]);
    }
    if (coef == 0) continue;
    mono_trim(acc);
    auto [it2, inserted] = laurent.emplace(std::move(acc), coef);
    if (!inserted) {
      it2->second += coef;
      if (it2->second == 0) laurent.erase(it2);
    }
  }
  // common denominator monomial: componentwise max of negative exponents
  Mono shift;
  for (const auto& [m, c] : laurent) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0) {
        if (shift.size() <= i) shift.resize(i + 1, 0);
        shift[i] = std::max(shift[i], -m[i]);
      }
    }
  }
  Poly num;
  for (const auto& [m, c] : laurent) {
    Mono shifted(std::max(m.size(), shift.size()), 0);
    for (size_t i = 0; i < shifted.size(); ++i) {
      shifted[i] = (i < m.size() ? m[i] : 0) + (i < shift.size() ? shift[i] : 0);
    }
    mono_trim(shifted);
    num.add_term(shifted, c);
  }
  mono_trim(shift);
  if (shift.empty()) return Rat::from_poly(std::move(num));
  return Rat::fraction(std::move(num), Poly::monomial(shift, BigRat(1)));
}

Rat Rat::substitute(const SubstMap& sub) const {
  Rat result = substitute_poly(num_, sub);
  for (const auto& f : den_) {
    Rat fs = substitute_poly(f.poly, sub);
    if (fs.is_zero()) throw domain_error("substitution produced a zero denominator factor");
    result = result * fs.inverse().pow(f.mult);
  }
  return result;
}

std::set<int> Rat::variables() const {
  std::set<int> vars = num_.variables();
  for (const auto& f : den_) {
    auto fv = f.poly.variables();
    vars.insert(fv.begin(), fv.end());
  }
  return vars;
}

Rat eval_poly(const Poly& p, const std::map<int, Rat>& values) {
  // power cache per variable
  std::map<int, std::vector<Rat>> powers;
  auto power_of = [&](int idx, int e) -> const Rat& {
    auto& cache = powers[idx];
    if (cache.empty()) cache.push_back(Rat::one());
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * values.at(idx));
    return cache[static_cast<size_t>(e)];
  };
  Rat acc = Rat::zero();
  for (const auto& [m, c] : p.terms()) {
    Rat term = Rat::constant(c);
    Poly sym = Poly::constant(1);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      int idx = static_cast<int>(i);
      if (values.count(idx))
        term = term * power_of(idx, m[i]);
      else
        sym = sym * Poly::variable(Var{idx}, m[i]);
    }
    acc = acc + term * Rat::from_poly(sym);
  }
  return acc;
}

std::string Rat::to_string(const VarRegistry& reg) const {
  if (den_.empty()) return num_.to_string(reg);
  std::ostringstream out;
  out << "(" << num_.to_string(reg) << ") / (";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) out << " * ";
    first = false;
    out << "(" << f.poly.to_string(reg) << ")";
    if (f.mult != 1) out << "^" << f.mult;
  }
  out << ")";
  return out.str();
}

}  // namespace rslv
