#include <memory>

#include "doctest.h"
#include "rslv/poly.hpp"
#include "rslv/rat.hpp"
#include "rslv/rng.hpp"
#include "rslv/series.hpp"

using namespace rslv;

namespace {

struct Ctx {
  VarRegistry reg;
  Var x, y, z;
  Ctx() : x(reg.intern("x")), y(reg.intern("y")), z(reg.intern("z")) {}
};

Poly random_poly(Rng& rng, const std::vector<Var>& vars, int max_terms, int max_deg) {
  Poly p;
  int terms = static_cast<int>(rng.below(static_cast<uint64_t>(max_terms))) + 1;
  for (int t = 0; t < terms; ++t) {
    Mono m;
    for (const Var& v : vars) {
      int e = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg + 1)));
      if (e > 0) {
        if (m.size() <= static_cast<size_t>(v.index)) m.resize(static_cast<size_t>(v.index) + 1, 0);
        m[static_cast<size_t>(v.index)] = e;
      }
    }
    long c = rng.range(-5, 5);
    if (c != 0) p.add_term(m, BigRat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Ctx c;
  Poly x = Poly::variable(c.x), y = Poly::variable(c.y);
  CHECK((x + y) == (y + x));
  CHECK((x * y) == (y * x));
  CHECK(((x + y) * (x - y)) == (x * x - y * y));
  CHECK((x - x).is_zero());
  CHECK(Poly::constant(0).is_zero());
  CHECK((x * Poly::zero()).is_zero());
}

TEST_CASE("commutativity and associativity on random polys") {
  Ctx c;
  Rng rng(7);
  std::vector<Var> vars{c.x, c.y, c.z};
  for (int i = 0; i < 25; ++i) {
    Poly a = random_poly(rng, vars, 5, 3);
    Poly b = random_poly(rng, vars, 5, 3);
    Poly d = random_poly(rng, vars, 5, 3);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + d) == (a + (b + d)));
    CHECK(((a * b) * d) == (a * (b * d)));
    CHECK((a * (b + d)) == (a * b + a * d));
  }
}

TEST_CASE("graded-lex ordering and serialization") {
  Ctx c;
  Poly p = Poly::variable(c.x, 2) + Poly::variable(c.y) * Poly::variable(c.x) +
           Poly::constant(3) + Poly::variable(c.z);
  // degree-2 terms first (x^2 before x*y), then degree-1, then the constant
  CHECK(p.to_string(c.reg) == "x^2 + x*y + z + 3");
  Poly q = -Poly::variable(c.x) + Poly::constant(BigRat(1, 2));
  CHECK(q.to_string(c.reg) == "-x + 1/2");
}

TEST_CASE("exact division") {
  Ctx c;
  Poly x = Poly::variable(c.x), y = Poly::variable(c.y);
  Poly a = (x + y) * (x - y) * (x + Poly::constant(2));
  auto q = a.divide_exactly(x + y);
  REQUIRE(q.has_value());
  CHECK(*q == (x - y) * (x + Poly::constant(2)));
  CHECK(!a.divide_exactly(x + Poly::constant(1)).has_value());
}

TEST_CASE("rational function equality is an equivalence on tested triples") {
  Ctx c;
  Poly x = Poly::variable(c.x), y = Poly::variable(c.y);
  // p/q == r/s via cross multiplication, including unreduced representatives
  Rat a = Rat::fraction(x * x - y * y, x + y);
  Rat b = Rat::from_poly(x - y);
  Rat d = Rat::fraction((x - y) * (x + Poly::constant(1)), x + Poly::constant(1));
  CHECK(a.equals(a));
  CHECK(a.equals(b));
  CHECK(b.equals(a));
  CHECK(b.equals(d));
  CHECK(a.equals(d));
  CHECK(!a.equals(Rat::from_poly(x + y)));
}

TEST_CASE("(p/q)*(q/p) == 1 for randomized nonzero instances") {
  Ctx c;
  Rng rng(20250809);
  std::vector<Var> vars{c.x, c.y, c.z};
  int done = 0;
  while (done < 100) {
    Poly p = random_poly(rng, vars, 4, 3);
    Poly q = random_poly(rng, vars, 4, 3);
    if (p.is_zero() || q.is_zero()) continue;
    Rat r = Rat::fraction(p, q);
    CHECK((r * r.inverse()).equals(Rat::one()));
    ++done;
  }
}

TEST_CASE("rational arithmetic with shared factors stays small") {
  Ctx c;
  Poly x = Poly::variable(c.x), y = Poly::variable(c.y);
  Rat f = Rat::fraction(Poly::constant(1), x - y);
  Rat g = Rat::fraction(Poly::constant(1), y * y + Poly::constant(1));
  Rat sum = f + g + f * g;
  // denominator factors are tracked, not expanded into one polynomial
  CHECK(sum.den_factors().size() == 2);
  // values are not reduced eagerly; divisibility is checked explicitly
  Rat back = sum * (Rat::from_poly(x - y) * Rat::from_poly(y * y + Poly::constant(1)));
  CHECK(back.as_polynomial().has_value());
}

TEST_CASE("laurent substitution") {
  Ctx c;
  Poly x = Poly::variable(c.x), y = Poly::variable(c.y);
  SubstMap sub;
  sub[c.x.index] = LaurentMono::var_power(c.y, -2, BigRat(3));  // x -> 3/y^2
  Rat r = substitute_poly(x * x + y, sub);
  // 9/y^4 + y = (9 + y^5)/y^4
  Rat expected = Rat::fraction(Poly::constant(9) + Poly::variable(c.y, 5), Poly::variable(c.y, 4));
  CHECK(r.equals(expected));

  SubstMap num;
  num[c.x.index] = LaurentMono::constant(BigRat(1, 2));
  CHECK(substitute_poly(x * x, num).equals(Rat::constant(BigRat(1, 4))));
}

TEST_CASE("series expansion basics") {
  Ctx c;
  Var X = c.reg.intern("X");
  Poly one = Poly::constant(1);
  // 1/(1-X) to order 3
  Rat r = Rat::fraction(one, one - Poly::variable(X));
  Series s = Series::from_rational(r, {X}, {3});
  for (int k = 0; k <= 3; ++k) CHECK(s.coeff({k}).equals(Rat::one()));

  // 1/((1-X)(1-2X)) = 1 + 3X + 7X^2
  Rat r2 = Rat::fraction(one, one - Poly::variable(X)) *
           Rat::fraction(one, one - Poly::constant(2) * Poly::variable(X));
  Series s2 = Series::from_rational(r2, {X}, {2});
  CHECK(s2.coeff({0}).equals(Rat::constant(1)));
  CHECK(s2.coeff({1}).equals(Rat::constant(3)));
  CHECK(s2.coeff({2}).equals(Rat::constant(7)));

  // 1/(1-aX) = 1 + aX + a^2 X^2
  Rat r3 = Rat::fraction(one, one - Poly::variable(c.x) * Poly::variable(X));
  Series s3 = Series::from_rational(r3, {X}, {2});
  CHECK(s3.coeff({2}).equals(Rat::from_poly(Poly::variable(c.x, 2))));
}

TEST_CASE("series round-trip: expand then multiply back by denominator") {
  Ctx c;
  Var X = c.reg.intern("X");
  Rng rng(99);
  std::vector<Var> coefvars{c.x, c.y};
  int done = 0;
  while (done < 50) {
    // denominator with nonzero constant term in X
    Poly den = Poly::constant(rng.range(1, 3));
    int dterms = static_cast<int>(rng.below(3)) + 1;
    for (int t = 0; t < dterms; ++t) {
      Poly coef = random_poly(rng, coefvars, 2, 2);
      den += coef * Poly::variable(X, static_cast<int>(rng.below(3)) + 1);
    }
    Poly num = random_poly(rng, coefvars, 3, 2) +
               random_poly(rng, coefvars, 2, 2) * Poly::variable(X, 2);
    if (num.is_zero()) continue;
    int order = 4;
    Series s = Series::from_rational(Rat::fraction(num, den), {X}, {order});
    Series back = s * Series::from_poly(den, {X}, {order});
    Series expect = Series::from_poly(num, {X}, {order});
    CHECK(back.equals(expect));
    ++done;
  }
}

TEST_CASE("series truncation respects the exact product") {
  Ctx c;
  Var X = c.reg.intern("X");
  Poly a = Poly::constant(1) + Poly::variable(c.x) * Poly::variable(X) + Poly::variable(X, 2);
  Poly b = Poly::constant(2) - Poly::variable(X) + Poly::variable(c.y) * Poly::variable(X, 3);
  int N = 4;
  Series prod = Series::from_poly(a, {X}, {N}) * Series::from_poly(b, {X}, {N});
  Series exact = Series::from_poly(a * b, {X}, {N});
  CHECK(prod.equals(exact));
}

TEST_CASE("two-variable series") {
  Ctx c;
  Var U = c.reg.intern("U"), W = c.reg.intern("W");
  Poly one = Poly::constant(1);
  Rat r = Rat::fraction(one, one - Poly::variable(U) * Poly::variable(W));
  Series s = Series::from_rational(r, {U, W}, {3, 3});
  CHECK(s.coeff({2, 2}).equals(Rat::one()));
  CHECK(s.coeff({2, 1}).is_zero());
  CHECK(s.coeff({3, 3}).equals(Rat::one()));
}
