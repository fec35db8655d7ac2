#include <vector>

#include "doctest.h"
#include "rslv/rng.hpp"
#include "rslv/satake.hpp"

using namespace rslv;

namespace {

struct Setup {
  VarRegistry reg;
  Var V, X;
  Setup() : V(reg.intern("V")), X(reg.intern("X")) {}
};

}  // namespace

TEST_CASE("rankin-selberg inverse roots are pairwise products") {
  Setup s;
  SatakeData p1 = SatakeData::symbolic(s.reg, "a", 2);
  SatakeData p2 = SatakeData::symbolic(s.reg, "b", 2);
  LFactorRoots roots = rs_lfactor(p1, p2, s.X);
  REQUIRE(roots.inverse_roots.size() == 4);
  CHECK(roots.inverse_roots[0].equals(p1.params[0] * p2.params[0]));
  CHECK(roots.inverse_roots[1].equals(p1.params[0] * p2.params[1]));
  CHECK(roots.inverse_roots[3].equals(p1.params[1] * p2.params[1]));

  SatakeData r1 = SatakeData::numeric({BigRat(3)});
  SatakeData r2 = SatakeData::numeric({BigRat(5)});
  CHECK(rs_lfactor(r1, r2, s.X).inverse_roots[0].equals(Rat::constant(15)));

  // self-dual rank-2 pair (a, 1/a) x (b, 1/b)
  SatakeData sd1 = SatakeData::symbolic(s.reg, "c", 2, /*unit_product=*/true);
  SatakeData sd2 = SatakeData::symbolic(s.reg, "d", 2, /*unit_product=*/true);
  LFactorRoots sd = rs_lfactor(sd1, sd2, s.X);
  CHECK(sd.inverse_roots[0].equals(sd1.params[0] * sd2.params[0]));
  CHECK(sd.inverse_roots[3].equals((sd1.params[0] * sd2.params[0]).inverse()));
}

TEST_CASE("local zeta factor") {
  Setup s;
  Poly v2 = Poly::variable(s.V, 2);
  CHECK(zeta_local(1, s.V).equals(Rat::fraction(Poly::variable(s.V, 2), v2 - Poly::constant(1))));
  CHECK(zeta_local(2, s.V)
            .equals(Rat::fraction(Poly::variable(s.V, 4), Poly::variable(s.V, 4) - Poly::constant(1))));
  CHECK_THROWS_AS(zeta_local(0, s.V), domain_error);

  // zeta(1)/zeta(3) = (1 - q^{-3})/(1 - q^{-1}) = (q^2 + q + 1)/q^2 with q = V^2
  Rat ratio = zeta_local(1, s.V) / zeta_local(3, s.V);
  Rat q = Rat::variable(s.V, 2);
  CHECK(ratio.equals((q * q + q + Rat::one()) / (q * q)));
  // q = 2 gives (1 - 1/8)/(1 - 1/2) = 7/4
  BigRat at2 = (BigRat(1) - BigRat(1, 8)) / (BigRat(1) - BigRat(1, 2));
  CHECK(at2 == BigRat(7, 4));
  SubstMap sub;  // V = 2, i.e. q = 4
  sub[s.V.index] = LaurentMono::constant(BigRat(2));
  CHECK(ratio.substitute(sub).equals(Rat::constant(BigRat(21, 16))));
}

TEST_CASE("fundamental hecke eigenvalues") {
  Setup s;
  SatakeData pi = SatakeData::symbolic(s.reg, "m", 2);
  CHECK(hecke_eigenvalue_fundamental(pi, 0).equals(Rat::one()));
  CHECK(hecke_eigenvalue_fundamental(pi, 1).equals(pi.params[0] + pi.params[1]));
  SatakeData up = SatakeData::symbolic(s.reg, "u", 3, /*unit_product=*/true);
  CHECK(hecke_eigenvalue_fundamental(up, 3).equals(Rat::one()));
  CHECK_THROWS_AS(hecke_eigenvalue_fundamental(pi, 3), domain_error);
}

TEST_CASE("half-modulus character") {
  Setup s;
  CHECK(modulus_char_sqrt(2, {1, 0}, s.V).equals(Rat::variable(s.V, -1)));
  CHECK(modulus_char_sqrt(4, {0, 0, 0, 0}, s.V).equals(Rat::one()));
  CHECK(modulus_char_sqrt(3, {1, 1, 1}, s.V).equals(Rat::one()));
}

TEST_CASE("shintani values") {
  Setup s;
  SatakeData pi = SatakeData::symbolic(s.reg, "al", 2, /*unit_product=*/true);
  Rat alpha = pi.params[0];

  // W(diag(p,1)) = V^{-1} (alpha + 1/alpha)
  Rat expect = Rat::variable(s.V, -1) * (alpha + alpha.inverse());
  CHECK(shintani_value(pi, {1, 0}, s.V).equals(expect));

  // non-dominant vectors are outside the support
  CHECK(shintani_value(pi, {0, 1}, s.V).is_zero());

  // normalization W(1) = 1
  CHECK(shintani_value(pi, {0, 0}, s.V).equals(Rat::one()));

  // negative parts via the central shift
  CHECK(shintani_value(pi, {0, -1}, s.V)
            .equals(Rat::variable(s.V, -1) * (alpha + alpha.inverse())));
}

TEST_CASE("shintani central invariance under unit product") {
  Setup s;
  for (int m = 2; m <= 4; ++m) {
    SatakeData pi = SatakeData::symbolic(s.reg, "z" + std::to_string(m), m, true);
    for (const Partition& nu : partitions_up_to(m, 5)) {
      TorusVector v(nu.parts);
      Rat base = shintani_value(pi, v, s.V);
      for (int c : {-2, 1, 3}) {
        TorusVector w(v);
        for (int& e : w) e += c;
        CHECK(shintani_value(pi, w, s.V).equals(base));
      }
    }
  }
}

TEST_CASE("shintani vanishes on random non-dominant vectors") {
  Setup s;
  SatakeData pi = SatakeData::symbolic(s.reg, "nd", 3);
  Rng rng(1234);
  int checked = 0;
  while (checked < 50) {
    TorusVector v{static_cast<int>(rng.range(-4, 4)), static_cast<int>(rng.range(-4, 4)),
                  static_cast<int>(rng.range(-4, 4))};
    if (is_dominant(v)) continue;
    CHECK(shintani_value(pi, v, s.V).is_zero());
    ++checked;
  }
}

TEST_CASE("shifted newvector values") {
  Setup s;
  SatakeData pi = SatakeData::symbolic(s.reg, "sh", 2, true);
  Rat alpha = pi.params[0];
  CHECK(shifted_shintani_value(pi, 0, {1, 0}, s.V).equals(shintani_value(pi, {1, 0}, s.V)));
  CHECK(shifted_shintani_value(pi, 1, {0, 0}, s.V)
            .equals(Rat::variable(s.V, -1) * (alpha + alpha.inverse())));
  // (0,1) shifted by (1,0) lands on the central vector (1,1)
  CHECK(shifted_shintani_value(pi, 1, {0, 1}, s.V).equals(Rat::one()));
}

TEST_CASE("zeta series GL(m) x GL(m-1) matches the euler product") {
  for (int m = 2; m <= 3; ++m) {
    VarRegistry reg;
    Var V = reg.intern("V"), X = reg.intern("X");
    SatakeData Pi = SatakeData::symbolic(reg, "mu", m);
    SatakeData pip = SatakeData::symbolic(reg, "nu", m - 1);
    int order = 4;
    Series torus = zeta_series_gl_m_m1(Pi, pip, order, X, V);
    Series euler = euler_product_series(rs_lfactor(Pi, pip, X), order);
    CHECK(torus.equals(euler));
    // order-0 and first coefficients
    CHECK(torus.coeff({0}).equals(Rat::one()));
    if (m == 2) {
      Rat e1 = hecke_eigenvalue_fundamental(Pi, 1);
      CHECK(torus.coeff({1}).equals(e1 * pip.params[0]));
    }
  }
}

TEST_CASE("zeta series GL(m) x GL(m) matches the euler product") {
  for (int m = 2; m <= 3; ++m) {
    VarRegistry reg;
    Var V = reg.intern("V"), X = reg.intern("X");
    SatakeData pi = SatakeData::symbolic(reg, "mu", m);
    SatakeData pip = m == 3 ? SatakeData::symbolic(reg, "nu", m, /*unit_product=*/true)
                            : SatakeData::symbolic(reg, "nu", m);
    int order = m == 3 ? 3 : 4;
    Series torus = zeta_series_gl_m_m(pi, pip, order, X, V);
    Series euler = euler_product_series(rs_lfactor(pi, pip, X), order);
    CHECK(torus.equals(euler));
    CHECK(torus.coeff({0}).equals(Rat::one()));
  }
}

TEST_CASE("whittaker recursion") {
  Setup s;

  SUBCASE("m = 2 closed form") {
    SatakeData pi = SatakeData::symbolic(s.reg, "w", 2, true);
    Rat mu = pi.params[0];
    for (int j = 0; j <= 3; ++j) {
      CHECK(whittaker_recursion_check(pi, {j}, s.V));
      // both sides equal q^{-j/2} (mu^{j+1} - mu^{-(j+1)}) / (mu - mu^{-1})
      Rat expected = Rat::variable(s.V, -j) * (mu.pow(j + 1) - mu.pow(-(j + 1))) /
                     (mu - mu.inverse());
      TorusVector padded{j, 0};
      CHECK(shintani_value(pi, padded, s.V).equals(expected));
    }
  }

  SUBCASE("m = 3 symbolic") {
    SatakeData pi = SatakeData::symbolic(s.reg, "y", 3, true);
    CHECK(whittaker_recursion_check(pi, {0, 0}, s.V));
    CHECK(whittaker_recursion_check(pi, {2, 1}, s.V));
  }

  SUBCASE("degenerate parameters are rejected") {
    SatakeData pi = SatakeData::numeric({BigRat(2), BigRat(2), BigRat(3)});
    CHECK_THROWS_AS(whittaker_recursion_check(pi, {1, 0}, s.V), degenerate_error);
  }
}
