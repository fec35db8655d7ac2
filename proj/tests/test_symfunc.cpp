#include <vector>

#include "doctest.h"
#include "rslv/symfunc.hpp"

using namespace rslv;

namespace {

struct Vars {
  VarRegistry reg;
  std::vector<Var> x;
  explicit Vars(int m) {
    for (int i = 1; i <= m; ++i) x.push_back(reg.intern("x" + std::to_string(i)));
  }
};

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
  Vars v(3);
  Poly x1 = Poly::variable(v.x[0]), x2 = Poly::variable(v.x[1]), x3 = Poly::variable(v.x[2]);
  CHECK(elementary_symmetric(0, std::span<const Var>(v.x.data(), 2)) == Poly::constant(1));
  CHECK(elementary_symmetric(2, v.x) == x1 * x2 + x1 * x3 + x2 * x3);
  CHECK(elementary_symmetric(3, v.x) == x1 * x2 * x3);
  CHECK_THROWS_AS(elementary_symmetric(-1, v.x), domain_error);
  CHECK_THROWS_AS(elementary_symmetric(4, v.x), domain_error);
}

TEST_CASE("complete homogeneous polynomials") {
  Vars v(3);
  Poly x1 = Poly::variable(v.x[0]), x2 = Poly::variable(v.x[1]), x3 = Poly::variable(v.x[2]);
  std::span<const Var> two(v.x.data(), 2);
  CHECK(complete_homogeneous(2, two) == x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(complete_homogeneous(0, std::span<const Var>(v.x.data(), 1)) == Poly::constant(1));
  CHECK(complete_homogeneous(1, v.x) == x1 + x2 + x3);
  CHECK_THROWS_AS(complete_homogeneous(-2, v.x), domain_error);
}

TEST_CASE("schur examples") {
  Vars v(2);
  std::span<const Var> xs(v.x);
  CHECK(schur(Partition({0, 0}), xs) == Poly::constant(1));
  CHECK(schur(Partition({1, 0}), xs) == elementary_symmetric(1, xs));
  CHECK(schur(Partition({2, 0}), xs) == complete_homogeneous(2, xs));
}

TEST_CASE("bialternant agrees with Jacobi-Trudi for m <= 4, |nu| <= 6") {
  for (int m = 1; m <= 4; ++m) {
    Vars v(m);
    std::span<const Var> xs(v.x);
    for (const Partition& nu : partitions_up_to(m, 6)) {
      CAPTURE(m);
      CHECK(schur(nu, xs) == schur_jacobi_trudi(nu, xs));
    }
  }
}

TEST_CASE("pieri: one-row schur equals complete homogeneous") {
  for (int m = 1; m <= 4; ++m) {
    Vars v(m);
    std::span<const Var> xs(v.x);
    for (int k = 0; k <= 6; ++k) {
      std::vector<int> row(static_cast<size_t>(m), 0);
      row[0] = k;
      CHECK(schur(Partition(row), xs) == complete_homogeneous(k, xs));
    }
  }
}

TEST_CASE("cauchy identity at truncation, m <= 3, order 6") {
  for (int m = 1; m <= 3; ++m) {
    VarRegistry reg;
    std::vector<Var> a, b;
    for (int i = 1; i <= m; ++i) a.push_back(reg.intern("a" + std::to_string(i)));
    for (int i = 1; i <= m; ++i) b.push_back(reg.intern("b" + std::to_string(i)));
    Var X = reg.intern("X");
    int order = 6;

    Series lhs({X}, {order});
    for (const Partition& nu : partitions_up_to(m, order)) {
      Poly prod = schur(nu, std::span<const Var>(a)) * schur(nu, std::span<const Var>(b));
      lhs.add_coeff({nu.weight()}, Rat::from_poly(prod));
    }

    Rat euler = Rat::one();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Poly factor = Poly::constant(1) - Poly::variable(a[static_cast<size_t>(i)]) *
                                              Poly::variable(b[static_cast<size_t>(j)]) *
                                              Poly::variable(X);
        euler = euler * Rat::fraction(Poly::constant(1), factor);
      }
    Series rhs = series_from_rational(euler, {X}, {order});
    CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("lagrange reconstruction") {
  VarRegistry reg;
  Var x1 = reg.intern("x1"), x2 = reg.intern("x2"), x3 = reg.intern("x3"), y = reg.intern("y");

  SUBCASE("constant polynomial through two points") {
    std::vector<std::pair<Rat, Rat>> pts{{Rat::constant(0), Rat::constant(1)},
                                         {Rat::constant(1), Rat::constant(1)}};
    CHECK(lagrange_reconstruct(pts, Rat::constant(5)).equals(Rat::constant(1)));
  }

  SUBCASE("exact-degree reconstruction of squares at symbolic nodes") {
    auto sq = [](Var v) { return Rat::from_poly(Poly::variable(v, 2)); };
    std::vector<std::pair<Rat, Rat>> pts{{Rat::variable(x1), sq(x1)},
                                         {Rat::variable(x2), sq(x2)},
                                         {Rat::variable(x3), sq(x3)}};
    CHECK(lagrange_reconstruct(pts, Rat::variable(y)).equals(sq(y)));
  }

  SUBCASE("duplicate nodes are rejected") {
    std::vector<std::pair<Rat, Rat>> pts{{Rat::constant(1), Rat::constant(1)},
                                         {Rat::constant(1), Rat::constant(2)}};
    CHECK_THROWS_AS(lagrange_reconstruct(pts, Rat::constant(0)), degenerate_error);
  }
}

TEST_CASE("series_from_rational rejects non-expandable input") {
  VarRegistry reg;
  Var X = reg.intern("X");
  Rat r = Rat::fraction(Poly::constant(1), Poly::variable(X));
  CHECK_THROWS_AS(series_from_rational(r, {X}, {2}), non_expandable_error);
}

TEST_CASE("partitions with trailing zeros are identified with padded forms") {
  VarRegistry reg;
  std::vector<Var> x{reg.intern("x1"), reg.intern("x2"), reg.intern("x3")};
  Partition nu({2, 1});
  CHECK(schur(nu, std::span<const Var>(x)) == schur(nu.padded(3), std::span<const Var>(x)));
  CHECK_THROWS_AS(Partition({1, 2}), domain_error);
  CHECK_THROWS_AS(Partition({2, -1}), domain_error);
}
