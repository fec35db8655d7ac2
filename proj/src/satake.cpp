#include "rslv/satake.hpp"

#include <algorithm>

#include "rslv/errors.hpp"

namespace rslv {

SatakeData SatakeData::symbolic(VarRegistry& reg, const std::string& prefix, int m,
                                bool unit_product) {
  if (m < 1) throw domain_error("SatakeData rank must be >= 1");
  SatakeData d;
  d.rank = m;
  d.unit_product = unit_product;
  for (int i = 1; i <= m; ++i) {
    Var v = reg.intern(prefix + std::to_string(i));
    d.params.push_back(Rat::variable(v));
  }
  if (unit_product && m >= 1) {
    // last parameter := 1 / prod of the others
    Rat prod = Rat::one();
    for (int i = 0; i + 1 < m; ++i) prod = prod * d.params[static_cast<size_t>(i)];
    d.params[static_cast<size_t>(m - 1)] = prod.inverse();
  }
  return d;
}

SatakeData SatakeData::numeric(const std::vector<BigRat>& values, bool unit_product) {
  SatakeData d;
  d.rank = static_cast<int>(values.size());
  if (d.rank < 1) throw domain_error("SatakeData rank must be >= 1");
  d.unit_product = unit_product;
  for (const BigRat& v : values) {
    if (v == 0) throw domain_error("Satake parameters must be nonzero");
    d.params.push_back(Rat::constant(v));
  }
  if (unit_product) {
    Rat prod = Rat::one();
    for (int i = 0; i + 1 < d.rank; ++i) prod = prod * d.params[static_cast<size_t>(i)];
    d.params[static_cast<size_t>(d.rank - 1)] = prod.inverse();
  }
  return d;
}

SatakeData SatakeData::drop(int j) const {
  if (j < 0 || j >= rank) throw domain_error("drop: index out of range");
  SatakeData d;
  d.rank = rank - 1;
  d.unit_product = false;
  for (int i = 0; i < rank; ++i)
    if (i != j) d.params.push_back(params[static_cast<size_t>(i)]);
  return d;
}

void SatakeData::require_regular() const {
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (params[static_cast<size_t>(i)].equals(params[static_cast<size_t>(j)]))
        throw degenerate_error("coincident Satake parameters");
}

Rat LFactorRoots::euler_product() const {
  Rat prod = Rat::one();
  for (const Rat& r : inverse_roots) {
    Rat factor = Rat::one() - r * Rat::variable(s_var);
    prod = prod * factor.inverse();
  }
  return prod;
}

LFactorRoots rs_lfactor(const SatakeData& pi1, const SatakeData& pi2, Var s_var) {
  LFactorRoots out;
  out.s_var = s_var;
  for (const Rat& a : pi1.params)
    for (const Rat& b : pi2.params) out.inverse_roots.push_back(a * b);
  return out;
}

Rat zeta_local(int k, Var V) {
  if (k <= 0) throw domain_error("zeta_local requires k >= 1");
  // (1 - V^{-2k})^{-1} = V^{2k} / (V^{2k} - 1)
  Poly vk = Poly::variable(V, 2 * k);
  return Rat::fraction(vk, vk - Poly::constant(1));
}

Rat hecke_eigenvalue_fundamental(const SatakeData& pi, int i) {
  if (i < 0 || i > pi.rank) throw domain_error("fundamental Hecke index out of range [0, m]");
  return elementary_symmetric_at(i, pi.params);
}

Rat modulus_char_sqrt(int m, const TorusVector& nu, Var V) {
  if (static_cast<int>(nu.size()) != m) throw domain_error("modulus_char_sqrt: length mismatch");
  long e = 0;
  for (int i = 1; i <= m; ++i) e += static_cast<long>(nu[static_cast<size_t>(i - 1)]) * (m + 1 - 2 * i);
  return Rat::variable(V, static_cast<int>(-e));
}

Rat shintani_value(const SatakeData& pi, const TorusVector& nu, Var V) {
  int m = pi.rank;
  if (static_cast<int>(nu.size()) != m) throw domain_error("shintani_value: length mismatch");
  if (!is_dominant(nu)) return Rat::zero();
  // central shift so all entries are nonnegative
  int c = nu[static_cast<size_t>(m - 1)] < 0 ? -nu[static_cast<size_t>(m - 1)] : 0;
  std::vector<int> shifted(nu);
  for (int& e : shifted) e += c;
  Rat chi = schur_at(Partition(shifted), pi.params);
  if (c > 0) {
    Rat prod = Rat::one();
    for (const Rat& p : pi.params) prod = prod * p;
    chi = chi * prod.pow(-c);
  }
  return modulus_char_sqrt(m, nu, V) * chi;
}

Rat shifted_shintani_value(const SatakeData& pi, int lambda_valuation, const TorusVector& nu,
                           Var V) {
  int m = pi.rank;
  if (static_cast<int>(nu.size()) != m) throw domain_error("shifted_shintani_value: length mismatch");
  TorusVector shifted(nu);
  for (int i = 0; i < m; ++i) shifted[static_cast<size_t>(i)] += lambda_valuation * (m - 1 - i);
  return shintani_value(pi, shifted, V);
}

Series zeta_series_gl_m_m1(const SatakeData& Pi, const SatakeData& pi_prime, int order, Var X,
                           Var V) {
  int m = Pi.rank;
  if (pi_prime.rank != m - 1) throw domain_error("ranks must be m and m-1");
  if (order < 0) throw domain_error("order must be >= 0");
  Series s({X}, {order});
  // q^{-s} = X*V since X stands for q^{-1/2-s}
  for (const Partition& nu : partitions_up_to(m - 1, order)) {
    TorusVector v(nu.parts);
    TorusVector v0(v);
    v0.push_back(0);
    Rat w_big = shintani_value(Pi, v0, V);
    Rat w_small = shintani_value(pi_prime, v, V);
    if (w_big.is_zero() || w_small.is_zero()) continue;
    // Iwasawa weight on the torus: |det|^s / delta_{m-1}
    int wt = nu.weight();
    Rat det_s = Rat::variable(V, wt);  // (q^{-s})^{|nu|} = (XV)^{|nu|}; X tracked by the slot
    Rat inv_delta = modulus_char_sqrt(m - 1, v, V).pow(-2);
    s.add_coeff({wt}, w_big * w_small * det_s * inv_delta);
  }
  return s;
}

Series zeta_series_gl_m_m(const SatakeData& pi, const SatakeData& pi_prime, int order, Var X,
                          Var V) {
  int m = pi.rank;
  if (pi_prime.rank != m) throw domain_error("ranks must be equal");
  if (order < 0) throw domain_error("order must be >= 0");
  Series s({X}, {order});
  // support cut nu_m >= 0 comes from the lattice characteristic function
  for (const Partition& nu : partitions_up_to(m, order)) {
    TorusVector v(nu.parts);
    Rat w1 = shintani_value(pi, v, V);
    Rat w2 = shintani_value(pi_prime, v, V);
    if (w1.is_zero() || w2.is_zero()) continue;
    // |det|^s = X^{|nu|}; the two delta^{1/2} factors cancel the Haar 1/delta
    Rat inv_delta = modulus_char_sqrt(m, v, V).pow(-2);
    s.add_coeff({nu.weight()}, w1 * w2 * inv_delta);
  }
  return s;
}

Series euler_product_series(const LFactorRoots& roots, int order) {
  return Series::from_rational(roots.euler_product(), {roots.s_var}, {order});
}

bool whittaker_recursion_check(const SatakeData& pi, const TorusVector& nu, Var V) {
  int m = pi.rank;
  if (static_cast<int>(nu.size()) != m - 1)
    throw domain_error("whittaker_recursion_check: nu must have length m-1");
  if (!is_dominant(nu) || nu[static_cast<size_t>(m - 2)] < 0)
    throw domain_error("whittaker_recursion_check: nu must be dominant with last entry >= 0");
  pi.require_regular();

  TorusVector padded(nu);
  padded.push_back(0);
  Rat lhs = shintani_value(pi, padded, V);

  Rat rhs = Rat::zero();
  for (int j = 0; j < m; ++j) {
    Rat coeff = pi.params[static_cast<size_t>(j)].inverse();
    for (int i = 0; i < m; ++i) {
      if (i == j) continue;
      coeff = coeff / (pi.params[static_cast<size_t>(i)] - pi.params[static_cast<size_t>(j)]);
    }
    rhs = rhs + coeff * shintani_value(pi.drop(j), nu, V);
  }
  rhs = rhs * Rat::variable(V, -vector_weight(nu));
  return lhs.equals(rhs);
}

}  // namespace rslv
