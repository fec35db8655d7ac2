#include "rslv/symfunc.hpp"

#include <algorithm>

#include "rslv/errors.hpp"

namespace rslv {

std::vector<Partition> partitions_up_to(int length, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<size_t>(length), 0);
  // lexicographic backtracking over weakly decreasing vectors
  auto rec = [&](auto&& self, int pos, int prev, int remaining) -> void {
    if (pos == length) {
      out.emplace_back(cur);
      return;
    }
    int cap = std::min(prev, remaining);
    for (int v = 0; v <= cap; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, v, remaining - v);
    }
  };
  rec(rec, 0, max_weight, max_weight);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts > b.parts;
  });
  return out;
}

Poly elementary_symmetric(int k, std::span<const Var> vars) {
  int n = static_cast<int>(vars.size());
  if (k < 0 || k > n) throw domain_error("elementary_symmetric: k out of range [0, #vars]");
  // e-row DP: after processing x_i, dp[j] = e_j(x_1..x_i)
  std::vector<Poly> dp(static_cast<size_t>(k) + 1);
  dp[0] = Poly::constant(1);
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(vars[static_cast<size_t>(i)]);
    for (int j = std::min(k, i + 1); j >= 1; --j)
      dp[static_cast<size_t>(j)] += dp[static_cast<size_t>(j - 1)] * xi;
  }
  return dp[static_cast<size_t>(k)];
}

Poly complete_homogeneous(int k, std::span<const Var> vars) {
  if (k < 0) throw domain_error("complete_homogeneous: k must be nonnegative");
  // dp over variables: h_j(x_1..x_i) = h_j(x_1..x_{i-1}) + x_i * h_{j-1}(x_1..x_i)
  std::vector<Poly> dp(static_cast<size_t>(k) + 1);
  dp[0] = Poly::constant(1);
  for (const Var& v : vars) {
    Poly xv = Poly::variable(v);
    for (int j = 1; j <= k; ++j)
      dp[static_cast<size_t>(j)] += dp[static_cast<size_t>(j - 1)] * xv;
  }
  return k == 0 ? dp[0] : dp[static_cast<size_t>(k)];
}

namespace {

// det of a square matrix of polynomials by Leibniz expansion (sizes <= 5 here).
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  Poly det;
  int sign_swaps;
  do {
    // parity of the permutation
    sign_swaps = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++sign_swaps;
    Poly prod = Poly::constant((sign_swaps % 2 == 0) ? 1 : -1);
    for (size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Rat rat_det(const std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  if (n == 0) return Rat::one();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  Rat det = Rat::zero();
  do {
    int sign_swaps = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++sign_swaps;
    Rat prod = Rat::constant(sign_swaps % 2 == 0 ? 1 : -1);
    for (size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

Poly schur(const Partition& nu, std::span<const Var> vars) {
  int m = static_cast<int>(vars.size());
  Partition padded = nu.padded(m);
  // numerator det(x_j^{m-i+nu_i}), denominator det(x_j^{m-i}) = Vandermonde
  std::vector<std::vector<Poly>> num(static_cast<size_t>(m)), den(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    num[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
    den[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
      int e = m - 1 - i;
      num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Poly::variable(vars[static_cast<size_t>(j)], e + padded.parts[static_cast<size_t>(i)]);
      den[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Poly::variable(vars[static_cast<size_t>(j)], e);
    }
  }
  Poly num_det = poly_det(num);
  Poly den_det = poly_det(den);
  auto q = num_det.divide_exactly(den_det);
  if (!q) throw consistency_error("bialternant division left a remainder");
  return *q;
}

Poly schur_jacobi_trudi(const Partition& nu, std::span<const Var> vars) {
  int m = static_cast<int>(vars.size());
  Partition padded = nu.padded(m);
  std::vector<std::vector<Poly>> h(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    h[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
      int k = padded.parts[static_cast<size_t>(i)] - (i + 1) + (j + 1);
      h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          k < 0 ? Poly::zero() : complete_homogeneous(k, vars);
    }
  }
  return poly_det(h);
}

Rat elementary_symmetric_at(int k, const std::vector<Rat>& values) {
  int n = static_cast<int>(values.size());
  if (k < 0 || k > n) throw domain_error("elementary_symmetric_at: k out of range");
  std::vector<Rat> dp(static_cast<size_t>(k) + 1, Rat::zero());
  dp[0] = Rat::one();
  for (int i = 0; i < n; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j)
      dp[static_cast<size_t>(j)] =
          dp[static_cast<size_t>(j)] + dp[static_cast<size_t>(j - 1)] * values[static_cast<size_t>(i)];
  return dp[static_cast<size_t>(k)];
}

Rat complete_homogeneous_at(int k, const std::vector<Rat>& values) {
  if (k < 0) throw domain_error("complete_homogeneous_at: k must be nonnegative");
  std::vector<Rat> dp(static_cast<size_t>(k) + 1, Rat::zero());
  dp[0] = Rat::one();
  for (const Rat& v : values)
    for (int j = 1; j <= k; ++j)
      dp[static_cast<size_t>(j)] = dp[static_cast<size_t>(j)] + dp[static_cast<size_t>(j - 1)] * v;
  return dp[static_cast<size_t>(k)];
}

Rat schur_at(const Partition& nu, const std::vector<Rat>& values) {
  int m = static_cast<int>(values.size());
  Partition padded = nu.padded(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (values[static_cast<size_t>(i)].equals(values[static_cast<size_t>(j)]))
        throw degenerate_error("schur_at: coincident arguments");
  std::vector<std::vector<Rat>> num(static_cast<size_t>(m)), den(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    num[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
    den[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
      int e = m - 1 - i;
      num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          values[static_cast<size_t>(j)].pow(e + padded.parts[static_cast<size_t>(i)]);
      den[static_cast<size_t>(i)][static_cast<size_t>(j)] = values[static_cast<size_t>(j)].pow(e);
    }
  }
  return rat_det(num) / rat_det(den);
}

Rat lagrange_reconstruct(const std::vector<std::pair<Rat, Rat>>& points, const Rat& eval_at) {
  size_t n = points.size();
  if (n == 0) throw domain_error("lagrange_reconstruct: no points");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first.equals(points[j].first))
        throw degenerate_error("lagrange_reconstruct: duplicate nodes");
  Rat acc = Rat::zero();
  for (size_t k = 0; k < n; ++k) {
    Rat term = points[k].second;
    for (size_t a = 0; a < n; ++a) {
      if (a == k) continue;
      term = term * (eval_at - points[a].first) / (points[k].first - points[a].first);
    }
    acc = acc + term;
  }
  return acc;
}

Series series_from_rational(const Rat& r, std::vector<Var> evars, std::vector<int> order) {
  return Series::from_rational(r, std::move(evars), std::move(order));
}

}  // namespace rslv
