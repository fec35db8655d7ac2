#include "rslv/cosets.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "rslv/errors.hpp"
#include "rslv/rng.hpp"

namespace rslv {

// ---------------------------------------------------------------------------
// modular helpers

bool is_unit(uint32_t a, uint32_t m) {
  a %= m;
  if (a == 0) return false;
  uint32_t x = a, y = m;
  while (y != 0) {
    uint32_t t = x % y;
    x = y;
    y = t;
  }
  return x == 1;
}

uint32_t mod_inverse(uint32_t a, uint32_t m) {
  a %= m;
  int64_t t = 0, new_t = 1;
  int64_t r = m, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw domain_error("not a unit");
  if (t < 0) t += m;
  return static_cast<uint32_t>(t);
}

int padic_valuation(uint32_t a, uint32_t p, int k) {
  if (a == 0) return k;
  int v = 0;
  while (a % p == 0 && v < k) {
    a /= p;
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Mat

Mat Mat::identity(int n, uint32_t mod) {
  Mat m = zero(n, mod);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % mod;
  return m;
}

Mat Mat::zero(int n, uint32_t mod) {
  Mat m;
  m.n = n;
  m.mod = mod;
  m.e.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  return m;
}

Mat Mat::mul(const Mat& o) const {
  Mat r = zero(n, mod);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      uint64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        r.at(i, j) = static_cast<uint32_t>((r.at(i, j) + aik * o.at(k, j)) % mod);
    }
  return r;
}

Mat Mat::scaled(uint32_t c) const {
  Mat r(*this);
  for (uint32_t& x : r.e) x = static_cast<uint32_t>((static_cast<uint64_t>(x) * c) % mod);
  return r;
}

uint32_t Mat::det() const {
  // Leibniz over permutations; matrices here are at most 4x4.
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  int64_t acc = 0;
  do {
    int swaps = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++swaps;
    uint64_t prod = 1;
    for (int i = 0; i < n; ++i) prod = (prod * at(i, perm[static_cast<size_t>(i)])) % mod;
    acc += (swaps % 2 == 0) ? static_cast<int64_t>(prod) : -static_cast<int64_t>(prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  int64_t r = acc % static_cast<int64_t>(mod);
  if (r < 0) r += mod;
  return static_cast<uint32_t>(r);
}

bool Mat::invertible() const { return is_unit(det(), mod); }

Mat Mat::adjugate() const {
  Mat r = zero(n, mod);
  if (n == 1) {
    r.at(0, 0) = 1 % mod;
    return r;
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // minor with row i, column j removed
      Mat minor = zero(n - 1, mod);
      int mi = 0;
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == i) continue;
        int mj = 0;
        for (int c2 = 0; c2 < n; ++c2) {
          if (c2 == j) continue;
          minor.at(mi, mj) = at(r2, c2);
          ++mj;
        }
        ++mi;
      }
      uint32_t m = minor.det();
      if ((i + j) % 2 == 1) m = (mod - m) % mod;
      r.at(j, i) = m;  // transpose of cofactors
    }
  return r;
}

Mat Mat::inverse() const {
  uint32_t d = det();
  uint32_t dinv = mod_inverse(d, mod);
  return adjugate().scaled(dinv);
}

int Mat::rank() const {
  Mat m(*this);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row)
      if (m.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.e[static_cast<size_t>(rank * n + j)],
                                          m.e[static_cast<size_t>(pivot * n + j)]);
    uint32_t inv = mod_inverse(m.at(rank, col), mod);
    for (int row = 0; row < n; ++row) {
      if (row == rank || m.at(row, col) == 0) continue;
      uint64_t f = (static_cast<uint64_t>(m.at(row, col)) * inv) % mod;
      for (int j = col; j < n; ++j) {
        uint64_t v = m.at(row, j) + static_cast<uint64_t>(mod) * mod -
                     (f * m.at(rank, j)) % mod;
        m.at(row, j) = static_cast<uint32_t>(v % mod);
      }
    }
    ++rank;
  }
  return rank;
}

Mat Mat::projective_canonical() const {
  for (uint32_t x : e) {
    if (x != 0) return scaled(mod_inverse(x, mod));
  }
  throw domain_error("projective canonical form of the zero matrix");
}

uint64_t Mat::key() const {
  uint64_t k = 0;
  for (auto it = e.rbegin(); it != e.rend(); ++it) k = k * mod + *it;
  return k;
}

Mat Mat::from_key(uint64_t key, int n, uint32_t mod) {
  Mat m = zero(n, mod);
  for (size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] = static_cast<uint32_t>(key % mod);
    key /= mod;
  }
  return m;
}

std::string Mat::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    out << (i == 0 ? "[" : " ");
    for (int j = 0; j < n; ++j) out << at(i, j) << (j + 1 < n ? " " : "");
    out << (i + 1 < n ? ";\n" : "]");
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// representatives and classification

std::string CosetClass::to_string() const {
  switch (tag) {
    case E: return "e";
    case NPLUS: return "n+";
    case NMINUS: return "n-";
    case XIPERP: return "xi_perp";
    case WPRIME: return "w'";
    case NPLUS_WPRIME: return "n+w'";
    case WPRIME_NPLUS: return "w'n+";
    case XI: return "xi(" + std::to_string(t) + ")";
  }
  return "?";
}

Mat coset_representative(const CosetClass& c, int n, uint32_t q) {
  int N = n + 1;
  Mat m = Mat::identity(N, q);
  switch (c.tag) {
    case CosetClass::E:
      return m;
    case CosetClass::NPLUS:
      m.at(n - 1, n) = 1;
      return m;
    case CosetClass::NMINUS:
      m.at(n, n - 1) = 1;
      return m;
    case CosetClass::XI:
      if (c.t == 0 || c.t == 1) throw domain_error("xi(t) requires t != 0, 1");
      m.at(n - 1, n) = c.t % q;
      m.at(n, n - 1) = 1;
      return m;
    case CosetClass::XIPERP:
      m.at(0, n) = 1;
      m.at(n, n - 1) = 1;
      return m;
    case CosetClass::WPRIME: {
      Mat w = Mat::zero(N, q);
      for (int i = 0; i < n - 1; ++i) w.at(i, i) = 1;
      w.at(n - 1, n) = 1;
      w.at(n, n - 1) = 1;
      return w;
    }
    case CosetClass::NPLUS_WPRIME: {
      Mat np = coset_representative({CosetClass::NPLUS, 0}, n, q);
      Mat w = coset_representative({CosetClass::WPRIME, 0}, n, q);
      return np.mul(w);
    }
    case CosetClass::WPRIME_NPLUS: {
      Mat np = coset_representative({CosetClass::NPLUS, 0}, n, q);
      Mat w = coset_representative({CosetClass::WPRIME, 0}, n, q);
      return w.mul(np);
    }
  }
  throw domain_error("unknown coset class");
}

CosetClass classify(const Mat& gamma, int n) {
  if (gamma.n != n + 1) throw domain_error("classify: size mismatch");
  if (n < 2) throw domain_error("classify requires n >= 2");
  uint32_t q = gamma.mod;
  if (!gamma.invertible()) throw domain_error("classify: singular matrix");

  Mat a = Mat::zero(n, q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = gamma.at(i, j);
  std::vector<uint32_t> b(static_cast<size_t>(n)), c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    b[static_cast<size_t>(i)] = gamma.at(i, n);
    c[static_cast<size_t>(i)] = gamma.at(n, i);
  }
  uint32_t d = gamma.at(n, n);

  int r = a.rank();
  if (r < n - 1) throw consistency_error("top-left block rank below n-1 on an invertible matrix");

  bool b_zero = std::all_of(b.begin(), b.end(), [](uint32_t x) { return x == 0; });
  bool c_zero = std::all_of(c.begin(), c.end(), [](uint32_t x) { return x == 0; });

  if (r == n) {
    if (d != 0) {
      // orbit invariant t = c a^{-1} b d^{-1}
      Mat ainv = a.inverse();
      uint64_t cab = 0;
      for (int i = 0; i < n; ++i) {
        uint64_t row = 0;
        for (int j = 0; j < n; ++j)
          row = (row + static_cast<uint64_t>(c[static_cast<size_t>(j)]) * ainv.at(j, i)) % q;
        cab = (cab + row * b[static_cast<size_t>(i)]) % q;
      }
      uint32_t t = static_cast<uint32_t>((cab * mod_inverse(d, q)) % q);
      // det gamma = det(a) d (1 - t)
      uint64_t lhs = gamma.det();
      uint64_t rhs = (static_cast<uint64_t>(a.det()) * d) % q;
      rhs = (rhs * ((q + 1 - t % q) % q)) % q;
      if (lhs != rhs) throw consistency_error("determinant relation det = det(a) d (1-t) failed");
      if (t == 1) throw consistency_error("t = 1 contradicts invertibility");

      if (b_zero && c_zero) return {CosetClass::E, 0};
      if (!b_zero && c_zero) return {CosetClass::NPLUS, 0};
      if (b_zero && !c_zero) return {CosetClass::NMINUS, 0};
      if (t == 0) return {CosetClass::XIPERP, 0};
      return {CosetClass::XI, t};
    }
    if (b_zero || c_zero)
      throw consistency_error("rank n with d = 0 forces nonzero corner blocks");
    return {CosetClass::NPLUS_WPRIME, 0};
  }
  // r == n - 1
  return d == 0 ? CosetClass{CosetClass::WPRIME, 0} : CosetClass{CosetClass::WPRIME_NPLUS, 0};
}

// ---------------------------------------------------------------------------
// enumeration and orbits

unsigned long long pgl_order(int n, uint32_t q) {
  int N = n + 1;
  unsigned long long order = 1;
  unsigned long long qN = 1;
  for (int i = 0; i < N; ++i) qN *= q;
  unsigned long long qi = 1;
  for (int i = 0; i < N; ++i) {
    order *= (qN - qi);
    qi *= q;
  }
  return order / (q - 1);
}

namespace {

void require_prime(uint32_t q) {
  if (q < 2) throw domain_error("q must be a prime");
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) throw domain_error("q must be a prime (prime powers are out of scope)");
}

uint32_t primitive_root(uint32_t q) {
  if (q == 2) return 1;
  for (uint32_t g = 2; g < q; ++g) {
    uint32_t x = g;
    uint32_t ord = 1;
    while (x != 1) {
      x = static_cast<uint32_t>((static_cast<uint64_t>(x) * g) % q);
      ++ord;
    }
    if (ord == q - 1) return g;
  }
  throw consistency_error("no primitive root found");
}

// Generators of GL_n(F_q) with inverses: transvections and one scaling.
std::vector<Mat> gl_generators(int n, uint32_t q) {
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat t = Mat::identity(n, q);
      t.at(i, j) = 1;
      gens.push_back(t);
      Mat tinv = Mat::identity(n, q);
      tinv.at(i, j) = q - 1;
      gens.push_back(tinv);
    }
  if (q > 2) {
    uint32_t g = primitive_root(q);
    Mat s = Mat::identity(n, q);
    s.at(0, 0) = g;
    gens.push_back(s);
    Mat sinv = Mat::identity(n, q);
    sinv.at(0, 0) = mod_inverse(g, q);
    gens.push_back(sinv);
  }
  return gens;
}

Mat embed_top_left(const Mat& g, int N) {
  Mat m = Mat::identity(N, g.mod);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m.at(i, j) = g.at(i, j);
  return m;
}

// Generators of the mirabolic P_N (bottom row (0, ..., 0, 1)).
std::vector<Mat> mirabolic_generators(int N, uint32_t q) {
  std::vector<Mat> gens;
  for (Mat& g : gl_generators(N - 1, q)) gens.push_back(embed_top_left(g, N));
  for (int i = 0; i < N - 1; ++i) {
    Mat t = Mat::identity(N, q);
    t.at(i, N - 1) = 1;
    gens.push_back(t);
    Mat tinv = Mat::identity(N, q);
    tinv.at(i, N - 1) = q - 1;
    gens.push_back(tinv);
  }
  return gens;
}

std::vector<Mat> embedded_gl_generators(int n, int N, uint32_t q) {
  std::vector<Mat> gens;
  for (Mat& g : gl_generators(n, q)) gens.push_back(embed_top_left(g, N));
  return gens;
}

std::unordered_set<uint64_t> orbit_closure(const Mat& start, const std::vector<Mat>& left,
                                           const std::vector<Mat>& right) {
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> frontier;
  uint64_t k0 = start.projective_canonical().key();
  seen.insert(k0);
  frontier.push_back(k0);
  while (!frontier.empty()) {
    uint64_t k = frontier.back();
    frontier.pop_back();
    Mat g = Mat::from_key(k, start.n, start.mod);
    auto push = [&](const Mat& m) {
      uint64_t key = m.projective_canonical().key();
      if (seen.insert(key).second) frontier.push_back(key);
    };
    for (const Mat& L : left) push(L.mul(g));
    for (const Mat& R : right) push(g.mul(R));
  }
  return seen;
}

// All invertible n x n matrices over F_q.
std::vector<Mat> all_invertible(int n, uint32_t q) {
  std::vector<Mat> out;
  size_t cells = static_cast<size_t>(n) * static_cast<size_t>(n);
  Mat m = Mat::zero(n, q);
  for (;;) {
    if (m.det() != 0) out.push_back(m);
    size_t i = 0;
    while (i < cells) {
      if (++m.e[i] < q) break;
      m.e[i] = 0;
      ++i;
    }
    if (i == cells) break;
  }
  return out;
}

// Canonical projective representatives of PGL_N(F_q).
std::vector<uint64_t> pgl_canonical_keys(int N, uint32_t q) {
  std::vector<uint64_t> keys;
  size_t cells = static_cast<size_t>(N) * static_cast<size_t>(N);
  Mat m = Mat::zero(N, q);
  for (;;) {
    // canonical means: first nonzero entry (in storage order) equals 1
    uint32_t first = 0;
    for (size_t i = 0; i < cells; ++i)
      if (m.e[i] != 0) {
        first = m.e[i];
        break;
      }
    if (first == 1 && m.det() != 0) keys.push_back(m.key());
    size_t i = 0;
    while (i < cells) {
      if (++m.e[i] < q) break;
      m.e[i] = 0;
      ++i;
    }
    if (i == cells) break;
  }
  return keys;
}

std::vector<CosetClass> all_classes(int n, uint32_t q) {
  std::vector<CosetClass> reps{{CosetClass::E, 0},      {CosetClass::NPLUS, 0},
                               {CosetClass::NMINUS, 0}, {CosetClass::XIPERP, 0},
                               {CosetClass::WPRIME, 0}, {CosetClass::NPLUS_WPRIME, 0},
                               {CosetClass::WPRIME_NPLUS, 0}};
  for (uint32_t t = 2; t < q; ++t) reps.push_back({CosetClass::XI, t});
  return reps;
}

Mat random_invertible(Rng& rng, int n, uint32_t q) {
  for (;;) {
    Mat m = Mat::zero(n, q);
    for (uint32_t& x : m.e) x = static_cast<uint32_t>(rng.below(q));
    if (m.det() != 0) return m;
  }
}

}  // namespace

OrbitReport exhaustive_partition_audit(int n, uint32_t q, unsigned long long budget) {
  require_prime(q);
  if (n < 2) throw domain_error("audit requires n >= 2");
  OrbitReport rep;
  rep.n = n;
  rep.q = q;
  rep.group_order = pgl_order(n, q);
  if (rep.group_order > budget)
    throw budget_error("PGL order exceeds enumeration budget", rep.group_order);

  int N = n + 1;
  std::vector<uint64_t> elements = pgl_canonical_keys(N, q);
  bool order_matches = elements.size() == rep.group_order;

  // direct classification counts
  std::map<std::string, unsigned long long> class_counts;
  bool no_degenerate_t = true;
  for (uint64_t k : elements) {
    CosetClass c = classify(Mat::from_key(k, N, q), n);
    if (c.tag == CosetClass::XI && (c.t == 0 || c.t == 1)) no_degenerate_t = false;
    ++class_counts[c.to_string()];
  }

  // independent orbit closure from each representative
  std::vector<Mat> gens = embedded_gl_generators(n, N, q);
  std::unordered_set<uint64_t> visited;
  bool disjoint = true, constant_on_orbits = true, counts_match = true;
  unsigned long long total = 0;
  for (const CosetClass& c : all_classes(n, q)) {
    Mat rep_mat = coset_representative(c, n, q);
    auto orbit = orbit_closure(rep_mat, gens, gens);
    rep.orbit_sizes[c.to_string()] = orbit.size();
    total += orbit.size();
    for (uint64_t k : orbit) {
      if (!visited.insert(k).second) disjoint = false;
      if (!(classify(Mat::from_key(k, N, q), n) == c)) constant_on_orbits = false;
    }
    auto it = class_counts.find(c.to_string());
    if (it == class_counts.end() || it->second != orbit.size()) counts_match = false;
  }

  // random bilateral invariance probes
  bool invariance = true;
  {
    Rng rng(0x5eedULL ^ (static_cast<uint64_t>(n) << 32) ^ q);
    std::vector<Mat> gl = all_invertible(n, q);
    int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      Mat gamma = random_invertible(rng, N, q);
      Mat x = gl[rng.below(gl.size())], y = gl[rng.below(gl.size())];
      Mat moved = embed_top_left(x.inverse(), N).mul(gamma).mul(embed_top_left(y, N));
      if (!(classify(moved, n) == classify(gamma, n))) invariance = false;
    }
  }

  size_t expected_classes = 7 + (q > 2 ? q - 2 : 0);
  rep.checks = {
      {"enumeration_matches_group_order", order_matches},
      {"orbits_disjoint", disjoint},
      {"orbits_exhaust_group", total == rep.group_order},
      {"classification_constant_on_orbits", constant_on_orbits},
      {"classification_counts_match_orbits", counts_match},
      {"class_count_is_7_plus_q_minus_2", rep.orbit_sizes.size() == expected_classes},
      {"no_xi_0_or_xi_1", no_degenerate_t},
      {"bilateral_invariance_10k_samples", invariance},
  };
  return rep;
}

OrbitReport stabilizer_audit(int n, uint32_t q, unsigned long long budget) {
  require_prime(q);
  if (n < 2) throw domain_error("audit requires n >= 2");
  OrbitReport rep;
  rep.n = n;
  rep.q = q;
  rep.group_order = pgl_order(n, q);
  if (rep.group_order > budget)
    throw budget_error("PGL order exceeds enumeration budget", rep.group_order);

  int N = n + 1;
  std::vector<Mat> gl = all_invertible(n, q);
  unsigned long long gl_order = gl.size();
  std::vector<Mat> left_emb, right_emb;
  left_emb.reserve(gl.size());
  right_emb.reserve(gl.size());
  for (const Mat& x : gl) {
    left_emb.push_back(embed_top_left(x.inverse(), N));
    right_emb.push_back(embed_top_left(x, N));
  }

  // subgroup orders for the identifications
  unsigned long long p_n = 0, r_group = 0;
  for (const Mat& x : gl) {
    bool mirabolic = x.at(n - 1, n - 1) == 1;
    for (int j = 0; j + 1 < n && mirabolic; ++j)
      if (x.at(n - 1, j) != 0) mirabolic = false;
    if (mirabolic) ++p_n;
    bool in_r = mirabolic && x.at(0, 0) == 1;
    for (int i = 1; i < n && in_r; ++i)
      if (x.at(i, 0) != 0) in_r = false;
    if (in_r) ++r_group;
  }
  unsigned long long gl_minus1 = n >= 2 ? all_invertible(n - 1, q).size() : 1;

  std::vector<Mat> gens = embedded_gl_generators(n, N, q);
  bool orbit_stab_ok = true, identifications_ok = true, central_factor_one = true;
  for (const CosetClass& c : all_classes(n, q)) {
    Mat xi = coset_representative(c, n, q);
    uint64_t xi_key = xi.projective_canonical().key();
    unsigned long long stab = 0;
    for (const Mat& L : left_emb) {
      Mat lx = L.mul(xi);
      for (const Mat& R : right_emb)
        if (lx.mul(R).projective_canonical().key() == xi_key) ++stab;
    }
    rep.stabilizer_orders[c.to_string()] = stab;
    unsigned long long orbit = orbit_closure(xi, gens, gens).size();
    rep.orbit_sizes[c.to_string()] = orbit;
    if (orbit * stab != gl_order * gl_order) orbit_stab_ok = false;

    unsigned long long expected = 0;
    switch (c.tag) {
      case CosetClass::E: expected = gl_order; break;
      case CosetClass::NPLUS:
      case CosetClass::NMINUS: expected = p_n; break;
      case CosetClass::XI: expected = gl_minus1; break;
      case CosetClass::XIPERP: expected = r_group; break;
      default: expected = 0; break;  // w'-family: measured only
    }
    if (expected != 0) {
      if (stab % expected != 0) identifications_ok = false;
      else if (stab / expected != 1) central_factor_one = false;
    }
  }

  rep.checks = {
      {"orbit_times_stabilizer_is_group_squared", orbit_stab_ok},
      {"stabilizers_match_named_subgroups", identifications_ok},
      {"central_identification_factor_is_one", central_factor_one},
  };
  return rep;
}

namespace {

bool mats_equal(const Mat& a, const Mat& b) { return a == b; }

// The proof's explicit reduction identities, checked entrywise over F_q.
bool reduction_identities_hold(int n, uint32_t q) {
  int N = n + 1;
  Mat nminus = coset_representative({CosetClass::NMINUS, 0}, n, q);
  Mat nplus = coset_representative({CosetClass::NPLUS, 0}, n, q);
  Mat wprime = coset_representative({CosetClass::WPRIME, 0}, n, q);

  bool ok = true;
  // n+ lies in the mirabolic subgroup
  for (int j = 0; j < n; ++j) ok = ok && nplus.at(n, j) == 0;
  ok = ok && nplus.at(n, n) == 1;

  // xi(t) = (I - t e_n^T e_n, t e_n^T; 0, 1) n-   and
  // n- ((1-t)^{-1} I, (1-t)^{-1} t e_n^T; 0, 1) = (1-t)^{-1} xi(t)
  for (uint32_t t = 2; t < q; ++t) {
    Mat xi = coset_representative({CosetClass::XI, t}, n, q);
    Mat left = Mat::identity(N, q);
    left.at(n - 1, n - 1) = (q + 1 - t) % q;
    left.at(n - 1, n) = t;
    ok = ok && mats_equal(left.mul(nminus), xi);

    uint32_t s = mod_inverse((q + 1 - t) % q, q);
    Mat right = Mat::zero(N, q);
    for (int i = 0; i < n; ++i) right.at(i, i) = s;
    right.at(n - 1, n) = static_cast<uint32_t>((static_cast<uint64_t>(s) * t) % q);
    right.at(n, n) = 1;
    ok = ok && mats_equal(nminus.mul(right), xi.scaled(s));
  }

  // xi_perp = (I - e_1^T e_n, e_1^T; 0, 1) n- = n- (I, e_1^T; 0, 1)
  {
    Mat xiperp = coset_representative({CosetClass::XIPERP, 0}, n, q);
    Mat left = Mat::identity(N, q);
    left.at(0, n - 1) = (q - 1) % q;
    left.at(0, n) = 1;
    ok = ok && mats_equal(left.mul(nminus), xiperp);
    Mat right = Mat::identity(N, q);
    right.at(0, n) = 1;
    ok = ok && mats_equal(nminus.mul(right), xiperp);
  }

  // w'n+ = (diag(1,...,1,-1), e_n^T; 0, 1) n-
  {
    Mat lhs = wprime.mul(nplus);
    Mat left = Mat::identity(N, q);
    left.at(n - 1, n - 1) = q - 1;
    left.at(n - 1, n) = 1;
    ok = ok && mats_equal(left.mul(nminus), lhs);
  }

  // n+w' = - n- (-I, -e_n^T; 0, 1)
  {
    Mat lhs = nplus.mul(wprime);
    Mat right = Mat::zero(N, q);
    for (int i = 0; i < n; ++i) right.at(i, i) = q - 1;
    right.at(n - 1, n) = q - 1;
    right.at(n, n) = 1;
    ok = ok && mats_equal(nminus.mul(right).scaled(q - 1), lhs);
  }
  return ok;
}

}  // namespace

OrbitReport mirabolic_partition_audit(int n, uint32_t q, MirabolicVariant variant,
                                      unsigned long long budget) {
  require_prime(q);
  if (n < 2) throw domain_error("audit requires n >= 2");
  OrbitReport rep;
  rep.n = n;
  rep.q = q;
  rep.group_order = pgl_order(n, q);
  if (rep.group_order > budget)
    throw budget_error("PGL order exceeds enumeration budget", rep.group_order);

  int N = n + 1;
  std::vector<Mat> p_gens = mirabolic_generators(N, q);
  std::vector<Mat> g_gens = embedded_gl_generators(n, N, q);
  const std::vector<Mat>& left = (variant == MirabolicVariant::GxP) ? g_gens : p_gens;
  const std::vector<Mat>& right = (variant == MirabolicVariant::PxP) ? p_gens
                                  : (variant == MirabolicVariant::PxG) ? g_gens
                                                                       : p_gens;

  std::vector<CosetClass> reps{{CosetClass::E, 0}};
  if (variant != MirabolicVariant::PxP) reps.push_back({CosetClass::NMINUS, 0});
  reps.push_back({CosetClass::WPRIME, 0});

  std::unordered_set<uint64_t> visited;
  bool disjoint = true;
  unsigned long long total = 0;
  for (const CosetClass& c : reps) {
    auto orbit = orbit_closure(coset_representative(c, n, q), left, right);
    rep.orbit_sizes[c.to_string()] = orbit.size();
    total += orbit.size();
    for (uint64_t k : orbit)
      if (!visited.insert(k).second) disjoint = false;
  }

  size_t expected = variant == MirabolicVariant::PxP ? 2 : 3;
  rep.checks = {
      {"orbits_disjoint", disjoint},
      {"orbits_exhaust_group", total == rep.group_order},
      {"class_count", rep.orbit_sizes.size() == expected},
      {"reduction_identities", reduction_identities_hold(n, q)},
  };
  return rep;
}

ValuationReport xi_t_valuation_check(int n, uint32_t p, int e, int samples, uint64_t seed) {
  if (e < 1) throw domain_error("e must be >= 1");
  require_prime(p);
  ValuationReport rep;
  rep.samples_requested = samples;
  int k = e + 3;  // working ring Z/p^{e+3}
  uint32_t m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  uint32_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;

  Rng rng(seed);
  bool all_ok = true;
  for (int s = 0; s < samples; ++s) {
    Mat a = Mat::zero(n, m);
    uint32_t d = 0;
    for (;;) {
      for (uint32_t& x : a.e) x = static_cast<uint32_t>(rng.below(m));
      d = static_cast<uint32_t>(rng.below(m));
      if (!is_unit(a.det(), m) || !is_unit(d, m)) {
        ++rep.skipped;
        continue;
      }
      break;
    }
    std::vector<uint32_t> b(static_cast<size_t>(n)), c(static_cast<size_t>(n));
    for (auto& x : b) x = static_cast<uint32_t>(rng.below(m));
    for (auto& x : c) x = static_cast<uint32_t>((pe * rng.below(m / pe)) % m);

    // t = c a^{-1} b d^{-1}
    Mat ainv = a.inverse();
    auto bilinear = [&](const Mat& mid) {
      uint64_t acc = 0;
      for (int i = 0; i < n; ++i) {
        uint64_t row = 0;
        for (int j = 0; j < n; ++j)
          row = (row + static_cast<uint64_t>(c[static_cast<size_t>(j)]) * mid.at(j, i)) % m;
        acc = (acc + row * b[static_cast<size_t>(i)]) % m;
      }
      return static_cast<uint32_t>(acc);
    };
    uint32_t t = static_cast<uint32_t>((static_cast<uint64_t>(bilinear(ainv)) *
                                        mod_inverse(d, m)) % m);

    bool ok = padic_valuation(t, p, k) >= e;
    ok = ok && padic_valuation((m + 1 - t) % m, p, k) == 0;
    // (det a) d t = c adj(a) b, exactly in the ring
    uint64_t lhs = (static_cast<uint64_t>(a.det()) * d) % m;
    lhs = (lhs * t) % m;
    ok = ok && lhs == bilinear(a.adjugate());
    // det gamma = det(a) d (1 - t)
    Mat gamma = Mat::zero(n + 1, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gamma.at(i, j) = a.at(i, j);
    for (int i = 0; i < n; ++i) {
      gamma.at(i, n) = b[static_cast<size_t>(i)];
      gamma.at(n, i) = c[static_cast<size_t>(i)];
    }
    gamma.at(n, n) = d;
    uint64_t det_rhs = (static_cast<uint64_t>(a.det()) * d) % m;
    det_rhs = (det_rhs * ((m + 1 - t) % m)) % m;
    ok = ok && gamma.det() == det_rhs;

    if (ok)
      ++rep.samples_passed;
    else
      all_ok = false;
  }
  rep.all_ok = all_ok && rep.samples_passed == samples;
  return rep;
}

IndexReport enumerate_congruence_index(int n, uint32_t p, int e, unsigned long long budget) {
  require_prime(p);
  if (e < 1) throw domain_error("e must be >= 1");
  int N = n + 1;
  uint32_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  size_t cells = static_cast<size_t>(N) * static_cast<size_t>(N);
  double iterations = 1;
  for (size_t i = 0; i < cells; ++i) iterations *= m;
  if (iterations > 64.0 * static_cast<double>(budget))
    throw budget_error("residue-ring enumeration exceeds budget",
                       static_cast<unsigned long long>(iterations));

  IndexReport rep;
  Mat mat = Mat::zero(N, m);
  for (;;) {
    if (is_unit(mat.det(), m)) {
      ++rep.full_order;
      bool in_k0 = is_unit(mat.at(N - 1, N - 1), m);
      for (int j = 0; j + 1 < N && in_k0; ++j)
        if (mat.at(N - 1, j) != 0) in_k0 = false;
      if (in_k0) ++rep.subgroup_order;
    }
    size_t i = 0;
    while (i < cells) {
      if (++mat.e[i] < m) break;
      mat.e[i] = 0;
      ++i;
    }
    if (i == cells) break;
  }
  if (rep.subgroup_order == 0 || rep.full_order % rep.subgroup_order != 0)
    throw consistency_error("congruence subgroup order does not divide the group order");
  rep.index = rep.full_order / rep.subgroup_order;
  return rep;
}

// ---------------------------------------------------------------------------
// Bruhat refactorization over the rational-function field

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rm_identity(int N) {
  RatMat m(static_cast<size_t>(N), std::vector<Rat>(static_cast<size_t>(N), Rat::zero()));
  for (int i = 0; i < N; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat::one();
  return m;
}

RatMat rm_mul(const RatMat& a, const RatMat& b) {
  size_t N = a.size();
  RatMat r(N, std::vector<Rat>(N, Rat::zero()));
  for (size_t i = 0; i < N; ++i)
    for (size_t k = 0; k < N; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < N; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
      }
    }
  return r;
}

RatMat rm_scale(const RatMat& a, const Rat& c) {
  RatMat r(a);
  for (auto& row : r)
    for (auto& x : row) x = x * c;
  return r;
}

bool rm_equal(const RatMat& a, const RatMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!a[i][j].equals(b[i][j])) return false;
  return true;
}

// (I, b; 0, 1), (a, 0; 0, 1), (I, 0; c, 1) block matrices of size n+1
RatMat rm_upper(const std::vector<Rat>& b) {
  int n = static_cast<int>(b.size());
  RatMat m = rm_identity(n + 1);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
  return m;
}

RatMat rm_block(const RatMat& a) {
  int n = static_cast<int>(a.size());
  RatMat m = rm_identity(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

RatMat rm_lower(const std::vector<Rat>& c) {
  int n = static_cast<int>(c.size());
  RatMat m = rm_identity(n + 1);
  for (int j = 0; j < n; ++j) m[static_cast<size_t>(n)][static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
  return m;
}

}  // namespace

BruhatReport bruhat_product_identity_check(int n) {
  if (n < 1) throw domain_error("bruhat check requires n >= 1");
  VarRegistry reg;
  auto block_vars = [&](const std::string& name) {
    RatMat m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat::zero()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat::variable(
            reg.intern(name + std::to_string(i + 1) + std::to_string(j + 1)));
    return m;
  };
  auto vec_vars = [&](const std::string& name) {
    std::vector<Rat> v;
    for (int i = 0; i < n; ++i) v.push_back(Rat::variable(reg.intern(name + std::to_string(i + 1))));
    return v;
  };

  RatMat a = block_vars("a"), ap = block_vars("A");
  std::vector<Rat> b = vec_vars("b"), bp = vec_vars("B");
  std::vector<Rat> c = vec_vars("c"), cp = vec_vars("C");

  RatMat g = rm_mul(rm_mul(rm_upper(b), rm_block(a)), rm_lower(c));
  RatMat kk = rm_mul(rm_mul(rm_upper(bp), rm_block(ap)), rm_lower(cp));
  RatMat gk = rm_mul(g, kk);

  // d = 1 + c b'
  Rat d = Rat::one();
  for (int i = 0; i < n; ++i) d = d + c[static_cast<size_t>(i)] * bp[static_cast<size_t>(i)];
  Rat dinv = d.inverse();

  // b + d^{-1} a b'
  std::vector<Rat> b2(static_cast<size_t>(n), Rat::zero());
  for (int i = 0; i < n; ++i) {
    Rat acc = Rat::zero();
    for (int j = 0; j < n; ++j)
      acc = acc + a[static_cast<size_t>(i)][static_cast<size_t>(j)] * bp[static_cast<size_t>(j)];
    b2[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] + dinv * acc;
  }
  // d^{-2} a (d I - b' c) a'
  RatMat mid(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat::zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mid[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (i == j ? d : Rat::zero()) - bp[static_cast<size_t>(i)] * c[static_cast<size_t>(j)];
    }
  RatMat inner = rm_scale(rm_mul(rm_mul(a, mid), ap), dinv * dinv);
  // c' + d^{-1} c a'
  std::vector<Rat> c2(static_cast<size_t>(n), Rat::zero());
  for (int j = 0; j < n; ++j) {
    Rat acc = Rat::zero();
    for (int i = 0; i < n; ++i)
      acc = acc + c[static_cast<size_t>(i)] * ap[static_cast<size_t>(i)][static_cast<size_t>(j)];
    c2[static_cast<size_t>(j)] = cp[static_cast<size_t>(j)] + dinv * acc;
  }

  RatMat rhs = rm_mul(rm_mul(rm_upper(b2), rm_block(inner)), rm_lower(c2));

  BruhatReport rep;
  rep.identity_ok = rm_equal(gk, rm_scale(rhs, d));

  // specialization b' = c' = 0: gk reduces to g (a', 0; 0, 1) = U(b) D(a a') L(c a')
  {
    std::vector<Rat> ca(static_cast<size_t>(n), Rat::zero());
    for (int j = 0; j < n; ++j) {
      Rat acc = Rat::zero();
      for (int i = 0; i < n; ++i)
        acc = acc + c[static_cast<size_t>(i)] * ap[static_cast<size_t>(i)][static_cast<size_t>(j)];
      ca[static_cast<size_t>(j)] = acc;
    }
    RatMat lhs0 = rm_mul(g, rm_block(ap));
    RatMat rhs0 = rm_mul(rm_mul(rm_upper(b), rm_block(rm_mul(a, ap))), rm_lower(ca));
    rep.specialization_ok = rm_equal(lhs0, rhs0);
  }
  return rep;
}

}  // namespace rslv
