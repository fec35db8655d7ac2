#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rslv/rat.hpp"

namespace rslv {

/// Square matrix over Z/m (m prime for the field case, p^e for ring checks).
struct Mat {
  int n = 0;
  uint32_t mod = 0;
  std::vector<uint32_t> e;  // row-major

  static Mat identity(int n, uint32_t mod);
  static Mat zero(int n, uint32_t mod);

  uint32_t& at(int i, int j) { return e[static_cast<size_t>(i * n + j)]; }
  uint32_t at(int i, int j) const { return e[static_cast<size_t>(i * n + j)]; }

  Mat mul(const Mat& o) const;
  Mat scaled(uint32_t c) const;
  bool operator==(const Mat& o) const { return n == o.n && mod == o.mod && e == o.e; }

  /// Determinant mod m.
  uint32_t det() const;
  /// True if det is a unit of Z/m.
  bool invertible() const;
  /// Inverse via adjugate; requires unit determinant.
  Mat inverse() const;
  /// Adjugate (transpose of cofactors), valid over any Z/m.
  Mat adjugate() const;
  /// Rank over the prime field (requires prime modulus).
  int rank() const;

  /// Scales so the first nonzero entry in reading order is 1 (prime modulus).
  Mat projective_canonical() const;
  /// Packs entries base-mod; canonical forms give unique keys.
  uint64_t key() const;
  static Mat from_key(uint64_t key, int n, uint32_t mod);

  std::string to_string() const;
};

/// Modular helpers (m need not be prime; inverses require units).
uint32_t mod_inverse(uint32_t a, uint32_t m);
bool is_unit(uint32_t a, uint32_t m);
/// p-adic valuation of a residue in Z/p^k, capped at k for zero.
int padic_valuation(uint32_t a, uint32_t p, int k);

/// Tag of a double-coset class of PGL(n+1) under GL(n) x GL(n).
struct CosetClass {
  enum Tag { E, NPLUS, NMINUS, XIPERP, WPRIME, NPLUS_WPRIME, WPRIME_NPLUS, XI } tag = E;
  uint32_t t = 0;  // only for XI; t != 0, 1

  std::string to_string() const;
  bool operator==(const CosetClass& o) const { return tag == o.tag && t == o.t; }
  bool operator<(const CosetClass& o) const { return tag != o.tag ? tag < o.tag : t < o.t; }
};

/// The explicit coset representatives as (n+1)x(n+1) matrices over F_q.
Mat coset_representative(const CosetClass& c, int n, uint32_t q);

/// Constructive classification of an invertible (n+1)x(n+1) matrix over F_q.
/// Branches on rank of the top-left n x n block, the vanishing of the corner
/// blocks, and the orbit invariant t = c a^{-1} b d^{-1}; the determinant
/// relation det = det(a) d (1 - t) is asserted along the way.
CosetClass classify(const Mat& gamma, int n);

struct OrbitReport {
  int n = 0;
  uint32_t q = 0;
  unsigned long long group_order = 0;  // |PGL_{n+1}(F_q)|
  std::map<std::string, unsigned long long> orbit_sizes;
  std::map<std::string, unsigned long long> stabilizer_orders;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_ok() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

/// Order of PGL_{n+1}(F_q); used for budget checks before any enumeration.
unsigned long long pgl_order(int n, uint32_t q);

/// Enumerates PGL_{n+1}(F_q), classifies every element, and independently
/// recomputes the orbits by generator closure. Verifies constancy of the
/// classification on orbits, disjointness, exhaustion, and the class count
/// 7 + max(0, q-2). Throws budget_error if the group exceeds `budget`.
OrbitReport exhaustive_partition_audit(int n, uint32_t q, unsigned long long budget = 1000000);

/// Counts stabilizer pairs (x, y) of each representative under the projective
/// two-sided action, reconciles orbit * stabilizer = |G_n|^2, and compares
/// against the subgroup identifications (G_n, P_n, P_n, G_{n-1}, R).
OrbitReport stabilizer_audit(int n, uint32_t q, unsigned long long budget = 1000000);

enum class MirabolicVariant { PxG, GxP, PxP };

/// Decomposition under mirabolic actions: P x G and G x P split into
/// {e, n-, w'}; P x P into {e, w'}. Also verifies the explicit reduction
/// identities that absorb xi(t), xi_perp, w'n+, n+w' into those classes.
OrbitReport mirabolic_partition_audit(int n, uint32_t q, MirabolicVariant variant,
                                      unsigned long long budget = 1000000);

struct ValuationReport {
  int samples_requested = 0;
  int samples_passed = 0;
  int skipped = 0;  // draws rejected for non-invertible blocks
  bool all_ok = false;
};

/// Ring-level shadow of the support bound for xi(t): samples congruence-
/// subgroup elements over Z/p^{e+3} (c-block divisible by p^e) and checks
/// valuation(t) >= e, valuation(1-t) = 0, and the exact adjugate identity
/// (det a) d t = c adj(a) b on every sample.
ValuationReport xi_t_valuation_check(int n, uint32_t p, int e, int samples, uint64_t seed);

struct IndexReport {
  unsigned long long full_order = 0;   // |GL_{n+1}(Z/p^e)|
  unsigned long long subgroup_order = 0;
  unsigned long long index = 0;
};

/// Index of the Hecke congruence subgroup mod p^e by direct enumeration.
IndexReport enumerate_congruence_index(int n, uint32_t p, int e,
                                       unsigned long long budget = 1000000);

struct BruhatReport {
  bool identity_ok = false;        // g k = d * (upper)(block)(lower)
  bool specialization_ok = false;  // b' = c' = 0 collapse
};

/// Verifies the Bruhat refactorization of a product g k with d = 1 + c b',
/// as an identity of matrices over the rational-function field in the entries.
BruhatReport bruhat_product_identity_check(int n);

}  // namespace rslv
