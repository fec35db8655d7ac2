#include "rslv/suites.hpp"

#include <sstream>

#include "rslv/cosets.hpp"
#include "rslv/degenerate.hpp"
#include "rslv/errors.hpp"
#include "rslv/rng.hpp"
#include "rslv/spectral.hpp"

namespace rslv {

namespace {

std::string fraction_detail(int pass, int total) {
  std::ostringstream out;
  out << pass << "/" << total;
  return out.str();
}

// h_{m-k} at inverted parameters: the independent oracle for the hsum table.
Rat hsum_oracle(const SatakeData& b, int k, int m) {
  if (m < k) return Rat::zero();
  std::vector<Rat> inverted;
  for (const Rat& p : b.params) inverted.push_back(p.inverse());
  return complete_homogeneous_at(m - k, inverted);
}

}  // namespace

VerificationReport suite_verify_residue(int n, const std::string& mode, int seeds,
                                        uint64_t seed) {
  if (n < 2) throw domain_error("verify-residue requires n >= 2");
  if (mode != "symbolic" && mode != "numeric")
    throw domain_error("mode must be symbolic or numeric");
  VerificationReport rep("verify-residue");
  rep.set_param("n", std::to_string(n));
  rep.set_param("mode", mode);
  if (mode == "symbolic") {
    if (n > 3)
      throw budget_error("symbolic spectral chain is budgeted to n <= 3",
                         static_cast<unsigned long long>(n));
    ResidueContext ctx = ResidueContext::symbolic(n);
    rep.add("trace_equals_closed_form",
            spectral_weight_trace(ctx).equals(spectral_weight_closed(ctx)));
    rep.add("residue_substitution_1", residue_eval_1(ctx).matches);
    rep.add("residue_substitution_2", residue_eval_2(ctx).matches);
  } else {
    rep.set_param("seeds", std::to_string(seeds));
    rep.set_param("seed", std::to_string(seed));
    int trace_ok = 0, res1_ok = 0, res2_ok = 0;
    for (int s = 0; s < seeds; ++s) {
      ResidueContext ctx = ResidueContext::numeric(n, seed + static_cast<uint64_t>(s));
      if (spectral_weight_trace(ctx).equals(spectral_weight_closed(ctx))) ++trace_ok;
      ResidueContext rctx = ResidueContext::numeric_residue(n, seed + static_cast<uint64_t>(s));
      if (residue_eval_1(rctx).matches) ++res1_ok;
      if (residue_eval_2(rctx).matches) ++res2_ok;
    }
    rep.add("trace_equals_closed_form", trace_ok == seeds, fraction_detail(trace_ok, seeds));
    rep.add("residue_substitution_1", res1_ok == seeds, fraction_detail(res1_ok, seeds));
    rep.add("residue_substitution_2", res2_ok == seeds, fraction_detail(res2_ok, seeds));
  }
  return rep;
}

VerificationReport suite_verify_degenerate(int n, int order, bool drop_unit_product,
                                           uint64_t seed) {
  if (n < 2) throw domain_error("verify-degenerate requires n >= 2");
  if (n > 5)
    throw budget_error("degenerate identity budgeted to n <= 5",
                       static_cast<unsigned long long>(n));
  VerificationReport rep("verify-degenerate");
  rep.set_param("n", std::to_string(n));
  rep.set_param("order", std::to_string(order));
  rep.set_param("drop_unit_product", drop_unit_product ? "true" : "false");

  if (drop_unit_product) {
    // document exactly which checks depend on the unit-product constraint
    VarRegistry reg;
    SatakeData free_b = SatakeData::symbolic(reg, "b", n, /*unit_product=*/false);
    bool hsum_breaks = false;
    for (int k = 0; k <= n && !hsum_breaks; ++k)
      for (int m = 1; m <= 6 && !hsum_breaks; ++m) {
        Rat s = hsum_identity(free_b, k, m);
        Rat oracle = m < k ? Rat::zero()
                           : Rat::constant(kHsumOracleSign) * hsum_oracle(free_b, k, m);
        if (!s.equals(oracle)) hsum_breaks = true;
      }
    rep.add("hsum_fails_without_unit_product_expected", hsum_breaks,
            "constraint is load-bearing");

    DegenerateContext free_ctx;
    free_ctx.n = n;
    free_ctx.reg = std::make_shared<VarRegistry>();
    free_ctx.a = SatakeData::symbolic(*free_ctx.reg, "a", n);
    free_ctx.b = SatakeData::symbolic(*free_ctx.reg, "b", n, /*unit_product=*/false);
    free_ctx.U = free_ctx.reg->intern("U");
    free_ctx.W = free_ctx.reg->intern("W");
    DegenerateReport dr = degenerate_assemble_and_verify(free_ctx);
    rep.add("assembly_fails_without_unit_product_expected", !dr.assembled_ok,
            "constraint is load-bearing");
    return rep;
  }

  rep.set_param("seed", std::to_string(seed));
  bool numeric = n > 3;
  DegenerateContext ctx =
      numeric ? DegenerateContext::numeric(n, seed) : DegenerateContext::symbolic(n);

  // hsum table with both vanishing and polynomial regimes
  {
    int pass = 0, total = 0;
    for (int k = 0; k <= n; ++k)
      for (int m = 1; m <= 6; ++m) {
        ++total;
        Rat s = hsum_identity(ctx.b, k, m);
        Rat oracle = m < k ? Rat::zero()
                           : Rat::constant(kHsumOracleSign) * hsum_oracle(ctx.b, k, m);
        if (s.equals(oracle)) ++pass;
      }
    rep.add("hsum_table", pass == total, fraction_detail(pass, total));
  }

  DegenerateReport dr = degenerate_assemble_and_verify(ctx);
  rep.add("b1_alternate_form", dr.b1_alternate_ok);
  rep.add("assembly_identity", dr.assembled_ok,
          dr.assembled_ok ? "" : "counterexample: " + dr.counterexample);
  rep.add("b_equals_c_minus_a", dr.b_equals_c_minus_a);

  // series-level cross-check in (U, W)
  if (!numeric) {
    std::vector<Var> uw{ctx.U, ctx.W};
    std::vector<int> ord{order, order};
    Series lhs = Series::from_rational(degenerate_closed_form(ctx), uw, ord);
    Series rhs = Series::from_rational(degenerate_A(ctx), uw, ord);
    for (int j = 0; j < ctx.n; ++j) {
      Rat pref = ctx.b.params[static_cast<size_t>(j)].inverse();
      for (int i = 0; i < ctx.n; ++i) {
        if (i == j) continue;
        pref = pref /
               (ctx.b.params[static_cast<size_t>(i)] - ctx.b.params[static_cast<size_t>(j)]);
      }
      rhs = rhs + (Series::from_rational(degenerate_B1(ctx, j), uw, ord) *
                   Series::from_rational(degenerate_B2(ctx, j), uw, ord))
                      .scale(pref);
    }
    rep.add("series_cross_check", lhs.equals(rhs),
            "bivariate order (" + std::to_string(order) + "," + std::to_string(order) + ")");
  } else {
    rep.add_skipped("series_cross_check", "numeric mode");
  }

  // role-swapped variant from its own decomposition
  {
    DegenerateContext swapped;
    swapped.n = n;
    swapped.reg = std::make_shared<VarRegistry>();
    swapped.a = SatakeData::symbolic(*swapped.reg, "bb", n);
    swapped.b = SatakeData::symbolic(*swapped.reg, "aa", n, /*unit_product=*/true);
    swapped.U = swapped.reg->intern("U2");
    swapped.W = swapped.reg->intern("W2");
    if (n <= 3) {
      DegenerateReport sr = degenerate_assemble_and_verify(swapped);
      rep.add("role_swapped_variant", sr.assembled_ok && sr.b_equals_c_minus_a);
    } else {
      rep.add_skipped("role_swapped_variant", "numeric mode");
    }
  }
  return rep;
}

VerificationReport suite_verify_whittaker(int m, int max_weight) {
  if (m < 2) throw domain_error("verify-whittaker requires m >= 2");
  if (m > 5)
    throw budget_error("whittaker recursion budgeted to m <= 5",
                       static_cast<unsigned long long>(m));
  VerificationReport rep("verify-whittaker");
  rep.set_param("m", std::to_string(m));
  rep.set_param("max_weight", std::to_string(max_weight));

  VarRegistry reg;
  Var V = reg.intern("V");
  SatakeData pi = SatakeData::symbolic(reg, "mu", m, /*unit_product=*/true);
  int pass = 0, total = 0;
  for (const Partition& nu : partitions_up_to(m - 1, max_weight)) {
    ++total;
    if (whittaker_recursion_check(pi, nu.parts, V)) ++pass;
  }
  rep.add("recursion_all_dominant_weights", pass == total, fraction_detail(pass, total));

  // support: zero off the dominant cone
  {
    Rng rng(271828);
    int ok = 0, trials = 0;
    SatakeData free_pi = SatakeData::symbolic(reg, "fr", m);
    while (trials < 100) {
      TorusVector v;
      for (int i = 0; i < m; ++i) v.push_back(static_cast<int>(rng.range(-3, 3)));
      if (is_dominant(v)) continue;
      ++trials;
      if (shintani_value(free_pi, v, V).is_zero()) ++ok;
    }
    rep.add("nondominant_support_vanishes", ok == 100, fraction_detail(ok, 100));
  }

  // central-character invariance of the torus values
  {
    int ok = 0, total_c = 0;
    for (const Partition& nu : partitions_up_to(m, 3)) {
      TorusVector v(nu.parts);
      Rat base = shintani_value(pi, v, V);
      for (int c : {-1, 2}) {
        ++total_c;
        TorusVector w(v);
        for (int& x : w) x += c;
        if (shintani_value(pi, w, V).equals(base)) ++ok;
      }
    }
    rep.add("central_invariance", ok == total_c, fraction_detail(ok, total_c));
  }
  return rep;
}

VerificationReport suite_verify_zeta(int m, int order) {
  if (m < 2) throw domain_error("verify-zeta requires m >= 2");
  if (m > 4)
    throw budget_error("zeta series budgeted to m <= 4", static_cast<unsigned long long>(m));
  if (order < 0) throw domain_error("order must be >= 0");
  VerificationReport rep("verify-zeta");
  rep.set_param("m", std::to_string(m));
  rep.set_param("order", std::to_string(order));

  {
    VarRegistry reg;
    Var V = reg.intern("V"), X = reg.intern("X");
    SatakeData Pi = SatakeData::symbolic(reg, "mu", m);
    SatakeData pip = SatakeData::symbolic(reg, "nu", m - 1);
    Series torus = zeta_series_gl_m_m1(Pi, pip, order, X, V);
    Series euler = euler_product_series(rs_lfactor(Pi, pip, X), order);
    rep.add("gl_m_by_m_minus_1_torus_equals_euler", torus.equals(euler),
            "order " + std::to_string(order));
    rep.add("constant_term_is_one", torus.coeff({0}).equals(Rat::one()));
  }
  if (m <= 3) {
    VarRegistry reg;
    Var V = reg.intern("V"), X = reg.intern("X");
    SatakeData pi = SatakeData::symbolic(reg, "mu", m);
    SatakeData pip = SatakeData::symbolic(reg, "nu", m);
    Series torus = zeta_series_gl_m_m(pi, pip, order, X, V);
    Series euler = euler_product_series(rs_lfactor(pi, pip, X), order);
    rep.add("gl_m_by_m_torus_equals_euler", torus.equals(euler),
            "order " + std::to_string(order));
  } else {
    rep.add_skipped("gl_m_by_m_torus_equals_euler", "equal-rank case budgeted to m <= 3");
  }
  return rep;
}

VerificationReport suite_classify_cosets(int n, uint32_t q, const std::string& variant,
                                         unsigned long long budget) {
  VerificationReport rep("classify-cosets");
  rep.set_param("n", std::to_string(n));
  rep.set_param("q", std::to_string(q));
  rep.set_param("variant", variant);

  auto absorb_orbit_report = [&rep](const OrbitReport& orep, const std::string& prefix) {
    for (const auto& [name, ok] : orep.checks) rep.add(prefix + name, ok);
    std::ostringstream sizes;
    for (const auto& [cls, size] : orep.orbit_sizes) sizes << cls << ":" << size << " ";
    rep.add(prefix + "classes", true,
            std::to_string(orep.orbit_sizes.size()) + " classes — " + sizes.str());
  };

  if (variant == "GxG") {
    absorb_orbit_report(exhaustive_partition_audit(n, q, budget), "partition.");
    absorb_orbit_report(stabilizer_audit(n, q, budget), "stabilizer.");
  } else if (variant == "PxG" || variant == "GxP" || variant == "PxP") {
    MirabolicVariant v = variant == "PxG"   ? MirabolicVariant::PxG
                         : variant == "GxP" ? MirabolicVariant::GxP
                                            : MirabolicVariant::PxP;
    absorb_orbit_report(mirabolic_partition_audit(n, q, v, budget), "mirabolic.");
  } else {
    throw domain_error("variant must be one of GxG, PxG, GxP, PxP");
  }
  return rep;
}

VerificationReport suite_verify_index(int n, uint32_t p, int e, unsigned long long budget) {
  VerificationReport rep("verify-index");
  rep.set_param("n", std::to_string(n));
  rep.set_param("p", std::to_string(p));
  rep.set_param("e", std::to_string(e));

  IndexReport ir = enumerate_congruence_index(n, p, e, budget);
  VolumeIdentityReport vr = level_volume_identity(n, BigRat(static_cast<long>(p)), e,
                                                  static_cast<long long>(ir.index));
  rep.add("volume_zeta_identity_symbolic", vr.formula_ok);
  rep.add("index_enumeration_matches_formula", vr.enumeration_ok,
          "index " + std::to_string(ir.index) + " = |GL|/" +
              std::to_string(ir.subgroup_order));
  return rep;
}

VerificationReport suite_verify_support(int n, uint32_t p, int e, int samples, uint64_t seed) {
  if (samples < 1) throw domain_error("samples must be >= 1");
  VerificationReport rep("verify-support");
  rep.set_param("n", std::to_string(n));
  rep.set_param("p", std::to_string(p));
  rep.set_param("e", std::to_string(e));
  rep.set_param("samples", std::to_string(samples));
  rep.set_param("seed", std::to_string(seed));

  ValuationReport vr = xi_t_valuation_check(n, p, e, samples, seed);
  rep.add("valuation_and_adjugate_identity_all_samples", vr.all_ok,
          fraction_detail(vr.samples_passed, vr.samples_requested) + ", skipped " +
              std::to_string(vr.skipped));
  return rep;
}

VerificationReport suite_verify_bruhat(int n) {
  if (n < 1) throw domain_error("verify-bruhat requires n >= 1");
  if (n > 3)
    throw budget_error("bruhat identity budgeted to n <= 3",
                       static_cast<unsigned long long>(n));
  VerificationReport rep("verify-bruhat");
  rep.set_param("n", std::to_string(n));
  BruhatReport br = bruhat_product_identity_check(n);
  rep.add("refactorization_identity", br.identity_ok, "scalar factor d");
  rep.add("specialization_bprime_cprime_zero", br.specialization_ok);
  return rep;
}

VerificationReport suite_verify_all(const std::string& profile, uint64_t seed,
                                    unsigned long long budget) {
  if (profile != "desk") throw domain_error("unknown profile: " + profile);
  VerificationReport rep("verify-all");
  rep.set_param("profile", profile);
  rep.set_param("seed", std::to_string(seed));

  rep.absorb(suite_verify_residue(2, "symbolic", 0, seed), "residue.n2.");
  rep.absorb(suite_verify_residue(3, "symbolic", 0, seed), "residue.n3.");
  rep.absorb(suite_verify_residue(4, "numeric", 10, seed), "residue.n4.");

  for (int m : {2, 3, 4}) rep.absorb(suite_verify_zeta(m, 6), "zeta.m" + std::to_string(m) + ".");
  for (int m : {2, 3, 4})
    rep.absorb(suite_verify_whittaker(m, 4), "whittaker.m" + std::to_string(m) + ".");

  rep.absorb(suite_verify_degenerate(2, 4, false, seed), "degenerate.n2.");
  rep.absorb(suite_verify_degenerate(3, 4, false, seed), "degenerate.n3.");
  rep.absorb(suite_verify_degenerate(4, 4, false, seed), "degenerate.n4.");

  const std::pair<int, uint32_t> tuples[] = {{2, 2}, {2, 3}, {2, 5}, {3, 2}};
  for (const auto& [n, q] : tuples) {
    std::string tag = "cosets.n" + std::to_string(n) + "q" + std::to_string(q) + ".";
    rep.absorb(suite_classify_cosets(n, q, "GxG", budget), tag);
    rep.absorb(suite_classify_cosets(n, q, "PxG", budget), tag);
    rep.absorb(suite_classify_cosets(n, q, "GxP", budget), tag);
    rep.absorb(suite_classify_cosets(n, q, "PxP", budget), tag);
  }

  rep.absorb(suite_verify_index(2, 2, 1, budget), "index.n2p2e1.");
  rep.absorb(suite_verify_index(2, 2, 2, budget), "index.n2p2e2.");
  rep.absorb(suite_verify_index(2, 3, 1, budget), "index.n2p3e1.");
  rep.absorb(suite_verify_index(3, 2, 1, budget), "index.n3p2e1.");

  rep.absorb(suite_verify_support(2, 2, 1, 500, seed), "support.p2e1.");
  rep.absorb(suite_verify_support(2, 3, 2, 500, seed), "support.p3e2.");

  rep.absorb(suite_verify_bruhat(2), "bruhat.n2.");
  rep.absorb(suite_verify_bruhat(3), "bruhat.n3.");
  return rep;
}

}  // namespace rslv
