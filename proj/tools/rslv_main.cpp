#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rslv/errors.hpp"
#include "rslv/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

unsigned long long budget_from_env(unsigned long long fallback) {
  const char* env = std::getenv("RSLV_BUDGET");
  if (env == nullptr) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || v == 0) return fallback;
  return v;
}

int emit(rslv::VerificationReport& rep, const std::string& out_path) {
  std::string json = rep.to_json();
  std::cout << json << std::endl;
  std::cerr << rep.to_summary();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << json << std::endl;
  }
  return rep.ok() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification suites for local Rankin-Selberg identities"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "also write the JSON report to this file");

  unsigned long long budget = budget_from_env(rslv::kDefaultBudget);

  // verify-residue
  int res_n = 2;
  std::string res_mode = "symbolic";
  int res_seeds = 10;
  uint64_t res_seed = 20250809;
  auto* residue = app.add_subcommand("verify-residue", "spectral-weight trace/closed/residue chain");
  residue->add_option("--n", res_n, "size parameter (>= 2)")->required();
  residue->add_option("--mode", res_mode, "symbolic | numeric")
      ->check(CLI::IsMember({"symbolic", "numeric"}));
  residue->add_option("--seeds", res_seeds, "number of numeric instances");
  residue->add_option("--seed", res_seed, "base RNG seed");

  // verify-degenerate
  int deg_n = 2, deg_order = 4;
  bool deg_drop = false;
  uint64_t deg_seed = 20250809;
  auto* degen = app.add_subcommand("verify-degenerate", "degenerate-term closed form");
  degen->add_option("--n", deg_n, "rank parameter (>= 2)")->required();
  degen->add_option("--order", deg_order, "series cross-check order");
  degen->add_flag("--drop-unit-product", deg_drop,
                  "drop the unit-product constraint and expect the documented failures");
  degen->add_option("--seed", deg_seed, "RNG seed for numeric ranks");

  // verify-whittaker
  int wh_m = 3, wh_weight = 4;
  auto* whitt = app.add_subcommand("verify-whittaker", "one-step Whittaker recursion");
  whitt->add_option("--m", wh_m, "rank (>= 2)")->required();
  whitt->add_option("--max-weight", wh_weight, "torus weight bound");

  // verify-zeta
  int ze_m = 3, ze_order = 6;
  auto* zeta = app.add_subcommand("verify-zeta", "unramified zeta series vs Euler products");
  zeta->add_option("--m", ze_m, "rank (>= 2)")->required();
  zeta->add_option("--order", ze_order, "truncation order");

  // classify-cosets
  int co_n = 2;
  uint32_t co_q = 3;
  std::string co_variant = "GxG";
  unsigned long long co_budget = 0;
  auto* cosets = app.add_subcommand("classify-cosets", "double-coset audits over F_q");
  cosets->add_option("--n", co_n, "size parameter (>= 2)")->required();
  cosets->add_option("--q", co_q, "prime field size")->required();
  cosets->add_option("--variant", co_variant, "GxG | PxG | GxP | PxP")
      ->check(CLI::IsMember({"GxG", "PxG", "GxP", "PxP"}));
  cosets->add_option("--budget", co_budget, "enumeration budget (elements)");

  // verify-index
  int ix_n = 2, ix_e = 1;
  uint32_t ix_p = 2;
  auto* index = app.add_subcommand("verify-index", "congruence subgroup index enumeration");
  index->add_option("--n", ix_n, "size parameter")->required();
  index->add_option("--p", ix_p, "prime")->required();
  index->add_option("--e", ix_e, "level exponent")->required();

  // verify-support
  int su_n = 2, su_e = 1, su_samples = 500;
  uint32_t su_p = 2;
  uint64_t su_seed = 20250809;
  auto* support = app.add_subcommand("verify-support", "valuation shadow of the orbit invariant");
  support->add_option("--n", su_n, "block size")->required();
  support->add_option("--p", su_p, "prime")->required();
  support->add_option("--e", su_e, "level exponent")->required();
  support->add_option("--samples", su_samples, "number of samples");
  support->add_option("--seed", su_seed, "RNG seed");

  // verify-bruhat
  int br_n = 2;
  auto* bruhat = app.add_subcommand("verify-bruhat", "Bruhat product refactorization");
  bruhat->add_option("--n", br_n, "block size (1..3)")->required();

  // verify-all
  std::string all_profile = "desk";
  uint64_t all_seed = 20250809;
  auto* all = app.add_subcommand("verify-all", "run the full acceptance profile");
  all->add_option("--profile", all_profile, "profile name (desk)");
  all->add_option("--seed", all_seed, "RNG seed for all sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    rslv::VerificationReport rep("");
    if (residue->parsed()) {
      rep = rslv::suite_verify_residue(res_n, res_mode, res_seeds, res_seed);
    } else if (degen->parsed()) {
      rep = rslv::suite_verify_degenerate(deg_n, deg_order, deg_drop, deg_seed);
    } else if (whitt->parsed()) {
      rep = rslv::suite_verify_whittaker(wh_m, wh_weight);
    } else if (zeta->parsed()) {
      rep = rslv::suite_verify_zeta(ze_m, ze_order);
    } else if (cosets->parsed()) {
      rep = rslv::suite_classify_cosets(co_n, co_q, co_variant,
                                        co_budget ? co_budget : budget);
    } else if (index->parsed()) {
      rep = rslv::suite_verify_index(ix_n, ix_p, ix_e, budget);
    } else if (support->parsed()) {
      rep = rslv::suite_verify_support(su_n, su_p, su_e, su_samples, su_seed);
    } else if (bruhat->parsed()) {
      rep = rslv::suite_verify_bruhat(br_n);
    } else if (all->parsed()) {
      rep = rslv::suite_verify_all(all_profile, all_seed, budget);
    }
    return emit(rep, out_path);
  } catch (const rslv::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << " (estimated size " << e.estimate() << ")"
              << std::endl;
    return kExitBudget;
  } catch (const rslv::domain_error& e) {
    std::cerr << "domain error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << std::endl;
    return kExitVerificationFailure;
  }
}
