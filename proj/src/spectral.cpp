#include "rslv/spectral.hpp"

#include <set>

#include "rslv/errors.hpp"
#include "rslv/rng.hpp"

namespace rslv {

namespace {

Rat zeta_inv(int k, Var V) { return zeta_local(k, V).inverse(); }

BigRat random_nonzero_rat(Rng& rng) {
  long num = 0;
  while (num == 0) num = rng.range(-9, 9);
  long den = rng.range(1, 4);
  return rat_from(num, den);
}

// A rational function that is a single Laurent monomial, as a substitution target.
LaurentMono as_laurent_mono(const Rat& r) {
  if (r.is_zero() || !r.num().is_single_term())
    throw consistency_error("substitution target is not a Laurent monomial");
  const auto& [nm, nc] = r.num().leading();
  LaurentMono lm;
  lm.coef = nc;
  std::vector<int> exps(nm.begin(), nm.end());
  for (const auto& f : r.den_factors()) {
    if (!f.poly.is_single_term())
      throw consistency_error("substitution target is not a Laurent monomial");
    const auto& [dm, dc] = f.poly.leading();
    if (exps.size() < dm.size()) exps.resize(dm.size(), 0);
    for (size_t i = 0; i < dm.size(); ++i) exps[i] -= f.mult * dm[i];
    lm.coef /= rat_pow(dc, f.mult);
  }
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) lm.powers.emplace_back(static_cast<int>(i), exps[i]);
  return lm;
}

}  // namespace

ResidueContext ResidueContext::symbolic(int n) {
  if (n < 2) throw domain_error("residue context requires n >= 2");
  ResidueContext ctx;
  ctx.n = n;
  ctx.reg = std::make_shared<VarRegistry>();
  ctx.a = SatakeData::symbolic(*ctx.reg, "a", n);
  ctx.b = SatakeData::symbolic(*ctx.reg, "b", n);
  ctx.x = SatakeData::symbolic(*ctx.reg, "x", n + 1);
  ctx.T1 = ctx.reg->intern("T1");
  ctx.T2 = ctx.reg->intern("T2");
  ctx.V = ctx.reg->intern("V");
  return ctx;
}

ResidueContext ResidueContext::numeric(int n, uint64_t seed) {
  ResidueContext ctx = symbolic(n);
  Rng rng(seed);
  for (;;) {
    std::vector<BigRat> av, bv, xv;
    for (int i = 0; i < n; ++i) av.push_back(random_nonzero_rat(rng));
    for (int i = 0; i < n; ++i) bv.push_back(random_nonzero_rat(rng));
    for (int i = 0; i < n + 1; ++i) xv.push_back(random_nonzero_rat(rng));
    bool distinct = true;
    for (size_t i = 0; i < xv.size() && distinct; ++i)
      for (size_t j = i + 1; j < xv.size(); ++j)
        if (xv[i] == xv[j]) {
          distinct = false;
          break;
        }
    if (!distinct) continue;
    ctx.a = SatakeData::numeric(av);
    ctx.b = SatakeData::numeric(bv);
    ctx.x = SatakeData::numeric(xv);
    return ctx;
  }
}

ResidueContext ResidueContext::numeric_residue(int n, uint64_t seed) {
  ResidueContext ctx = symbolic(n);
  Rng rng(seed);
  std::vector<BigRat> av, bv;
  for (int i = 0; i < n; ++i) av.push_back(random_nonzero_rat(rng));
  for (int i = 0; i < n; ++i) bv.push_back(random_nonzero_rat(rng));
  ctx.a = SatakeData::numeric(av, /*unit_product=*/true);
  ctx.b = SatakeData::numeric(bv, /*unit_product=*/true);
  return ctx;
}

WeightMatrix build_F(const ResidueContext& ctx) {
  int n = ctx.n;
  WeightMatrix F;
  F.size = n + 1;
  Rat t1 = Rat::variable(ctx.T1), t2 = Rat::variable(ctx.T2);
  std::vector<Rat> ea, eb, t1p, t2p;
  for (int k = 0; k <= n; ++k) {
    ea.push_back(elementary_symmetric_at(k, ctx.a.params));
    eb.push_back(elementary_symmetric_at(k, ctx.b.params));
    t1p.push_back(t1.pow(k));
    t2p.push_back(t2.pow(k));
  }
  F.entries.assign(static_cast<size_t>(n + 1), std::vector<Rat>(static_cast<size_t>(n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      F.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          t1p[static_cast<size_t>(n - i)] * t2p[static_cast<size_t>(n - j)] *
          ea[static_cast<size_t>(n - i)] * eb[static_cast<size_t>(n - j)];
  return F;
}

namespace {

// prod_{a != k}(x_k - x_a)^{-1} * prod_b(1 - q^{-1} x_k x_b^{-1})^{-1},
// assembled factor by factor so shared structure survives additions.
std::vector<Rat> gram_denominators(const ResidueContext& ctx) {
  int n = ctx.n;
  Rat qinv = ctx.q().inverse();
  std::vector<Rat> inv;
  for (int k = 0; k <= n; ++k) {
    Rat d = Rat::one();
    for (int a2 = 0; a2 <= n; ++a2) {
      if (a2 == k) continue;
      Rat diff = ctx.x.params[static_cast<size_t>(k)] - ctx.x.params[static_cast<size_t>(a2)];
      if (diff.is_zero()) throw degenerate_error("coincident x-parameters");
      d = d * diff.inverse();
    }
    for (int b2 = 0; b2 <= n; ++b2) {
      Rat factor = Rat::one() - qinv * ctx.x.params[static_cast<size_t>(k)] *
                                    ctx.x.params[static_cast<size_t>(b2)].inverse();
      if (factor.is_zero()) throw degenerate_error("vanishing Gram denominator factor");
      d = d * factor.inverse();
    }
    inv.push_back(d);
  }
  return inv;
}

}  // namespace

WeightMatrix build_Ginv_T(const ResidueContext& ctx) {
  int n = ctx.n;
  ctx.x.require_regular();
  WeightMatrix G;
  G.size = n + 1;
  G.entries.assign(static_cast<size_t>(n + 1), std::vector<Rat>(static_cast<size_t>(n + 1)));
  Rat zinv = zeta_inv(n + 1, ctx.V);
  Rat q = ctx.q();
  std::vector<Rat> denom = gram_denominators(ctx);
  std::vector<std::vector<Rat>> neg_pow(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    Rat mx = -ctx.x.params[static_cast<size_t>(k)];
    neg_pow[static_cast<size_t>(k)].push_back(Rat::one());
    for (int e = 1; e <= 2 * n; ++e)
      neg_pow[static_cast<size_t>(k)].push_back(neg_pow[static_cast<size_t>(k)].back() * mx);
  }
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      Rat acc = Rat::zero();
      for (int k = 0; k <= n; ++k)
        acc = acc + neg_pow[static_cast<size_t>(k)][static_cast<size_t>(n + j - i)] *
                        denom[static_cast<size_t>(k)];
      G.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          zinv * q.pow(n + 1 - j) * acc;
    }
  }
  return G;
}

Rat spectral_weight_trace(const ResidueContext& ctx) {
  WeightMatrix F = build_F(ctx);
  WeightMatrix G = build_Ginv_T(ctx);
  Rat acc = Rat::zero();
  for (int i = 0; i <= ctx.n; ++i)
    for (int j = 0; j <= ctx.n; ++j) acc = acc + F.at(i, j) * G.at(i, j);
  return acc;
}

Rat spectral_weight_closed(const ResidueContext& ctx) {
  int n = ctx.n;
  ctx.x.require_regular();
  Rat zinv = zeta_inv(n + 1, ctx.V);
  Rat q = ctx.q();
  Rat t1 = Rat::variable(ctx.T1), t2 = Rat::variable(ctx.T2);
  std::vector<Rat> denom = gram_denominators(ctx);
  Rat acc = Rat::zero();
  for (int k = 0; k <= n; ++k) {
    const Rat& xk = ctx.x.params[static_cast<size_t>(k)];
    Rat num = Rat::one();
    for (int g = 0; g < n; ++g)
      num = num * (Rat::one() - xk * t1 * ctx.a.params[static_cast<size_t>(g)]);
    for (int d = 0; d < n; ++d)
      num = num * (xk - t2 * q * ctx.b.params[static_cast<size_t>(d)]);
    acc = acc + num * denom[static_cast<size_t>(k)];
  }
  Rat sign = Rat::constant(n % 2 == 0 ? 1 : -1);
  return sign * zinv * acc;
}

namespace {

// The x-parameters must be the plain symbols interned by symbolic(); the
// residue substitutions are keyed on their variable indices.
std::vector<int> x_var_indices(const ResidueContext& ctx) {
  std::vector<int> idx;
  for (int k = 0; k <= ctx.n; ++k) {
    const Rat& p = ctx.x.params[static_cast<size_t>(k)];
    if (!p.is_polynomial_form() || !p.num().is_single_term())
      throw domain_error("residue evaluation needs symbolic x-parameters");
    const auto& [m, c] = p.num().leading();
    if (c != 1 || mono_total_degree(m) != 1)
      throw domain_error("residue evaluation needs symbolic x-parameters");
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

Rat zeta_ratio(const ResidueContext& ctx) {
  return zeta_local(1, ctx.V) * zeta_local(ctx.n + 1, ctx.V).inverse();
}

bool variable_set_matches(const ResidueContext& ctx, const Rat& value,
                          const std::vector<int>& xidx) {
  std::set<int> vars = value.variables();
  for (int xi : xidx)
    if (vars.count(xi)) return false;
  // in fully symbolic mode the surviving variables are exactly a, b, T1, T2, V
  bool symbolic = true;
  std::set<int> expected;
  for (const SatakeData* s : {&ctx.a, &ctx.b}) {
    for (const Rat& p : s->params) {
      auto pv = p.variables();
      if (pv.empty()) symbolic = false;
      expected.insert(pv.begin(), pv.end());
    }
  }
  expected.insert(ctx.T1.index);
  expected.insert(ctx.T2.index);
  expected.insert(ctx.V.index);
  if (symbolic) return vars == expected;
  for (int v : vars)
    if (!expected.count(v)) return false;
  return true;
}

}  // namespace

ResidueResult residue_eval_1(const ResidueContext& ctx) {
  int n = ctx.n;
  std::vector<int> xidx = x_var_indices(ctx);
  Rat q = ctx.q();
  Rat t1 = Rat::variable(ctx.T1), t2 = Rat::variable(ctx.T2);

  SubstMap sub;
  for (int beta = 0; beta < n; ++beta)
    sub[xidx[static_cast<size_t>(beta)]] =
        as_laurent_mono((q * t1 * ctx.a.params[static_cast<size_t>(beta)]).inverse());
  Rat x_last = t1.pow(n) * q.pow(n);
  sub[xidx[static_cast<size_t>(n)]] = as_laurent_mono(x_last);

  Rat value = spectral_weight_closed(ctx).substitute(sub);

  // closed form in the x-symbols, then substituted
  Rat sign = Rat::constant(n % 2 == 0 ? 1 : -1);
  Rat target_sym = sign * zeta_ratio(ctx);
  {
    const Rat& xn1 = ctx.x.params[static_cast<size_t>(n)];
    for (int d = 0; d < n; ++d)
      target_sym = target_sym *
                   (Rat::one() - xn1.inverse() * t2 * ctx.b.params[static_cast<size_t>(d)]);
    for (int beta = 0; beta < n; ++beta)
      target_sym =
          target_sym /
          (Rat::one() - q.inverse() * ctx.x.params[static_cast<size_t>(beta)] * xn1.inverse());
    target_sym = target_sym.substitute(sub);
  }

  // the same form with the substituted roots written out directly
  Rat target_direct = sign * zeta_ratio(ctx);
  for (int d = 0; d < n; ++d)
    target_direct = target_direct * (Rat::one() - ctx.b.params[static_cast<size_t>(d)] * t2 *
                                                      t1.pow(-n) * q.pow(-n));
  for (int beta = 0; beta < n; ++beta)
    target_direct =
        target_direct /
        (Rat::one() - ctx.a.params[static_cast<size_t>(beta)].inverse() * t1.pow(-n - 1) *
                          q.pow(-n - 2));

  ResidueResult r;
  r.value = value;
  r.matches = value.equals(target_sym) && value.equals(target_direct) &&
              variable_set_matches(ctx, value, xidx);
  return r;
}

ResidueResult residue_eval_2(const ResidueContext& ctx) {
  int n = ctx.n;
  std::vector<int> xidx = x_var_indices(ctx);
  Rat q = ctx.q();
  Rat t1 = Rat::variable(ctx.T1), t2 = Rat::variable(ctx.T2);

  SubstMap sub;
  for (int d = 0; d < n; ++d)
    sub[xidx[static_cast<size_t>(d)]] =
        as_laurent_mono(ctx.b.params[static_cast<size_t>(d)] * t2 * q);
  sub[xidx[static_cast<size_t>(n)]] = as_laurent_mono(q.pow(-n) * t2.pow(-n));

  // only the k = n+1 summand survives: each k <= n numerator picks up a factor
  // x_k - T2 q b_k which the substitution sends to zero
  bool collapse = true;
  for (int k = 0; k < n && collapse; ++k) {
    Rat prod = Rat::one();
    for (int d = 0; d < n; ++d)
      prod = prod * (ctx.x.params[static_cast<size_t>(k)] -
                     t2 * q * ctx.b.params[static_cast<size_t>(d)]);
    collapse = prod.substitute(sub).is_zero();
  }

  Rat value = spectral_weight_closed(ctx).substitute(sub);

  Rat sign = Rat::constant(n % 2 == 0 ? 1 : -1);
  Rat target_sym = sign * zeta_ratio(ctx);
  {
    for (int g = 0; g < n; ++g)
      target_sym = target_sym * (Rat::one() - q.pow(-n) * t2.pow(-n) * t1 *
                                                  ctx.a.params[static_cast<size_t>(g)]);
    for (int beta = 0; beta < n; ++beta)
      target_sym = target_sym / (Rat::one() - q.pow(-n - 1) * t2.pow(-n) *
                                                  ctx.x.params[static_cast<size_t>(beta)].inverse());
    target_sym = target_sym.substitute(sub);
  }

  Rat target_direct = sign * zeta_ratio(ctx);
  for (int g = 0; g < n; ++g)
    target_direct = target_direct * (Rat::one() - q.pow(-n) * t2.pow(-n) * t1 *
                                                      ctx.a.params[static_cast<size_t>(g)]);
  for (int beta = 0; beta < n; ++beta)
    target_direct =
        target_direct /
        (Rat::one() - q.pow(-n - 2) * t2.pow(-n - 1) *
                          ctx.b.params[static_cast<size_t>(beta)].inverse());

  ResidueResult r;
  r.value = value;
  r.matches = collapse && value.equals(target_sym) && value.equals(target_direct) &&
              variable_set_matches(ctx, value, xidx);
  return r;
}

}  // namespace rslv
