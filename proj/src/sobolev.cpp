#include "graphcalc/sobolev.hpp"

#include <algorithm>
#include <cmath>

#include "graphcalc/generators.hpp"

namespace graphcalc {

namespace {

bool passes(double lhs, double rhs) {
  return lhs >= rhs - kCheckTolerance * (1.0 + std::abs(rhs));
}

void require_admissible(const WeightedGraph& g, const SobolevContext& ctx,
                        std::span<const double> f) {
  if (ctx.mode == Mode::dirichlet) {
    if (!is_dirichlet(g, f)) {
      throw InputError("function must vanish on the boundary");
    }
  } else if (!is_split(g, f)) {
    throw InputError("function must be split (shift it with split_shift)");
  }
}

InequalityCheck start(std::string name, const SobolevContext& ctx, double p) {
  InequalityCheck c;
  c.name = std::move(name);
  c.nu = ctx.nu;
  c.p = p;
  c.iso = ctx.iso;
  c.rho_sup = ctx.rho_sup;
  c.mode = ctx.mode;
  return c;
}

// rho^{-1/q} with the convention rho^0 = 1 at q = inf.
double rho_power(double rho, double q) {
  return std::isinf(q) ? 1.0 : std::pow(rho, -1.0 / q);
}

double log_gamma_term(double log_delta, int k) {
  // log((delta^k - 1)/(delta - 1)) without overflow or cancellation.
  const double x = k * log_delta;
  const double denom = std::log(std::expm1(log_delta));
  if (x < 700.0) return std::log(std::expm1(x)) - denom;
  return x + std::log1p(-std::exp(-x)) - denom;
}

}  // namespace

SobolevContext sobolev_context(const WeightedGraph& g, double nu, Mode mode,
                               const EnumerationLimits& limits) {
  if (mode == Mode::closed && g.has_boundary()) {
    throw InputError("closed mode needs a graph without boundary");
  }
  SobolevContext ctx;
  ctx.mode = mode;
  ctx.nu = nu;
  ctx.iso = iso_constant(g, nu,
                         mode == Mode::closed ? IsoVariant::tilde
                                              : IsoVariant::open,
                         limits)
                .value;
  ctx.rho_sup = half_degrees(g).rho_sup;
  ctx.total_measure = g.total_measure();
  return ctx;
}

InequalityCheck general_F_check(const WeightedGraph& g,
                                const SobolevContext& ctx,
                                std::span<const double> f, double r,
                                double p) {
  if (!(r >= 1.0)) throw InputError("F(x) = {x}^r needs r >= 1");
  if (!(p >= 1.0)) throw InputError("p must be >= 1");
  const double pc = conjugate(p);
  if (std::isfinite(pc) && r != 1.0 && (r - 1.0) * pc < 1.0 - 1e-12) {
    throw InputError("(F')^{p'} is not convex for this r and p");
  }
  require_admissible(g, ctx, f);
  VertexValues F(f.size());
  VertexValues dF(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    const double a = std::abs(f[v]);
    F[v] = std::copysign(std::pow(a, r), f[v]);
    dF[v] = r * std::pow(a, r - 1.0);
  }
  auto c = start("general-F", ctx, p);
  c.lhs = std::pow(ctx.rho_sup, 1.0 / pc) * grad_lp_norm(g, f, p) *
          lp_norm_vertex(g, dF, pc);
  if (std::isinf(pc)) c.lhs = grad_lp_norm(g, f, p) * lp_norm_vertex(g, dF, pc);
  c.rhs = ctx.iso * lp_norm_vertex(g, F, conjugate(ctx.nu));
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

InequalityCheck sobolev_check(const WeightedGraph& g, const SobolevContext& ctx,
                              std::span<const double> f, double p) {
  if (!(p >= 1.0) || !(ctx.nu > p)) {
    throw InputError("Sobolev inequality needs nu > p >= 1");
  }
  require_admissible(g, ctx, f);
  const double nu = ctx.nu;
  const double ratio = std::isinf(nu) ? 1.0 : (nu - p) / (nu - 1.0);
  const double q = std::isinf(nu) ? p : p * nu / (nu - p);
  const double constant =
      ctx.iso * std::pow(ctx.rho_sup, -(p - 1.0) / p) * ratio / p;
  auto c = start("sobolev", ctx, p);
  c.lhs = grad_lp_norm(g, f, p);
  c.rhs = constant * lp_norm_vertex(g, f, q);
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

InequalityCheck nash_check(const WeightedGraph& g, const SobolevContext& ctx,
                           std::span<const double> f) {
  if (!(ctx.nu > 2.0)) throw InputError("Nash inequality needs nu > 2");
  const double l1 = lp_norm_vertex(g, f, 1.0);
  if (!(l1 > 0.0)) throw InputError("Nash inequality needs a nonzero f");
  if (ctx.mode == Mode::dirichlet) {
    require_admissible(g, ctx, f);
  } else if (std::abs(integral_vertex(g, f)) > 1e-9 * l1) {
    throw InputError("closed Nash inequality needs a mean-zero f");
  }
  const double e = std::isinf(ctx.nu) ? 0.0 : 2.0 / ctx.nu;
  auto c = start("nash", ctx, 2.0);
  c.lhs = grad_lp_norm(g, f, 2.0);
  c.rhs = ctx.iso / (2.0 * std::sqrt(ctx.rho_sup)) *
          std::pow(lp_norm_vertex(g, f, 2.0), 1.0 + e) * std::pow(l1, -e);
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

InequalityCheck trudinger_check(const WeightedGraph& g,
                                const SobolevContext& ctx,
                                std::span<const double> f, double gamma,
                                bool edge_integral) {
  if (!(gamma < 1.0)) throw InputError("Trudinger inequality needs gamma < 1");
  if (!(ctx.nu > 1.0)) throw InputError("Trudinger inequality needs nu > 1");
  require_admissible(g, ctx, f);
  const double nc = conjugate(ctx.nu);
  const double grad = grad_lp_norm(g, f, ctx.nu);
  const double sup = lp_norm_vertex(g, f, kInfinity);
  if (!(grad > 0.0) && sup > 0.0) {
    throw InputError("Trudinger inequality needs a non-constant f");
  }
  const double scale =
      grad > 0.0 ? ctx.iso * std::pow(ctx.rho_sup, -1.0 / nc) / grad : 0.0;
  VertexValues k(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) k[v] = gamma * nc * f[v] * scale;

  auto c = start(edge_integral ? "trudinger-edge" : "trudinger", ctx, ctx.nu);
  double integral = 0.0;
  if (edge_integral) {
    for (const auto& e : g.edges()) {
      const double b = k[e.u];
      const double d = k[e.v] - b;
      const double mean = d == 0.0 ? std::exp(b) : std::exp(b) * std::expm1(d) / d;
      integral += e.measure() * mean;
    }
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) {
      integral += std::exp(k[v]) * g.measure(v);
    }
  }
  c.lhs = ctx.total_measure * std::pow(1.0 - gamma, -nc);
  c.rhs = integral;
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

InequalityCheck gennash_check(const WeightedGraph& g, const SobolevContext& ctx,
                              std::span<const double> f) {
  if (ctx.mode != Mode::dirichlet) {
    throw InputError("the generalized Nash form is stated for Dirichlet f");
  }
  require_admissible(g, ctx, f);
  const double l1 = lp_norm_vertex(g, f, 1.0);
  const double l2 = lp_norm_vertex(g, f, 2.0);
  if (!(l2 > 0.0)) throw InputError("generalized Nash form needs a nonzero f");
  auto c = start("gennash", ctx, 2.0);
  const double grad = grad_lp_norm(g, f, 2.0);
  const double x = 4.0 * l1 * l1 / (l2 * l2);
  const double phi =
      (std::isinf(ctx.nu) ? 1.0 : std::pow(x, 1.0 / ctx.nu)) / ctx.iso;
  c.lhs = std::isinf(phi) ? kInfinity : 32.0 * ctx.rho_sup * phi * phi * grad * grad;
  c.rhs = l2 * l2;
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

IterationConstant iteration_constant(double p, double nu, int max_terms) {
  if (!(nu > 1.0) || !(p > nu)) {
    throw InputError("iteration constant needs p > nu > 1");
  }
  const double pc = conjugate(p);
  const double nc = conjugate(nu);
  IterationConstant out;
  out.delta = nc / pc;
  if (!(out.delta > 1.0)) throw InputError("iteration constant needs delta > 1");
  out.c2 = pc * (nc - pc) / (nc * nc);
  const double L = std::log(out.delta);
  const int cap = max_terms > 0 ? max_terms : 10000000;
  double log_c1 = 0.0;
  int i = 0;
  for (; i < cap; ++i) {
    const double term = std::exp(-i * L) * log_gamma_term(L, i + 2);
    log_c1 += term;
    if (max_terms == 0 && i >= 2 && term < 1e-17 * log_c1) {
      ++i;
      break;
    }
  }
  out.terms = i;
  out.c1 = std::exp(log_c1);
  out.c_star = std::exp(-out.c2 * log_c1);
  return out;
}

InequalityCheck sup_embedding_check(const WeightedGraph& g,
                                    const SobolevContext& ctx,
                                    std::span<const double> f, double p) {
  const auto it = iteration_constant(p, ctx.nu);
  require_admissible(g, ctx, f);
  const double pc = conjugate(p);
  const double vol_exp = (std::isinf(p) ? 0.0 : 1.0 / p) - 1.0 / ctx.nu;
  auto c = start("sup-embedding", ctx, p);
  c.lhs = grad_lp_norm(g, f, p);
  c.rhs = it.c_star * std::pow(ctx.total_measure, vol_exp) * ctx.iso *
          rho_power(ctx.rho_sup, pc) * lp_norm_vertex(g, f, kInfinity);
  c.passed = passes(c.lhs, c.rhs);
  return c;
}

VertexValues split_shift(const WeightedGraph& g, std::span<const double> f) {
  const double a = balance_interval_l1(g, f).midpoint();
  VertexValues out(f.begin(), f.end());
  for (double& x : out) x -= a;
  return out;
}

SharpnessReport sharpness_experiment(double p, std::span<const double> nus,
                                     std::span<const int> ms, int n) {
  if (!(p >= 1.0)) throw InputError("p must be >= 1");
  SharpnessReport out;
  out.p = p;
  out.n = n;
  const EnumerationLimits unlimited{0, true};
  const double pc = conjugate(p);
  for (double nu : nus) {
    if (!(nu >= p)) throw InputError("sharpness grid needs nu >= p");
    const auto g = radial_graph(n, nu);
    const double iso = iso_constant(g, nu, IsoVariant::open, unlimited).value;
    const double rho = half_degrees(g).rho_sup;
    const double norm = iso * rho_power(rho, pc);
    const double q = nu == p ? kInfinity : p * nu / (nu - p);
    double best = kInfinity;
    for (int m : ms) {
      if (m > n) throw InputError("m must not exceed n");
      const auto f = log_test_function(n, m);
      SharpnessRow row;
      row.nu = nu;
      row.m = m;
      row.quotient = grad_lp_norm(g, f, p) / lp_norm_vertex(g, f, q);
      row.normalized = row.quotient / norm;
      best = std::min(best, row.normalized);
      out.rows.push_back(row);
    }
    if (nu > p) {
      out.nu_values.push_back(nu);
      out.fitted.push_back(best / std::pow(nu - p, 1.0 / p - 1.0));
      out.C = std::max(out.C, out.fitted.back());
    }
  }
  return out;
}

}  // namespace graphcalc
