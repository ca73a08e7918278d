#include "graphcalc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace graphcalc {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool all_zero(std::span<const double> f) {
  return std::all_of(f.begin(), f.end(), [](double x) { return x == 0.0; });
}

class SuiteRun {
 public:
  SuiteRun(std::string_view name, Mode mode) {
    report_.suite = std::string(name);
    report_.mode = mode;
  }

  void residual(double r) {
    ++report_.checks;
    report_.max_residual = std::max(report_.max_residual, r);
    if (!(r <= kIdentityTolerance)) ++report_.failures;
  }

  void check(const InequalityCheck& c) {
    ++report_.checks;
    const double margin = (c.lhs - c.rhs) / (1.0 + std::abs(c.rhs));
    if (!c.passed) ++report_.failures;
    if (!report_.worst || margin < report_.min_margin ||
        (!c.passed && report_.worst->passed)) {
      report_.min_margin = std::min(report_.min_margin, margin);
      report_.worst = c;
    }
  }

  void constant(std::string name, double value) {
    report_.constants.emplace_back(std::move(name), value);
  }

  SuiteReport finish(int trials) {
    report_.trials = trials;
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

InequalityCheck comparison(std::string name, double lhs, double rhs,
                           const SobolevContext& ctx) {
  InequalityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.nu = ctx.nu;
  c.p = 1.0;
  c.iso = ctx.iso;
  c.rho_sup = ctx.rho_sup;
  c.mode = ctx.mode;
  c.passed = lhs >= rhs - kCheckTolerance * (1.0 + std::abs(rhs));
  return c;
}

void ff_dirichlet(const WeightedGraph& g, const SuiteOptions& o,
                  std::mt19937_64& rng,
                  const std::vector<VertexValues>& extra, SuiteRun& run) {
  const auto report = iso_constant(g, o.nu, IsoVariant::open, o.limits);
  SobolevContext ctx{Mode::dirichlet, o.nu, report.value, 0.0, 0.0};
  run.constant("I_nu", report.value);
  if (report.witness) {
    const auto approx = characteristic_approx(g, report.witness->vertices, 1e-6);
    const double s = sobolev_quotient(approx.graph, approx.f, o.nu);
    run.constant("approximant_quotient", s);
    run.check(comparison("ff-approximant", report.value * (1.0 + 1e-6) + 1e-12,
                         s, ctx));
  }
  const auto score = [&](std::span<const double> f) {
    if (all_zero(f)) return;
    run.check(comparison("ff-lower", sobolev_quotient(g, f, o.nu),
                         report.value, ctx));
  };
  for (const auto& f : extra) score(f);
  for (int t = 0; t < o.trials; ++t) score(random_function(rng, g, true));
}

void ff_closed(const WeightedGraph& g, const SuiteOptions& o,
               std::mt19937_64& rng, const std::vector<VertexValues>& extra,
               SuiteRun& run) {
  const double it = iso_constant(g, o.nu, IsoVariant::tilde, o.limits).value;
  const double itp =
      iso_constant(g, o.nu, IsoVariant::tilde_prime, o.limits).value;
  run.constant("I_tilde", it);
  run.constant("I_tilde_prime", itp);
  SobolevContext ctx{Mode::closed, o.nu, it, 0.0, 0.0};
  const double nc = conjugate(o.nu);
  const double upper = std::isinf(o.nu) ? 1.0 : std::pow(2.0, 1.0 / o.nu);
  if (std::isfinite(it)) {
    run.check(comparison("sandwich-lower", itp, it, ctx));
    run.check(comparison("sandwich-upper", upper * it, itp, ctx));
  }
  const auto score = [&](std::span<const double> f) {
    const auto fs = split_shift(g, f);
    run.check(comparison("ff-split", grad_lp_norm(g, fs, 1.0),
                         it * lp_norm_vertex(g, fs, nc), ctx));
    run.check(comparison("ff-min-shift", grad_lp_norm(g, f, 1.0),
                         itp * min_shift_norm(g, f, nc), ctx));
  };
  for (const auto& f : extra) score(f);
  for (int t = 0; t < o.trials; ++t) score(random_function(rng, g, false));
}

}  // namespace

WeightedGraph random_graph(std::mt19937_64& rng, const FuzzOptions& o) {
  const int n = uniform_int(rng, std::max(1, o.min_vertices),
                            std::max(o.min_vertices, o.max_vertices));
  std::vector<VertexSpec> vs;
  for (int i = 0; i < n; ++i) {
    VertexSpec v{"v" + std::to_string(i), 1.0, false};
    if (!o.traditional) v.measure = uniform(rng, 0.2, 3.0);
    v.boundary = uniform(rng, 0.0, 1.0) < o.boundary_probability;
    vs.push_back(std::move(v));
  }
  const auto edge = [&](int u, int v) {
    EdgeSpec e{vs[u].id, vs[v].id, 1.0, 1.0};
    if (!o.traditional) e.a = uniform(rng, 0.2, 3.0);
    if (!o.unit_lengths) e.length = uniform(rng, 0.3, 2.0);
    return e;
  };
  std::vector<EdgeSpec> es;
  for (int i = 1; i < n; ++i) es.push_back(edge(uniform_int(rng, 0, i - 1), i));
  const int extra = uniform_int(rng, 0, n);
  for (int k = 0; k < extra; ++k) {
    const int u = uniform_int(rng, 0, n - 1);
    int v = uniform_int(rng, 0, n - 1);
    if (u == v && !(o.allow_loops && uniform(rng, 0.0, 1.0) < 0.2)) continue;
    es.push_back(edge(u, v));
  }
  return WeightedGraph::build(std::move(vs), es);
}

VertexValues random_function(std::mt19937_64& rng, const WeightedGraph& g,
                             bool dirichlet) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = g.vertex_count();
  VertexValues f(n, 0.0);
  switch (uniform_int(rng, 0, 4)) {
    case 0:
      for (double& x : f) x = normal(rng);
      break;
    case 1:
      for (double& x : f) x = uniform(rng, 0.0, 1.0) < 0.3 ? normal(rng) : 0.0;
      break;
    case 2:
      for (double& x : f) x = uniform(rng, 0.0, 1.0) < 0.5 ? 1.0 : 0.0;
      break;
    case 3:
      for (double& x : f) {
        x = std::exp(2.0 * normal(rng)) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1);
      }
      break;
    default:
      for (double& x : f) x = std::abs(normal(rng));
  }
  if (dirichlet) {
    for (int v = 0; v < n; ++v) {
      if (g.is_boundary(v)) f[v] = 0.0;
    }
  }
  return f;
}

EdgeField random_field(std::mt19937_64& rng, const WeightedGraph& g) {
  EdgeField X(g.edge_count());
  for (double& x : X) x = uniform(rng, -2.0, 2.0);
  return X;
}

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

EdgeField gradient_field(const WeightedGraph& g, std::span<const double> f) {
  EdgeField X(g.edge_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (!ed.is_loop()) X[e] = (f[ed.v] - f[ed.u]) / ed.length;
  }
  return X;
}

double IdentityResiduals::max() const {
  return std::max({edge_integral, mohar, averaged, laplacian_symmetric, green,
                   dirichlet_form, coarea});
}

IdentityResiduals identity_residuals(const WeightedGraph& g,
                                     std::span<const double> f,
                                     std::span<const double> h,
                                     std::span<const double> X) {
  IdentityResiduals r;
  const auto rho = half_degrees(g).rho;
  double rho_f = 0.0;
  double rho_f2 = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    rho_f += rho[v] * f[v] * g.measure(v);
    rho_f2 += rho[v] * f[v] * f[v] * g.measure(v);
  }
  r.loop_free = std::none_of(g.edges().begin(), g.edges().end(),
                             [](const Edge& e) { return e.is_loop(); });
  r.unit_lengths = std::all_of(g.edges().begin(), g.edges().end(),
                               [](const Edge& e) { return e.length == 1.0; });
  if (r.loop_free) r.edge_integral = relative_residual(integral_edge(g, f), rho_f);
  const double grad2 = std::pow(grad_lp_norm(g, f, 2.0), 2);
  if (r.loop_free && r.unit_lengths) {
    const double edge2 = std::pow(lp_norm_edge(g, f, 2.0), 2);
    r.mohar = relative_residual(edge2 + grad2 / 6.0, rho_f2);
    r.averaged =
        relative_residual(averaged_edge_l2_squared(g, f) + grad2 / 4.0, rho_f2);
  }

  const auto lap_f = laplacian_apply(g, f);
  const auto lap_h = laplacian_apply(g, h);
  r.laplacian_symmetric =
      relative_residual(inner_vertex(g, lap_f, h), inner_vertex(g, f, lap_h));

  const auto grad_f = gradient_field(g, f);
  const auto grad_h = gradient_field(g, h);
  double flux = 0.0;
  double form = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const double m = g.edge(e).measure();
    flux += m * grad_f[e] * X[e];
    form += m * grad_f[e] * grad_h[e];
  }
  r.green = relative_residual(inner_vertex(g, f, divergence(g, X)), -flux);
  r.dirichlet_form = relative_residual(inner_vertex(g, lap_f, h), form);
  r.coarea = relative_residual(coarea(g, f).integral(), grad_lp_norm(g, f, 1.0));
  return r;
}

std::vector<std::string_view> suite_names() {
  return {"coarea", "green", "ff", "sobolev", "nash", "trudinger", "gennash"};
}

SuiteReport run_suite(const WeightedGraph& g, std::string_view suite,
                      const SuiteOptions& o) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown suite '" + std::string(suite) + "'");
  }
  if (o.trials < 0) throw InputError("trials must be >= 0");
  const Mode mode =
      o.mode.value_or(g.has_boundary() ? Mode::dirichlet : Mode::closed);
  if (mode == Mode::closed && g.has_boundary()) {
    throw InputError("closed mode needs a graph without boundary");
  }
  std::mt19937_64 rng(o.seed);
  SuiteRun run(suite, mode);
  std::vector<VertexValues> extra;
  if (o.function) {
    if (static_cast<int>(o.function->size()) != g.vertex_count()) {
      throw InputError("function size mismatch");
    }
    extra.push_back(*o.function);
  }
  const bool dirichlet = mode == Mode::dirichlet;

  if (suite == "coarea" || suite == "green") {
    const auto score = [&](std::span<const double> f) {
      if (suite == "coarea") {
        run.residual(relative_residual(coarea(g, f).integral(),
                                       grad_lp_norm(g, f, 1.0)));
        return;
      }
      const auto h = random_function(rng, g, false);
      const auto X = random_field(rng, g);
      run.residual(identity_residuals(g, f, h, X).max());
    };
    for (const auto& f : extra) score(f);
    for (int t = 0; t < o.trials; ++t) score(random_function(rng, g, false));
    return run.finish(o.trials);
  }

  if (suite == "ff") {
    if (dirichlet) {
      ff_dirichlet(g, o, rng, extra, run);
    } else {
      ff_closed(g, o, rng, extra, run);
    }
    return run.finish(o.trials);
  }

  if (suite == "gennash" && !dirichlet) {
    throw InputError("gennash suite needs dirichlet mode");
  }
  const auto ctx = sobolev_context(g, o.nu, mode, o.limits);
  run.constant(dirichlet ? "I_nu" : "I_tilde", ctx.iso);
  run.constant("rho_sup", ctx.rho_sup);
  // Random draws are made admissible: zeroed on the boundary, or shifted to
  // be split (mean zero for the closed Nash form).
  const auto admissible = [&](VertexValues f) {
    if (dirichlet) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_boundary(v)) f[v] = 0.0;
      }
      return f;
    }
    if (suite == "nash") {
      const double mean = integral_vertex(g, f) / g.total_measure();
      for (double& x : f) x -= mean;
      return f;
    }
    return split_shift(g, f);
  };
  const double pc = conjugate(o.p);
  int trial = 0;
  const auto score = [&](const VertexValues& raw) {
    const auto f = admissible(raw);
    if (suite == "sobolev") {
      run.check(general_F_check(g, ctx, f, 1.0, o.p));
      const double r_min = std::isinf(pc) ? 1.0 : 1.0 + 1.0 / pc;
      run.check(general_F_check(g, ctx, f, r_min + uniform(rng, 0.0, 2.0), o.p));
      if (ctx.nu > o.p) run.check(sobolev_check(g, ctx, f, o.p));
      if (o.p > ctx.nu && ctx.nu > 1.0) {
        run.check(sup_embedding_check(g, ctx, f, o.p));
      }
    } else if (suite == "nash") {
      if (!all_zero(f)) run.check(nash_check(g, ctx, f));
    } else if (suite == "trudinger") {
      const double gamma = trial == 0 ? 0.0 : uniform(rng, 0.0, 0.99);
      auto c = trudinger_check(g, ctx, f, gamma);
      if (gamma == 0.0) c.passed = c.passed && c.lhs == c.rhs;
      run.check(c);
    } else if (!all_zero(f)) {
      run.check(gennash_check(g, ctx, f));
    }
    ++trial;
  };
  for (const auto& f : extra) score(f);
  for (int t = 0; t < o.trials; ++t) score(random_function(rng, g, dirichlet));
  return run.finish(o.trials);
}

}  // namespace graphcalc
