#include "graphcalc/heat.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <deque>
#include <memory>
#include <numbers>
#include <random>

namespace graphcalc {

HeatKernel::HeatKernel(const WeightedGraph& g, Mode mode)
    : dec_(spectral_decomposition(g, mode)),
      measures_(g.measures().begin(), g.measures().end()) {}

double HeatKernel::operator()(int x, int y, double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < dec_.eigenvalues.size(); ++i) {
    const auto& phi = dec_.eigenfunctions[i];
    s += std::exp(-t * dec_.eigenvalues[i]) * phi[x] * phi[y];
  }
  return s;
}

double HeatKernel::time_derivative(int x, int y, double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < dec_.eigenvalues.size(); ++i) {
    const auto& phi = dec_.eigenfunctions[i];
    const double lam = dec_.eigenvalues[i];
    s -= lam * std::exp(-t * lam) * phi[x] * phi[y];
  }
  return s;
}

VertexValues HeatKernel::apply(std::span<const double> f0, double t) const {
  const int n = vertex_count();
  if (static_cast<int>(f0.size()) != n) {
    throw InputError("initial data size mismatch");
  }
  VertexValues u(n, 0.0);
  for (std::size_t i = 0; i < dec_.eigenvalues.size(); ++i) {
    const auto& phi = dec_.eigenfunctions[i];
    double coeff = 0.0;
    for (int v = 0; v < n; ++v) coeff += phi[v] * f0[v] * measures_[v];
    coeff *= std::exp(-t * dec_.eigenvalues[i]);
    for (int v = 0; v < n; ++v) u[v] += coeff * phi[v];
  }
  return u;
}

HeatKernel heat_kernel(const WeightedGraph& g, Mode mode) {
  return HeatKernel(g, mode);
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0 && hi >= lo && per_decade > 0)) {
    throw InputError("log grid needs 0 < lo <= hi and a positive density");
  }
  const double decades = std::log10(hi / lo);
  const int steps = std::max(1, static_cast<int>(std::lround(decades * per_decade)));
  std::vector<double> out;
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    out.push_back(lo * std::pow(10.0, decades * i / steps));
  }
  return out;
}

VertexValues heat_solve(const WeightedGraph& g, std::span<const double> f0,
                        double t) {
  if (!(t >= 0.0)) throw InputError("time must be nonnegative");
  if (g.interior().empty()) return VertexValues(g.vertex_count(), 0.0);
  VertexValues masked(f0.begin(), f0.end());
  if (static_cast<int>(masked.size()) != g.vertex_count()) {
    throw InputError("initial data size mismatch");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) masked[v] = 0.0;
  }
  return HeatKernel(g, Mode::dirichlet).apply(masked, t);
}

double heat_residual(const WeightedGraph& g, std::span<const double> f0,
                     double t, double h) {
  const HeatKernel K(g, Mode::dirichlet);
  VertexValues masked(f0.begin(), f0.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) masked[v] = 0.0;
  }
  const auto plus = K.apply(masked, t + h);
  const auto minus = K.apply(masked, std::max(0.0, t - h));
  const double span = t + h - std::max(0.0, t - h);
  const auto u = K.apply(masked, t);
  const auto lap = laplacian_apply(g, u);
  double worst = 0.0;
  for (int v : g.interior()) {
    const double ut = (plus[v] - minus[v]) / span;
    worst = std::max(worst, std::abs(ut + lap[v]));
  }
  return worst;
}

ExhaustionTable exhaustion_check(const WeightedGraph& g,
                                 const std::vector<std::vector<int>>& chain,
                                 std::span<const HeatProbe> probes,
                                 double tol) {
  if (chain.empty()) throw InputError("exhaustion chain is empty");
  const int n = g.vertex_count();
  std::vector<std::vector<char>> member;
  for (const auto& A : chain) {
    std::vector<char> in(n, 0);
    for (int v : A) {
      if (v < 0 || v >= n) throw InputError("vertex out of range");
      if (g.is_boundary(v)) throw InputError("chain sets must be interior");
      in[v] = 1;
    }
    if (!member.empty()) {
      for (int v = 0; v < n; ++v) {
        if (member.back()[v] && !in[v]) {
          throw InputError("chain sets must be nested");
        }
      }
    }
    member.push_back(std::move(in));
  }
  for (const auto& p : probes) {
    if (p.x < 0 || p.x >= n || p.y < 0 || p.y >= n || !member[0][p.x] ||
        !member[0][p.y]) {
      throw InputError("probe vertices must lie in the first chain set");
    }
  }

  ExhaustionTable out;
  for (const auto& in : member) {
    auto bd = std::make_unique<bool[]>(n);
    for (int v = 0; v < n; ++v) bd[v] = !in[v];
    const auto sub = g.with_boundary(
        std::span<const bool>(bd.get(), static_cast<std::size_t>(n)));
    const HeatKernel K(sub, Mode::dirichlet);
    std::vector<double> row;
    for (const auto& p : probes) row.push_back(K(p.x, p.y, p.t));
    out.rows.push_back(std::move(row));
  }
  const HeatKernel full(g, Mode::dirichlet);
  for (const auto& p : probes) out.full.push_back(full(p.x, p.y, p.t));

  out.monotone = true;
  out.below_full = true;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if (i > 0 && out.rows[i][k] < out.rows[i - 1][k] - tol) {
        out.monotone = false;
      }
      if (out.rows[i][k] > out.full[k] + tol) out.below_full = false;
    }
  }
  return out;
}

NashCheck nash_diagonal_bound(const WeightedGraph& g, double nu, Mode mode,
                              std::span<const double> t_grid,
                              const EnumerationLimits& limits) {
  if (!(nu > 2.0) || std::isinf(nu)) {
    throw InputError("the Nash bound needs a finite nu > 2");
  }
  if (mode == Mode::closed && g.has_boundary()) {
    throw InputError("closed mode needs a graph without boundary");
  }
  NashCheck out;
  out.nu = nu;
  out.mode = mode;
  out.rho_sup = half_degrees(g).rho_sup;
  const auto iso = iso_constant(
      g, nu, mode == Mode::closed ? IsoVariant::tilde : IsoVariant::open,
      limits);
  out.iso = iso.value;
  out.C1 = out.iso / (2.0 * std::sqrt(out.rho_sup));
  if (mode == Mode::closed) out.C1 *= std::pow(2.0, -2.0 / nu);
  out.applicable = std::isfinite(out.C1) && out.C1 > 0.0;
  if (!out.applicable) {
    out.holds = true;
    return out;
  }
  out.C2 = std::pow(nu / 2.0, nu / 2.0) * std::pow(out.C1, -nu);

  const HeatKernel K(g, mode);
  const double shift = mode == Mode::closed ? 1.0 / g.total_measure() : 0.0;
  const auto& support = K.spectrum().support;
  for (double t : t_grid) {
    const double scale = std::pow(t, nu / 2.0);
    for (int x : support) {
      const double value = (K(x, x, t) - shift) * scale;
      if (out.worst_x < 0 || value > out.max_scaled) {
        out.max_scaled = value;
        out.worst_t = t;
        out.worst_x = x;
      }
    }
  }
  out.holds = out.max_scaled <= out.C2 + 1e-9;
  return out;
}

std::vector<EigenBoundRow> eigenvalue_lower_bounds(
    const WeightedGraph& g, double nu, const EnumerationLimits& limits) {
  if (!(nu > 2.0)) throw InputError("the eigenvalue bound needs nu > 2");
  if (g.has_boundary()) throw InputError("eigenvalue bound needs a closed graph");
  const auto iso = iso_constant(g, nu, IsoVariant::tilde, limits);
  const double rho = half_degrees(g).rho_sup;
  const double c = iso.value / (2.0 * std::sqrt(rho));
  const double total = g.total_measure();
  const auto dec = spectral_decomposition(g, Mode::closed);
  std::vector<EigenBoundRow> rows;
  const double exponent = std::isinf(nu) ? 0.0 : 2.0 / nu;
  for (int k = 1; k < static_cast<int>(dec.eigenvalues.size()); ++k) {
    EigenBoundRow r;
    r.k = k;
    r.lambda = dec.eigenvalues[k];
    r.bound = std::pow(k / total, exponent) * std::pow(2.0, -2.0 * exponent) *
              c * c / std::numbers::e;
    r.holds = r.bound <= r.lambda + 1e-9;
    rows.push_back(r);
  }
  return rows;
}

DecayProfile power_profile(double nu, double kappa) {
  if (!(nu > 0.0) || std::isinf(nu)) {
    throw InputError("power profile needs a finite nu > 0");
  }
  if (!(kappa > 0.0)) throw InputError("power profile needs kappa > 0");
  DecayProfile p;
  p.name = "power";
  p.power_nu = nu;
  p.kappa = kappa;
  p.phi = [nu, kappa](double x) { return kappa * std::pow(x, 1.0 / nu); };
  return p;
}

double decay_F_power(double nu, double kappa, double x) {
  return kappa * kappa * std::pow(4.0, 2.0 / nu) * (nu / 2.0) *
         std::pow(x, -2.0 / nu);
}

double decay_F(const DecayProfile& p, double x) {
  if (!(x > 0.0)) throw InputError("F is defined for x > 0");
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [&](double s) {
    const double v = p.phi(4.0 * std::exp(-s));
    return v * v;
  };
  constexpr double kChunk = 20.0;
  const double s0 = std::log(x);
  if (p.power_nu) {
    const double body = gauss_kronrod<double, 31>::integrate(
        integrand, s0, s0 + kChunk, 15, 1e-14);
    return body + decay_F_power(*p.power_nu, p.kappa, std::exp(s0 + kChunk));
  }
  double total = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double a = s0 + i * kChunk;
    const double piece = gauss_kronrod<double, 31>::integrate(
        integrand, a, a + kChunk, 15, 1e-14);
    total += piece;
    if (piece <= 1e-16 * total) return total;
  }
  throw InputError("F does not converge for this profile");
}

double decay_F_inverse(const DecayProfile& p, double y) {
  if (!(y > 0.0)) throw InputError("F^{-1} needs a positive argument");
  double lo = 0.0;  // log x
  double hi = 0.0;
  while (decay_F(p, std::exp(lo)) < y) {
    lo -= 8.0;
    if (lo < -700.0) throw InputError("F^{-1} out of range");
  }
  while (decay_F(p, std::exp(hi)) > y) {
    hi += 8.0;
    if (hi > 700.0) throw InputError("F^{-1} out of range");
  }
  auto g = [&](double s) { return decay_F(p, std::exp(s)) - y; };
  const auto root = boost::math::tools::bisect(
      g, lo, hi, boost::math::tools::eps_tolerance<double>(50));
  return std::exp(0.5 * (root.first + root.second));
}

HypothesisAudit decay_hypothesis(const WeightedGraph& g, const DecayProfile& p,
                                 const EnumerationLimits& limits) {
  const auto interior = g.interior();
  if (static_cast<int>(interior.size()) > limits.max_vertices && !limits.force) {
    throw CapExceeded("hypothesis audit exceeds the enumeration cap");
  }
  std::vector<char> allowed(g.vertex_count(), 0);
  for (int v : interior) allowed[v] = 1;
  HypothesisAudit out;
  double worst = kInfinity;
  for_each_connected_subset(
      g, allowed, [&](std::span<const int> m, double area, double vmass) {
        ++out.sets_examined;
        const double need = vmass / p.phi(vmass);
        const double gap = area - need;
        if (gap < -1e-12 * (1.0 + need) && gap < worst) {
          worst = gap;
          AdmissibleSet s{{m.begin(), m.end()}, area, vmass};
          std::sort(s.vertices.begin(), s.vertices.end());
          out.violation = std::move(s);
          out.holds = false;
        }
      });
  return out;
}

DecayCheck general_decay_bound(const WeightedGraph& g, const DecayProfile& p,
                               std::span<const int> xs,
                               std::span<const double> ts,
                               const EnumerationLimits& limits) {
  DecayCheck out;
  out.audit = decay_hypothesis(g, p, limits);
  if (!out.audit.holds) {
    std::string ids;
    for (int v : out.audit.violation->vertices) {
      ids += (ids.empty() ? "" : ",") + g.id(v);
    }
    throw InputError("decay hypothesis fails on the set {" + ids + "}");
  }
  out.C = 1.0 / (32.0 * half_degrees(g).rho_sup);
  const HeatKernel K(g, Mode::dirichlet);
  out.holds = true;
  for (int x : xs) {
    if (x < 0 || x >= g.vertex_count()) throw InputError("vertex out of range");
    for (double t : ts) {
      if (!(t > 0.0)) throw InputError("probe times must be positive");
      DecayProbe pr;
      pr.x = x;
      pr.t = t;
      pr.kernel = K(x, x, t);
      pr.bound = decay_F_inverse(p, out.C * t);
      pr.holds = pr.kernel <= pr.bound + 1e-9;
      out.holds = out.holds && pr.holds;
      out.probes.push_back(pr);
    }
  }
  return out;
}

TreeProfile nonuniqueness_tree(double alpha, int depth) {
  if (!(alpha > 0.0)) throw InputError("alpha must be positive");
  if (depth < 3) throw InputError("depth must be at least 3");
  TreeProfile out;
  out.alpha = alpha;
  std::vector<long double> f(depth + 1, 0.0L);
  std::vector<long long> n(depth + 1, 0);
  for (int i = 1; i <= depth; ++i) {
    n[i] = static_cast<long long>(std::floor(std::pow(i, 1.0 + alpha)));
  }
  f[1] = 1.0L;
  f[2] = (1.0L + n[1]) / n[1];
  for (int i = 2; i < depth; ++i) {
    f[i + 1] = ((2.0L + n[i]) * f[i] - f[i - 1]) / n[i];
  }

  // Level quotient: a level-i vertex has one parent and n_i children.
  long double worst = 0.0L;
  for (int i = 1; i < depth; ++i) {
    const long double up = i > 1 ? f[i] - f[i - 1] : 0.0L;
    const long double lap = up + n[i] * (f[i] - f[i + 1]);
    const long double scale =
        std::abs(f[i]) + (i > 1 ? std::abs(f[i - 1]) : 0.0L) +
        n[i] * (std::abs(f[i]) + std::abs(f[i + 1]));
    worst = std::max(worst, std::abs(lap + f[i]) / std::max(1.0L, scale));
  }
  out.residual = static_cast<double>(worst);

  out.increasing = true;
  out.bounded = true;
  long double prod = 1.0L;
  for (int i = 1; i <= depth; ++i) {
    out.children.push_back(n[i]);
    out.f.push_back(static_cast<double>(f[i]));
    out.product_bound.push_back(static_cast<double>(prod));
    if (i > 1 && !(f[i] > f[i - 1])) out.increasing = false;
    if (f[i] > prod * (1.0L + 1e-15L)) out.bounded = false;
    prod *= 1.0L + 2.0L / n[i];
  }
  const double sup = out.f.back();
  for (double t : {0.0, 1.0, 2.0}) out.sup_growth.push_back(std::exp(t) * sup);
  return out;
}

namespace {

bool interior_connected(const WeightedGraph& g) {
  const auto interior = g.interior();
  if (interior.empty()) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<int> queue{interior[0]};
  seen[interior[0]] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : g.incident(v)) {
      const int u = g.edge(e).other(v);
      if (!seen[u] && !g.is_boundary(u)) {
        seen[u] = 1;
        ++count;
        queue.push_back(u);
      }
    }
  }
  return count == interior.size();
}

}  // namespace

UniquenessReport finite_uniqueness_check(const WeightedGraph& g, int trials,
                                         std::uint64_t seed) {
  UniquenessReport out;
  out.trials = trials;
  if (g.interior().empty()) {
    out.energy_ok = out.zero_stays_zero = out.positivity_ok = true;
    return out;
  }
  const HeatKernel K(g, Mode::dirichlet);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int n = g.vertex_count();
  constexpr double t = 0.5;
  constexpr double h = 1e-5;
  auto energy = [&](std::span<const double> f0, double s) {
    const auto u = K.apply(f0, s);
    return inner_vertex(g, u, u);
  };
  out.energy_ok = true;
  for (int k = 0; k < trials; ++k) {
    VertexValues f0(n, 0.0);
    for (int v = 0; v < n; ++v) f0[v] = g.is_boundary(v) ? 0.0 : unit(rng);
    const double numeric = (energy(f0, t + h) - energy(f0, t - h)) / (2.0 * h);
    const double grad = grad_lp_norm(g, K.apply(f0, t), 2.0);
    const double exact = -2.0 * grad * grad;
    const double err = std::abs(numeric - exact) / (1.0 + std::abs(exact));
    out.max_energy_error = std::max(out.max_energy_error, err);
    if (err > 1e-6) out.energy_ok = false;
  }

  const VertexValues zero(n, 0.0);
  out.zero_stays_zero = true;
  for (double s : {0.0, 0.5, 1.0, 10.0}) {
    for (double x : K.apply(zero, s)) {
      if (std::abs(x) > 1e-12) out.zero_stays_zero = false;
    }
  }

  // Nonnegative data that is not identically zero becomes strictly positive
  // on a connected interior.
  out.positivity_ok = true;
  if (interior_connected(g)) {
    std::uniform_real_distribution<double> half(0.0, 1.0);
    for (int k = 0; k < std::max(1, trials); ++k) {
      VertexValues f0(n, 0.0);
      const auto interior = g.interior();
      f0[interior[k % interior.size()]] = 1.0 + half(rng);
      const auto u = K.apply(f0, t);
      for (int v : interior) {
        if (!(u[v] > 0.0)) out.positivity_ok = false;
      }
    }
  }
  return out;
}

}  // namespace graphcalc
