#include "graphcalc/fnspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphcalc {

namespace {

void require_size(const WeightedGraph& g, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw InputError("function has " + std::to_string(f.size()) +
                     " values for a graph with " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

void require_exponent(double p) {
  if (!(p >= 1.0)) throw InputError("norm exponent must be >= 1");
}

// Mean of |b + (c-b)s|^p over s in [0,1]: the antiderivative |g|^p g/((p+1)m)
// evaluated in a cancellation-free form.
double mean_abs_power(double b, double c, double p) {
  const double x = std::abs(b);
  const double y = std::abs(c);
  if ((b < 0.0) != (c < 0.0) && x > 0.0 && y > 0.0) {
    return (std::pow(x, p + 1.0) + std::pow(y, p + 1.0)) /
           ((p + 1.0) * (x + y));
  }
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (hi == 0.0) return 0.0;
  if (lo == 0.0) return std::pow(hi, p) / (p + 1.0);
  const double d = (hi - lo) / lo;
  if (d == 0.0) return std::pow(lo, p);
  return std::pow(lo, p) * std::expm1((p + 1.0) * std::log1p(d)) /
         ((p + 1.0) * d);
}

}  // namespace

double conjugate(double p) {
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double lp_norm_vertex(const WeightedGraph& g, std::span<const double> f,
                      double p) {
  require_size(g, f);
  require_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    s += std::pow(std::abs(f[v]), p) * g.measure(v);
  }
  return std::pow(s, 1.0 / p);
}

double lp_norm_edge(const WeightedGraph& g, std::span<const double> f,
                    double p) {
  require_size(g, f);
  require_exponent(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& e : g.edges()) {
      m = std::max({m, std::abs(f[e.u]), std::abs(f[e.v])});
    }
    return m;
  }
  double s = 0.0;
  for (const auto& e : g.edges()) {
    s += e.measure() * mean_abs_power(f[e.u], f[e.v], p);
  }
  return std::pow(s, 1.0 / p);
}

double grad_lp_norm(const WeightedGraph& g, std::span<const double> f,
                    double p) {
  require_size(g, f);
  require_exponent(p);
  double acc = 0.0;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const double slope = std::abs(f[e.u] - f[e.v]) / e.length;
    if (std::isinf(p)) {
      acc = std::max(acc, slope);
    } else {
      acc += e.measure() * std::pow(slope, p);
    }
  }
  return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
}

double integral_vertex(const WeightedGraph& g, std::span<const double> f) {
  require_size(g, f);
  double s = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) s += f[v] * g.measure(v);
  return s;
}

double integral_edge(const WeightedGraph& g, std::span<const double> f) {
  require_size(g, f);
  double s = 0.0;
  for (const auto& e : g.edges()) s += e.measure() * 0.5 * (f[e.u] + f[e.v]);
  return s;
}

double averaged_edge_l2_squared(const WeightedGraph& g,
                                std::span<const double> f) {
  require_size(g, f);
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double avg = 0.5 * (f[e.u] + f[e.v]);
    s += e.measure() * avg * avg;
  }
  return s;
}

double balance_point(const WeightedGraph& g, std::span<const double> f,
                     double p) {
  require_size(g, f);
  if (!(p > 1.0)) {
    throw InputError("balance_point needs p > 1; use balance_interval_l1");
  }
  if (f.empty()) throw InputError("balance_point of an empty function");
  const auto [mn, mx] = std::minmax_element(f.begin(), f.end());
  double lo = *mn;
  double hi = *mx;
  if (std::isinf(p)) return 0.5 * (lo + hi);
  // h(t) = sum V {f - t}^{p-1} is strictly decreasing; its root is the answer.
  auto h = [&](double t) {
    double s = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const double d = f[v] - t;
      s += g.measure(v) * std::copysign(std::pow(std::abs(d), p - 1.0), d);
    }
    return s;
  };
  const double width = 1e-12 * (1.0 + (hi - lo));
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Interval split_interval(const WeightedGraph& g, std::span<const double> f) {
  require_size(g, f);
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return f[a] < f[b]; });
  const double half = 0.5 * g.total_measure() * (1.0 + kSplitTolerance);

  // lo: smallest vertex value t with V{f > t} <= V/2.
  Interval J;
  double above = g.total_measure();
  for (int i = 0; i < n;) {
    const double t = f[order[i]];
    int j = i;
    while (j < n && f[order[j]] == t) above -= g.measure(order[j++]);
    if (above <= half) {
      J.lo = t;
      break;
    }
    i = j;
  }
  // hi: largest vertex value t with V{f < t} <= V/2.
  double below = g.total_measure();
  for (int i = n - 1; i >= 0;) {
    const double t = f[order[i]];
    int j = i;
    while (j >= 0 && f[order[j]] == t) below -= g.measure(order[j--]);
    if (below <= half) {
      J.hi = t;
      break;
    }
    i = j;
  }
  return J;
}

bool is_split(const WeightedGraph& g, std::span<const double> f) {
  return split_interval(g, f).contains(0.0);
}

Interval balance_interval_l1(const WeightedGraph& g,
                             std::span<const double> f) {
  // With V supported on vertices the minimizers of ||f - a||_1 are exactly the
  // shifts a for which f - a is split.
  return split_interval(g, f);
}

double min_shift_norm(const WeightedGraph& g, std::span<const double> f,
                      double q) {
  require_exponent(q);
  if (f.empty()) return 0.0;
  double a = 0.0;
  if (q == 1.0) {
    a = balance_interval_l1(g, f).lo;
  } else {
    a = balance_point(g, f, q);
  }
  std::vector<double> shifted(f.begin(), f.end());
  for (double& x : shifted) x -= a;
  return lp_norm_vertex(g, shifted, q);
}

double LevelSetSweep::area_at(double t) const {
  if (breakpoints.empty()) return 0.0;
  const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
  if (it != breakpoints.end() && *it == t) {
    return breakpoint_areas[it - breakpoints.begin()];
  }
  if (it == breakpoints.begin() || it == breakpoints.end()) return 0.0;
  return areas[(it - breakpoints.begin()) - 1];
}

double LevelSetSweep::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    s += areas[i] * (breakpoints[i + 1] - breakpoints[i]);
  }
  return s;
}

LevelSetSweep coarea(const WeightedGraph& g, std::span<const double> f) {
  require_size(g, f);
  LevelSetSweep sweep;
  sweep.breakpoints.assign(f.begin(), f.end());
  std::sort(sweep.breakpoints.begin(), sweep.breakpoints.end());
  sweep.breakpoints.erase(
      std::unique(sweep.breakpoints.begin(), sweep.breakpoints.end()),
      sweep.breakpoints.end());
  const std::size_t k = sweep.breakpoints.size();
  sweep.areas.assign(k > 0 ? k - 1 : 0, 0.0);
  sweep.breakpoint_areas.assign(k, 0.0);
  std::vector<double> diff(k + 1, 0.0);
  std::vector<double> bdiff(k + 1, 0.0);
  auto pos = [&](double x) {
    return static_cast<std::size_t>(
        std::lower_bound(sweep.breakpoints.begin(), sweep.breakpoints.end(),
                         x) -
        sweep.breakpoints.begin());
  };
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const std::size_t i = pos(std::min(f[e.u], f[e.v]));
    const std::size_t j = pos(std::max(f[e.u], f[e.v]));
    if (i == j) continue;
    diff[i] += e.a;
    diff[j] -= e.a;
    bdiff[i + 1] += e.a;
    bdiff[j] -= e.a;
  }
  double run = 0.0;
  double brun = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    run += diff[i];
    brun += bdiff[i];
    if (i + 1 < k) sweep.areas[i] = run;
    sweep.breakpoint_areas[i] = brun;
  }
  return sweep;
}

bool is_dirichlet(const WeightedGraph& g, std::span<const double> f) {
  require_size(g, f);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v) && f[v] != 0.0) return false;
  }
  return true;
}

}  // namespace graphcalc
