#include "graphcalc/spectral_bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "graphcalc/maxflow.hpp"

namespace graphcalc {

namespace {

long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

bool has_edgeless_interior_vertex(const WeightedGraph& g) {
  for (int v : g.interior()) {
    if (g.incident(v).empty()) return true;
  }
  return false;
}

void require_unit_measures(const WeightedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.measure(v) != 1.0) throw InputError("alon_field needs V == 1");
  }
  for (const auto& e : g.edges()) {
    if (e.a != 1.0) throw InputError("alon_field needs a_e == 1");
  }
}

std::vector<int> checked_source_set(const WeightedGraph& g,
                                    std::span<const int> A) {
  std::vector<int> out(A.begin(), A.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    if (g.is_boundary(v)) throw InputError("source set must avoid the boundary");
  }
  if (out.size() > 24) throw CapExceeded("source set larger than 24 vertices");
  return out;
}

// Gray-code walk over the nonempty subsets of A tracking the neighbourhood
// weight; calls keep(gamma, mass) for each subset.
template <typename Weight, typename Keep>
void walk_subsets(const WeightedGraph& g, const std::vector<int>& A,
                  Weight weight, Keep keep) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < n; ++i) {
    for (int e : g.incident(A[i])) nb[i].push_back(g.edge(e).other(A[i]));
    std::sort(nb[i].begin(), nb[i].end());
    nb[i].erase(std::unique(nb[i].begin(), nb[i].end()), nb[i].end());
  }
  using W = decltype(weight(0));
  std::vector<int> touch(g.vertex_count(), 0);
  std::vector<char> in(n, 0);
  W gamma{0};
  W mass{0};
  for (unsigned long long k = 1; k < (1ull << n); ++k) {
    const int i = std::countr_zero(k);
    const int v = A[i];
    if (in[i]) {
      in[i] = 0;
      mass -= weight(v);
      for (int u : nb[i]) {
        if (--touch[u] == 0) gamma -= weight(u);
      }
    } else {
      in[i] = 1;
      mass += weight(v);
      for (int u : nb[i]) {
        if (touch[u]++ == 0) gamma += weight(u);
      }
    }
    if (mass != W{0}) keep(gamma, mass);
  }
}

struct NetworkArc {
  int arc;
  int edge;
  bool forward;  // flow runs from edge.u to edge.v
};

}  // namespace

double true_lambda(const WeightedGraph& g, Mode mode) {
  if (mode == Mode::closed) {
    if (g.vertex_count() < 2) {
      throw InputError("closed mode needs at least two vertices");
    }
    return spectral_decomposition(g, Mode::closed, 2).eigenvalues[1];
  }
  return spectral_decomposition(g, Mode::dirichlet, 1).eigenvalues[0];
}

BoundInputs bound_inputs(const WeightedGraph& g, Mode mode,
                         const EnumerationLimits& limits) {
  if (mode == Mode::closed && g.has_boundary()) {
    throw InputError("closed mode needs a graph without boundary");
  }
  BoundInputs in;
  in.mode = mode;
  const auto iso = iso_constant(
      g, kInfinity, mode == Mode::closed ? IsoVariant::tilde : IsoVariant::open,
      limits);
  in.iso_inf = iso.value;
  if (iso.witness) in.iso_witness = iso.witness->vertices;
  const auto mag = magnification(g, mode, limits);
  in.c = mag.c;
  in.c_witness = mag.witness;
  in.rho_sup = half_degrees(g).rho_sup;

  in.unit_lengths = true;
  in.unit_measures = true;
  in.bobkov_measures = true;
  in.max_length = 0.0;
  for (const auto& e : g.edges()) {
    in.max_length = std::max(in.max_length, e.length);
    if (e.length != 1.0) in.unit_lengths = false;
    if (e.a != 1.0) in.unit_measures = false;
    if (e.is_loop()) continue;
    const double target = g.measure(e.u) + g.measure(e.v);
    if (std::abs(e.conductance() - target) > 1e-9 * target) {
      in.bobkov_measures = false;
    }
  }
  if (g.edge_count() == 0) in.max_length = 1.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.measure(v) != 1.0) in.unit_measures = false;
  }
  return in;
}

double dodziuk_value(double iso_inf, double rho_sup) {
  if (!(rho_sup > 0.0)) return 0.0;
  return iso_inf * iso_inf / (4.0 * rho_sup);
}

double mohar_value(double iso_inf, double rho_sup) {
  const double radicand = std::max(0.0, 4.0 * rho_sup * rho_sup -
                                            iso_inf * iso_inf);
  // 2r - sqrt(4r^2 - I^2) written without cancellation.
  const double denom = 2.0 * rho_sup + std::sqrt(radicand);
  return denom > 0.0 ? iso_inf * iso_inf / denom : 0.0;
}

double alon_value(double c, double max_length) {
  if (!(c > 0.0)) return 0.0;
  const double c2 = c * c;
  const double fl = std::floor(c);
  const double plain = c2 / (2.0 * c2 + 4.0);
  const double refined = c2 / (4.0 + 2.0 * fl + 2.0 * (c - fl) * (c - fl));
  return std::max(plain, refined) / max_length;
}

double bobkov_value(double c) {
  if (!(c > 0.0)) return 0.0;
  return c * c * (2.0 + c) / (6.0 + 6.0 * c + 2.0 * c * c);
}

BoundEntry dodziuk_bound(const BoundInputs& in) {
  BoundEntry b{"dodziuk", 0.0, true, ""};
  if (std::isinf(in.iso_inf)) {
    b.applicable = false;
    b.reason = "no admissible set with positive edge measure";
    return b;
  }
  b.value = dodziuk_value(in.iso_inf, in.rho_sup);
  return b;
}

BoundEntry mohar_bound(const BoundInputs& in) {
  BoundEntry b{"mohar", 0.0, true, ""};
  if (!in.unit_lengths) {
    b.applicable = false;
    b.reason = "edge lengths are not all 1";
    return b;
  }
  if (std::isinf(in.iso_inf)) {
    b.applicable = false;
    b.reason = "no admissible set with positive edge measure";
    return b;
  }
  b.value = mohar_value(in.iso_inf, in.rho_sup);
  return b;
}

BoundEntry alon_bound(const BoundInputs& in) {
  BoundEntry b{"alon", 0.0, true, ""};
  if (!in.unit_measures) {
    b.applicable = false;
    b.reason = "vertex measures and edge weights are not all 1";
    return b;
  }
  if (std::isinf(in.c)) {
    b.applicable = false;
    b.reason = "no admissible vertex set";
    return b;
  }
  b.value = alon_value(in.c, in.max_length);
  return b;
}

BoundEntry bobkov_bound(const BoundInputs& in) {
  BoundEntry b{"bobkov", 0.0, true, ""};
  if (!in.bobkov_measures) {
    b.applicable = false;
    b.reason = "a_e/l_e differs from V(u)+V(v)";
    return b;
  }
  if (std::isinf(in.c)) {
    b.applicable = false;
    b.reason = "no admissible vertex set";
    return b;
  }
  b.value = bobkov_value(in.c);
  return b;
}

bool BoundReport::sound() const {
  return std::all_of(bounds.begin(), bounds.end(), [&](const BoundEntry& b) {
    return !b.applicable || b.value <= lambda + kBoundSlack;
  });
}

BoundReport bound_report(const WeightedGraph& g, Mode mode,
                         const EnumerationLimits& limits) {
  BoundReport r;
  r.mode = mode;
  r.inputs = bound_inputs(g, mode, limits);
  r.lambda = true_lambda(g, mode);
  r.bounds = {dodziuk_bound(r.inputs), mohar_bound(r.inputs),
              alon_bound(r.inputs), bobkov_bound(r.inputs)};
  if (mode == Mode::dirichlet && has_edgeless_interior_vertex(g)) {
    for (auto& b : r.bounds) {
      if (!b.applicable) continue;
      b.applicable = false;
      b.reason = "interior vertex without incident edges";
    }
  }
  return r;
}

EdgeField AlonField::values() const {
  EdgeField out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    out[i] = boost::rational_cast<double>(X[i]);
  }
  return out;
}

Rational certified_magnification(const WeightedGraph& g,
                                 std::span<const int> A) {
  const auto set = checked_source_set(g, A);
  if (set.empty()) return Rational(0);
  bool found = false;
  Rational best(0);
  walk_subsets(
      g, set, [](int) { return 1LL; },
      [&](long long gamma, long long mass) {
        const Rational c = Rational(gamma, mass) - 1;
        if (!found || c < best) best = c;
        found = true;
      });
  return best;
}

AlonField alon_field(const WeightedGraph& g, std::span<const int> A) {
  return alon_field(g, A, certified_magnification(g, A));
}

AlonField alon_field(const WeightedGraph& g, std::span<const int> A,
                     Rational c) {
  require_unit_measures(g);
  AlonField out;
  out.A = checked_source_set(g, A);
  out.c = c;
  out.X.assign(g.edge_count(), Rational(0));
  const int n = g.vertex_count();
  const int na = static_cast<int>(out.A.size());
  const Rational one(1);
  if (c < Rational(-1)) throw InputError("c must be at least -1");

  if (na > 0) {
    const int s = 0;
    const int t = 1;
    auto b1 = [](int i) { return 2 + i; };
    auto b2 = [na](int v) { return 2 + na + v; };
    MaxFlow<Rational> net(2 + na + n);
    for (int i = 0; i < na; ++i) net.add_arc(s, b1(i), one + c);
    std::vector<NetworkArc> arcs;
    for (int i = 0; i < na; ++i) {
      const int v = out.A[i];
      net.add_arc(b1(i), b2(v), one);
      for (int e : g.incident(v)) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) continue;
        const int w = ed.other(v);
        arcs.push_back({net.add_arc(b1(i), b2(w), one), e, ed.u == v});
      }
    }
    for (int v = 0; v < n; ++v) net.add_arc(b2(v), t, one);
    const Rational value = net.solve(s, t);
    if (value != (one + c) * Rational(na)) {
      throw std::runtime_error(
          "flow network cannot carry (1+c)|A|: c exceeds the magnification of "
          "A");
    }
    // X is the reversed net flow so that -div X measures what A emits.
    for (const auto& a : arcs) {
      const Rational f = net.flow(a.arc);
      out.X[a.edge] += a.forward ? -f : f;
    }
  }

  auto& cond = out.conditions;
  std::vector<Rational> neg_div(n, Rational(0));
  std::vector<Rational> absorbed(n, Rational(0));
  std::vector<Rational> emitted(n, Rational(0));
  std::vector<Rational> sq(n, Rational(0));
  std::vector<double> sq_len(n, 0.0);
  cond.bounded = true;
  double max_len = 0.0;
  bool unit_len = true;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    max_len = std::max(max_len, e.length);
    if (e.length != 1.0) unit_len = false;
    if (e.is_loop()) continue;
    const Rational x = out.X[i];
    if (abs(x) > one) cond.bounded = false;
    neg_div[e.u] -= x;
    neg_div[e.v] += x;
    // Network flow along u->v is -x.
    if (x < Rational(0)) {
      emitted[e.u] -= x;
      absorbed[e.v] -= x;
    } else {
      emitted[e.v] += x;
      absorbed[e.u] += x;
    }
    sq[e.u] += x * x;
    sq[e.v] += x * x;
    const double xd = boost::rational_cast<double>(x);
    sq_len[e.u] += e.length * xd * xd;
    sq_len[e.v] += e.length * xd * xd;
  }
  if (g.edge_count() == 0) max_len = 1.0;
  std::vector<char> in_a(n, 0);
  for (int v : out.A) in_a[v] = 1;
  cond.source_gain = cond.outside_loss = cond.inflow = cond.outflow = true;
  for (int v = 0; v < n; ++v) {
    if (in_a[v]) {
      if (neg_div[v] < c) cond.source_gain = false;
      if (emitted[v] > one + c) cond.outflow = false;
    } else {
      if (neg_div[v] > Rational(0)) cond.outside_loss = false;
      if (emitted[v] != Rational(0)) cond.outflow = false;
    }
    if (absorbed[v] > one) cond.inflow = false;
  }

  // Energy bound: sup_v sum_{e at v} l_e |X_e|^2 / 2 <= (2+[c]+{c}^2) sup l / 2.
  const long long fl = floor_of(c);
  const Rational frac = c - Rational(fl);
  const Rational limit_units = Rational(2 + fl) + frac * frac;
  cond.energy_limit = boost::rational_cast<double>(limit_units) * max_len / 2.0;
  cond.energy = true;
  cond.energy_rho = 0.0;
  for (int v = 0; v < n; ++v) {
    cond.energy_rho = std::max(cond.energy_rho, sq_len[v] / 2.0);
    if (unit_len) {
      if (sq[v] > limit_units) cond.energy = false;
    } else if (sq_len[v] / 2.0 > cond.energy_limit * (1.0 + 1e-12)) {
      cond.energy = false;
    }
  }
  return out;
}

double certified_weighted_magnification(const WeightedGraph& g,
                                        std::span<const int> A) {
  const auto set = checked_source_set(g, A);
  if (set.empty()) return 0.0;
  double best = kInfinity;
  walk_subsets(
      g, set, [&](int v) { return g.measure(v); },
      [&](double gamma, double mass) {
        best = std::min(best, std::max(gamma, 0.0) / mass - 1.0);
      });
  return best;
}

WeightedAlonField weighted_alon_field(const WeightedGraph& g,
                                      std::span<const int> A) {
  WeightedAlonField out;
  out.A = checked_source_set(g, A);
  out.c = certified_weighted_magnification(g, A);
  out.X.assign(g.edge_count(), 0.0);
  const int n = g.vertex_count();
  const int na = static_cast<int>(out.A.size());
  const double c = out.c;
  double scale = 0.0;
  for (int v = 0; v < n; ++v) scale = std::max(scale, g.measure(v));
  const double tol = 1e-9 * (1.0 + c) * scale;

  std::vector<NetworkArc> arcs;
  if (na > 0) {
    const int s = 0;
    const int t = 1;
    auto b1 = [](int i) { return 2 + i; };
    auto b2 = [na](int v) { return 2 + na + v; };
    MaxFlow<double> net(2 + na + n);
    double demand = 0.0;
    for (int i = 0; i < na; ++i) {
      net.add_arc(s, b1(i), (1.0 + c) * g.measure(out.A[i]));
      demand += (1.0 + c) * g.measure(out.A[i]);
    }
    for (int i = 0; i < na; ++i) {
      const int v = out.A[i];
      net.add_arc(b1(i), b2(v), g.measure(v));
      for (int e : g.incident(v)) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) continue;
        const int w = ed.other(v);
        arcs.push_back({net.add_arc(b1(i), b2(w), g.measure(w)), e, ed.u == v});
      }
    }
    for (int v = 0; v < n; ++v) net.add_arc(b2(v), t, g.measure(v));
    const double value = net.solve(s, t, 1e-14 * scale);
    if (value < demand - tol * na) {
      throw std::runtime_error("weighted flow network cannot carry the demand");
    }
    for (const auto& a : arcs) {
      const auto& ed = g.edge(a.edge);
      const double f = net.flow(a.arc) / ed.a;
      out.X[a.edge] += a.forward ? -f : f;
    }
  }

  std::vector<double> neg_div(n, 0.0);
  std::vector<double> absorbed(n, 0.0);
  std::vector<double> emitted(n, 0.0);
  out.per_edge_out = true;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (e.is_loop()) continue;
    const double flux = e.a * out.X[i];  // network flow along v->u
    neg_div[e.u] -= flux;
    neg_div[e.v] += flux;
    const int sender = flux < 0.0 ? e.u : e.v;
    const int receiver = e.other(sender);
    emitted[sender] += std::abs(flux);
    absorbed[receiver] += std::abs(flux);
    if (std::abs(flux) > g.measure(receiver) + tol) out.per_edge_out = false;
  }
  std::vector<char> in_a(n, 0);
  for (int v : out.A) in_a[v] = 1;
  out.source_gain = out.outside_loss = out.inflow = out.outflow = true;
  for (int v = 0; v < n; ++v) {
    const double gain = neg_div[v] / g.measure(v);
    if (in_a[v]) {
      if (gain < c - tol) out.source_gain = false;
      if (emitted[v] > (1.0 + c) * g.measure(v) + tol) out.outflow = false;
    } else {
      if (gain > tol) out.outside_loss = false;
      if (emitted[v] > tol) out.outflow = false;
    }
    if (absorbed[v] > g.measure(v) + tol) out.inflow = false;
  }
  return out;
}

EdgeField gradient_direction(const WeightedGraph& g,
                             std::span<const double> f) {
  EdgeField X(g.edge_count(), 0.0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const double d = f[e.v] - f[e.u];
    X[i] = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
  }
  return X;
}

BasicTechniqueCheck basic_technique_check(const WeightedGraph& g,
                                          std::span<const double> f,
                                          std::span<const double> X) {
  BasicTechniqueCheck r;
  const double f2 = inner_vertex(g, f, f);
  if (!(f2 > 0.0)) throw InputError("basic technique needs a nonzero f");
  double flux = 0.0;
  double fx2 = 0.0;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const double b = f[e.u];
    const double c = f[e.v];
    if (!e.is_loop()) flux += e.a * X[i] * (c * c - b * b);
    fx2 += X[i] * X[i] * e.measure() * (b * b + b * c + c * c) / 3.0;
  }
  const double grad = grad_lp_norm(g, f, 2.0);
  r.q1 = flux / f2;
  r.q2 = std::sqrt(fx2 / f2);
  r.rayleigh = grad * grad / f2;
  r.holds = r.q1 <= 2.0 * r.q2 * std::sqrt(r.rayleigh) +
                        1e-12 * (1.0 + std::abs(r.q1));
  return r;
}

NodalRegionCheck nodal_region_check(const WeightedGraph& g,
                                    const EnumerationLimits& limits) {
  if (g.has_boundary()) throw InputError("nodal check needs a closed graph");
  if (g.vertex_count() < 2) {
    throw InputError("nodal check needs at least two vertices");
  }
  NodalRegionCheck out;
  const auto dec = spectral_decomposition(g, Mode::closed, 2);
  out.lambda2 = dec.eigenvalues[1];
  const auto& phi = dec.eigenfunctions[1];
  double scale = 0.0;
  for (double x : phi) scale = std::max(scale, std::abs(x));
  const double zero = 1e-10 * scale;
  std::vector<int> pos;
  std::vector<int> neg;
  double mpos = 0.0;
  double mneg = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (phi[v] > zero) {
      pos.push_back(v);
      mpos += g.measure(v);
    } else if (phi[v] < -zero) {
      neg.push_back(v);
      mneg += g.measure(v);
    }
  }
  out.region = (neg.empty() || (!pos.empty() && mpos <= mneg)) ? pos : neg;
  auto bd = std::make_unique<bool[]>(g.vertex_count());
  std::fill_n(bd.get(), g.vertex_count(), true);
  for (int v : out.region) bd[v] = false;
  const auto region_graph = g.with_boundary(
      std::span<const bool>(bd.get(), static_cast<std::size_t>(g.vertex_count())));
  out.region_report = bound_report(region_graph, Mode::dirichlet, limits);
  const auto& rep = out.region_report;
  out.sound = rep.lambda <= out.lambda2 + kBoundSlack;
  for (const auto& b : rep.bounds) {
    if (b.applicable && b.value > out.lambda2 + kBoundSlack) out.sound = false;
  }
  return out;
}

}  // namespace graphcalc
