#include "graphcalc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace graphcalc {

namespace {

void require_positive(double x, const char* what, std::string_view where) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InputError(std::string(what) + " must be positive and finite (" +
                     std::string(where) + ")");
  }
}

}  // namespace

WeightedGraph WeightedGraph::build(std::vector<VertexSpec> vertices,
                                   const std::vector<EdgeSpec>& edges) {
  WeightedGraph g;
  g.ids_.reserve(vertices.size());
  for (auto& spec : vertices) {
    if (g.by_id_.contains(spec.id)) {
      throw InputError("duplicate vertex id '" + spec.id + "'");
    }
    require_positive(spec.measure, "vertex measure", spec.id);
    g.by_id_.emplace(spec.id, static_cast<int>(g.ids_.size()));
    g.measure_.push_back(spec.measure);
    g.boundary_.push_back(spec.boundary ? 1 : 0);
    g.ids_.push_back(std::move(spec.id));
  }
  g.incident_.resize(g.ids_.size());
  g.edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    const auto u = g.find(spec.u);
    const auto v = g.find(spec.v);
    if (!u || !v) {
      throw InputError("edge references unknown vertex '" +
                       (u ? spec.v : spec.u) + "'");
    }
    const std::string where = spec.u + "-" + spec.v;
    require_positive(spec.a, "edge weight", where);
    require_positive(spec.length, "edge length", where);
    const int e = static_cast<int>(g.edges_.size());
    g.edges_.push_back(Edge{*u, *v, spec.a, spec.length});
    g.incident_[*u].push_back(e);
    if (*v != *u) g.incident_[*v].push_back(e);
  }
  return g;
}

std::optional<int> WeightedGraph::find(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

int WeightedGraph::index(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw InputError("unknown vertex id '" + std::string(id) + "'");
}

bool WeightedGraph::has_boundary() const noexcept {
  return std::any_of(boundary_.begin(), boundary_.end(),
                     [](char b) { return b != 0; });
}

std::vector<int> WeightedGraph::interior() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (!boundary_[v]) out.push_back(v);
  }
  return out;
}

double WeightedGraph::total_measure() const noexcept {
  return std::accumulate(measure_.begin(), measure_.end(), 0.0);
}

double WeightedGraph::total_edge_measure() const noexcept {
  double s = 0.0;
  for (const auto& e : edges_) s += e.measure();
  return s;
}

std::vector<VertexSpec> WeightedGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(ids_.size());
  for (int v = 0; v < vertex_count(); ++v) {
    out.push_back({ids_[v], measure_[v], boundary_[v] != 0});
  }
  return out;
}

std::vector<EdgeSpec> WeightedGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back({ids_[e.u], ids_[e.v], e.a, e.length});
  }
  return out;
}

WeightedGraph WeightedGraph::with_measures(std::span<const double> m) const {
  if (static_cast<int>(m.size()) != vertex_count()) {
    throw InputError("measure vector size mismatch");
  }
  auto specs = vertex_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i].measure = m[i];
  return build(std::move(specs), edge_specs());
}

WeightedGraph WeightedGraph::with_boundary(std::span<const bool> b) const {
  if (static_cast<int>(b.size()) != vertex_count()) {
    throw InputError("boundary vector size mismatch");
  }
  WeightedGraph g = *this;
  for (std::size_t i = 0; i < b.size(); ++i) g.boundary_[i] = b[i] ? 1 : 0;
  return g;
}

HalfDegreeStats half_degrees(const WeightedGraph& g) {
  HalfDegreeStats s;
  const int n = g.vertex_count();
  s.rho.assign(n, 0.0);
  for (const auto& e : g.edges()) {
    s.rho[e.u] += e.measure() / 2.0;
    if (!e.is_loop()) s.rho[e.v] += e.measure() / 2.0;
  }
  for (int v = 0; v < n; ++v) s.rho[v] /= g.measure(v);
  if (n > 0) {
    const auto [lo, hi] = std::minmax_element(s.rho.begin(), s.rho.end());
    s.rho_inf = *lo;
    s.rho_sup = *hi;
  }
  return s;
}

WeightedGraph natural_measure(const WeightedGraph& g) {
  std::vector<double> m(g.vertex_count(), 0.0);
  for (const auto& e : g.edges()) {
    m[e.u] += e.measure() / 2.0;
    if (!e.is_loop()) m[e.v] += e.measure() / 2.0;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (m[v] <= 0.0) {
      throw InputError("natural measure undefined: vertex '" + g.id(v) +
                       "' has no incident edge");
    }
  }
  return g.with_measures(m);
}

WeightedGraph from_markov_chain(std::span<const double> pi,
                                std::span<const double> kernel,
                                std::span<const std::string> ids) {
  const std::size_t n = pi.size();
  if (kernel.size() != n * n) {
    throw InputError("transition matrix must be n x n");
  }
  if (!ids.empty() && ids.size() != n) {
    throw InputError("id list size mismatch");
  }
  auto K = [&](std::size_t i, std::size_t j) { return kernel[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (K(i, j) < 0.0) throw InputError("negative transition probability");
      row += K(i, j);
    }
    if (std::abs(row - 1.0) > kReversibilityTolerance) {
      throw InputError("transition matrix rows must sum to 1");
    }
  }
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back({ids.empty() ? std::to_string(i) : ids[i], pi[i], false});
  }
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double fwd = pi[i] * K(i, j);
      const double bwd = pi[j] * K(j, i);
      const double scale = std::max(std::abs(fwd), std::abs(bwd));
      if (std::abs(fwd - bwd) > kReversibilityTolerance * scale) {
        throw InputError("chain is not reversible at (" + vs[i].id + ", " +
                         vs[j].id + ")");
      }
      if (fwd > 0.0) es.push_back({vs[i].id, vs[j].id, fwd, 1.0});
    }
  }
  return WeightedGraph::build(std::move(vs), es);
}

DoubledGraph double_graph(const WeightedGraph& g) {
  if (!g.has_boundary()) {
    throw InputError("cannot double a graph with empty boundary");
  }
  const int n = g.vertex_count();
  DoubledGraph d;
  d.plus.assign(n, -1);
  d.minus.assign(n, -1);
  std::vector<VertexSpec> vs;
  for (int v = 0; v < n; ++v) {
    d.plus[v] = static_cast<int>(vs.size());
    if (g.is_boundary(v)) {
      d.minus[v] = d.plus[v];
      vs.push_back({g.id(v), 2.0 * g.measure(v), false});
    } else {
      vs.push_back({g.id(v), g.measure(v), false});
    }
  }
  for (int v = 0; v < n; ++v) {
    if (g.is_boundary(v)) continue;
    d.minus[v] = static_cast<int>(vs.size());
    vs.push_back({g.id(v) + "'", g.measure(v), false});
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) {
    es.push_back({vs[d.plus[e.u]].id, vs[d.plus[e.v]].id, e.a, e.length});
  }
  for (const auto& e : g.edges()) {
    es.push_back({vs[d.minus[e.u]].id, vs[d.minus[e.v]].id, e.a, e.length});
  }
  d.involution.assign(vs.size(), -1);
  for (int v = 0; v < n; ++v) {
    d.involution[d.plus[v]] = d.minus[v];
    d.involution[d.minus[v]] = d.plus[v];
  }
  d.graph = WeightedGraph::build(std::move(vs), es);
  return d;
}

LStats l_stats(const WeightedGraph& g, int jmax) {
  if (jmax < 0) throw InputError("jmax must be non-negative");
  const int n = g.vertex_count();
  LStats s;
  s.L.assign(n, 0.0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    s.L[e.u] += e.conductance();
    s.L[e.v] += e.conductance();
  }
  for (int v = 0; v < n; ++v) {
    s.L[v] /= g.measure(v);
    if (!g.is_boundary(v)) s.L_sup = std::max(s.L_sup, s.L[v]);
  }

  s.L_j.assign(jmax + 1, std::vector<double>(n, 0.0));
  std::vector<int> dist(n);
  for (int v = 0; v < n; ++v) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (dist[x] >= jmax) continue;
      for (int e : g.incident(x)) {
        const int y = g.edge(e).other(x);
        if (dist[y] >= 0 || g.is_boundary(y)) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    for (int u = 0; u < n; ++u) {
      if (dist[u] < 0 || g.is_boundary(u)) continue;
      for (int j = dist[u]; j <= jmax; ++j) {
        s.L_j[j][v] = std::max(s.L_j[j][v], s.L[u]);
      }
    }
  }
  return s;
}

}  // namespace graphcalc
