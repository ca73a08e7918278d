#include "graphcalc/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <set>
#include <string>

#include "graphcalc/parallel.hpp"

namespace graphcalc {

std::string_view to_string(IsoVariant v) {
  switch (v) {
    case IsoVariant::open:
      return "open";
    case IsoVariant::tilde:
      return "tilde";
    case IsoVariant::tilde_prime:
      return "tilde-prime";
  }
  return "open";
}

IsoVariant parse_iso_variant(std::string_view s) {
  if (s == "open") return IsoVariant::open;
  if (s == "tilde") return IsoVariant::tilde;
  if (s == "tilde-prime" || s == "tilde_prime") return IsoVariant::tilde_prime;
  throw InputError("variant must be open, tilde or tilde-prime");
}

double iso_functional(IsoVariant variant, double nu, double area, double vmass,
                      double total) {
  switch (variant) {
    case IsoVariant::open: {
      const double q = conjugate(nu);
      return std::isinf(q) ? area : area / std::pow(vmass, 1.0 / q);
    }
    case IsoVariant::tilde: {
      const double m = std::min(vmass, total - vmass);
      return std::isinf(nu) ? area / m : area * std::pow(m, 1.0 / nu - 1.0);
    }
    case IsoVariant::tilde_prime: {
      const double lo = std::min(vmass, total - vmass);
      const double hi = std::max(vmass, total - vmass);
      if (std::isinf(nu)) return area / lo;
      // (lo^{1-nu} + hi^{1-nu})^{1/nu} = lo^{(1-nu)/nu} (1 + (hi/lo)^{1-nu})^{1/nu}
      return area * std::pow(lo, (1.0 - nu) / nu) *
             std::pow(1.0 + std::pow(hi / lo, 1.0 - nu), 1.0 / nu);
    }
  }
  return kInfinity;
}

namespace {

// Enumerates each connected subset exactly once: a subset is produced from its
// smallest vertex by include/exclude branching on a frontier of candidates.
class ConnectedEnumerator {
 public:
  ConnectedEnumerator(const WeightedGraph& g, std::span<const char> allowed,
                      const SubsetVisitor& visit)
      : g_(g),
        allowed_(allowed),
        visit_(visit),
        in_set_(g.vertex_count(), 0),
        blocked_(g.vertex_count(), 0),
        on_frontier_(g.vertex_count(), 0),
        neighbours_(g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!allowed_[v]) continue;
      for (int e : g.incident(v)) {
        const int u = g.edge(e).other(v);
        if (u != v && allowed_[u]) neighbours_[v].push_back(u);
      }
      auto& nb = neighbours_[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }

  void run_root(int root) {
    root_ = root;
    area_ = 0.0;
    mass_ = 0.0;
    add(root);
    std::vector<int> frontier = expand(root);
    recurse(frontier);
    for (int u : frontier) on_frontier_[u] = 0;
    remove(root);
  }

 private:
  void add(int v) {
    in_set_[v] = 1;
    members_.push_back(v);
    mass_ += g_.measure(v);
    for (int e : g_.incident(v)) {
      const auto& ed = g_.edge(e);
      if (ed.is_loop()) continue;
      area_ += in_set_[ed.other(v)] ? -ed.a : ed.a;
    }
  }

  void remove(int v) {
    for (int e : g_.incident(v)) {
      const auto& ed = g_.edge(e);
      if (ed.is_loop()) continue;
      area_ -= in_set_[ed.other(v)] ? -ed.a : ed.a;
    }
    mass_ -= g_.measure(v);
    members_.pop_back();
    in_set_[v] = 0;
  }

  std::vector<int> expand(int v) {
    std::vector<int> added;
    for (int u : neighbours_[v]) {
      if (u > root_ && !in_set_[u] && !blocked_[u] && !on_frontier_[u]) {
        on_frontier_[u] = 1;
        added.push_back(u);
      }
    }
    return added;
  }

  void recurse(std::vector<int>& frontier) {
    if (frontier.empty()) {
      visit_(members_, std::max(area_, 0.0), mass_);
      return;
    }
    const int v = frontier.back();
    frontier.pop_back();
    on_frontier_[v] = 0;

    add(v);
    std::vector<int> added = expand(v);
    std::vector<int> next = frontier;
    next.insert(next.end(), added.begin(), added.end());
    recurse(next);
    for (int u : added) on_frontier_[u] = 0;
    remove(v);

    blocked_[v] = 1;
    recurse(frontier);
    blocked_[v] = 0;

    frontier.push_back(v);
    on_frontier_[v] = 1;
  }

  const WeightedGraph& g_;
  std::span<const char> allowed_;
  const SubsetVisitor& visit_;
  std::vector<char> in_set_;
  std::vector<char> blocked_;
  std::vector<char> on_frontier_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<int> members_;
  int root_ = 0;
  double area_ = 0.0;
  double mass_ = 0.0;
};

std::vector<std::string> id_key(const WeightedGraph& g,
                                std::span<const int> vs) {
  std::vector<std::string> key;
  key.reserve(vs.size());
  for (int v : vs) key.push_back(g.id(v));
  std::sort(key.begin(), key.end());
  return key;
}

struct Candidate {
  double value = kInfinity;
  std::vector<int> members;
  double area = 0.0;
  double mass = 0.0;
  std::vector<std::string> key;
  bool set = false;

  // Strict total order on (value, key) so reductions are order-independent.
  bool offer(const WeightedGraph& g, double v, std::span<const int> m,
             double a, double ms) {
    if (set && v > value) return false;
    if (set && v == value) {
      auto k = id_key(g, m);
      if (!(k < key)) return false;
      key = std::move(k);
    } else {
      key = id_key(g, m);
    }
    value = v;
    members.assign(m.begin(), m.end());
    area = a;
    mass = ms;
    set = true;
    return true;
  }
};

void check_cap(int count, const EnumerationLimits& limits) {
  if (count > limits.max_vertices && !limits.force) {
    throw CapExceeded("enumeration over " + std::to_string(count) +
                      " vertices exceeds the cap of " +
                      std::to_string(limits.max_vertices) +
                      " (use --force to override)");
  }
}

}  // namespace

void for_each_connected_subset(const WeightedGraph& g,
                               std::span<const char> allowed,
                               const SubsetVisitor& visit) {
  ConnectedEnumerator en(g, allowed, visit);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (allowed[v]) en.run_root(v);
  }
}

IsoReport iso_constant(const WeightedGraph& g, double nu, IsoVariant variant,
                       const EnumerationLimits& limits) {
  if (!(nu >= 1.0)) throw InputError("nu must lie in [1, inf]");
  if (variant != IsoVariant::open && g.has_boundary()) {
    throw InputError("tilde variants need a closed graph (empty boundary)");
  }
  const auto interior = g.interior();
  check_cap(static_cast<int>(interior.size()), limits);

  std::vector<char> allowed(g.vertex_count(), 0);
  for (int v : interior) allowed[v] = 1;
  const double total = g.total_measure();
  const std::size_t n_interior = interior.size();

  IsoReport report;
  report.nu = nu;
  report.variant = variant;

  Candidate best;
  long long examined = 0;
  std::mutex merge;
  run_workers(static_cast<unsigned>(interior.size()), [&](unsigned w,
                                                          unsigned total_w) {
    Candidate local;
    long long count = 0;
    SubsetVisitor visit = [&](std::span<const int> m, double area,
                              double vmass) {
      ++count;
      if (m.size() == 1 && g.incident(m[0]).empty()) return;  // E(S) = 0
      if (variant != IsoVariant::open && m.size() == n_interior) return;
      const double value = iso_functional(variant, nu, area, vmass, total);
      local.offer(g, value, m, area, vmass);
    };
    ConnectedEnumerator en(g, allowed, visit);
    for (std::size_t i = w; i < interior.size(); i += total_w) {
      en.run_root(interior[i]);
    }
    std::lock_guard lock(merge);
    examined += count;
    if (local.set) local.set = best.offer(g, local.value, local.members,
                                          local.area, local.mass);
  });

  report.sets_examined = examined;
  if (best.set) {
    report.value = best.value;
    AdmissibleSet w{best.members, best.area, best.mass};
    std::sort(w.vertices.begin(), w.vertices.end());
    report.witness = std::move(w);
  }
  return report;
}

std::vector<int> neighbourhood(const WeightedGraph& g, std::span<const int> A) {
  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : A) in_a[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int e : g.incident(v)) {
      if (in_a[g.edge(e).other(v)]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

Magnification magnification(const WeightedGraph& g, Mode mode,
                            const EnumerationLimits& limits) {
  const auto interior = g.interior();
  const int n = static_cast<int>(interior.size());
  check_cap(n, limits);
  if (n > 40) throw CapExceeded("magnification enumerates 2^n subsets");

  // Neighbour lists include v itself only when v carries a self-loop.
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < n; ++i) {
    const int v = interior[i];
    for (int e : g.incident(v)) nb[i].push_back(g.edge(e).other(v));
    std::sort(nb[i].begin(), nb[i].end());
    nb[i].erase(std::unique(nb[i].begin(), nb[i].end()), nb[i].end());
  }
  const double half = 0.5 * g.total_measure() * (1.0 + kSplitTolerance);

  std::vector<int> touch(g.vertex_count(), 0);
  std::vector<char> in_a(n, 0);
  double gamma = 0.0;
  double mass = 0.0;
  int size = 0;

  Candidate best;
  std::vector<int> members;
  const unsigned long long steps = 1ull << n;
  for (unsigned long long k = 1; k < steps; ++k) {
    const int i = std::countr_zero(k);  // Gray code: flip bit i
    const int v = interior[i];
    if (in_a[i]) {
      in_a[i] = 0;
      --size;
      mass -= g.measure(v);
      for (int u : nb[i]) {
        if (--touch[u] == 0) gamma -= g.measure(u);
      }
    } else {
      in_a[i] = 1;
      ++size;
      mass += g.measure(v);
      for (int u : nb[i]) {
        if (touch[u]++ == 0) gamma += g.measure(u);
      }
    }
    if (size == 0) continue;
    if (mode == Mode::closed && mass > half) continue;
    const double c = std::max(gamma, 0.0) / mass - 1.0;
    if (best.set && c > best.value) continue;
    members.clear();
    for (int j = 0; j < n; ++j) {
      if (in_a[j]) members.push_back(interior[j]);
    }
    best.offer(g, c, members, gamma, mass);
  }

  Magnification out;
  if (best.set) {
    out.c = best.value;
    out.witness = best.members;
    out.gamma_mass = best.area;
    out.set_mass = best.mass;
  }
  return out;
}

double sobolev_quotient(const WeightedGraph& g, std::span<const double> f,
                        double nu) {
  if (!(nu >= 1.0)) throw InputError("nu must lie in [1, inf]");
  const double denom = lp_norm_vertex(g, f, conjugate(nu));
  if (!(denom > 0.0)) throw InputError("sobolev quotient of the zero function");
  return grad_lp_norm(g, f, 1.0) / denom;
}

CharacteristicApprox characteristic_approx(const WeightedGraph& g,
                                           std::span<const int> S,
                                           double eps) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : S) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    in_s[v] = 1;
  }
  auto vs = g.vertex_specs();
  std::vector<EdgeSpec> es;
  std::vector<double> f(g.vertex_count(), 0.0);
  for (int v = 0; v < g.vertex_count(); ++v) f[v] = in_s[v] ? 1.0 : 0.0;

  std::set<std::string> used;
  for (const auto& spec : vs) used.insert(spec.id);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    if (in_s[e.u] == in_s[e.v]) {
      es.push_back({g.id(e.u), g.id(e.v), e.a, e.length});
      continue;
    }
    if (!(eps < e.length)) {
      throw InputError("eps must be smaller than every crossing edge length");
    }
    const int inner = in_s[e.u] ? e.u : e.v;
    const int outer = e.other(inner);
    std::string id = g.id(inner) + "~" + g.id(outer) + "#" + std::to_string(i);
    while (used.contains(id)) id += "_";
    used.insert(id);
    vs.push_back({id, kSubdivisionMeasure, false});
    f.push_back(0.0);
    es.push_back({g.id(inner), id, e.a, eps});
    es.push_back({id, g.id(outer), e.a, e.length - eps});
  }
  return {WeightedGraph::build(std::move(vs), es), std::move(f)};
}

}  // namespace graphcalc
