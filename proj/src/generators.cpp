#include "graphcalc/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace graphcalc {

namespace {

void require_count(int n, const char* what) {
  if (n < 1) throw InputError(std::string(what) + " needs n >= 1");
}

std::vector<VertexSpec> numbered(int n, int first) {
  std::vector<VertexSpec> vs;
  vs.reserve(n);
  for (int i = 0; i < n; ++i) vs.push_back({std::to_string(first + i), 1.0, false});
  return vs;
}

}  // namespace

WeightedGraph path(int n, bool first_boundary, bool last_boundary) {
  require_count(n, "path");
  auto vs = numbered(n, 1);
  if (first_boundary) vs.front().boundary = true;
  if (last_boundary) vs.back().boundary = true;
  std::vector<EdgeSpec> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({vs[i].id, vs[i + 1].id});
  return WeightedGraph::build(std::move(vs), es);
}

WeightedGraph cycle(int n) {
  require_count(n, "cycle");
  auto vs = numbered(n, 0);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) es.push_back({vs[i].id, vs[(i + 1) % n].id});
  return WeightedGraph::build(std::move(vs), es);
}

WeightedGraph complete(int n) {
  require_count(n, "complete");
  auto vs = numbered(n, 0);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.push_back({vs[i].id, vs[j].id});
  }
  return WeightedGraph::build(std::move(vs), es);
}

WeightedGraph hypercube(int d) {
  if (d < 1 || d > 16) throw InputError("hypercube needs 1 <= d <= 16");
  const int n = 1 << d;
  std::vector<VertexSpec> vs;
  for (int x = 0; x < n; ++x) {
    std::string id(d, '0');
    for (int b = 0; b < d; ++b) {
      if (x >> (d - 1 - b) & 1) id[b] = '1';
    }
    vs.push_back({id, 1.0, false});
  }
  std::vector<EdgeSpec> es;
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) {
      const int y = x ^ (1 << b);
      if (x < y) es.push_back({vs[x].id, vs[y].id});
    }
  }
  return WeightedGraph::build(std::move(vs), es);
}

WeightedGraph radial_graph(int n, double nu) {
  if (n < 2) throw InputError("radial graph needs n >= 2");
  if (!(nu >= 1.0) || std::isinf(nu)) {
    throw InputError("radial graph needs a finite nu >= 1");
  }
  auto vs = numbered(n, 1);
  vs.back().boundary = true;
  std::vector<EdgeSpec> es;
  for (int i = 1; i < n; ++i) {
    es.push_back({vs[i - 1].id, vs[i].id, std::pow(i, nu - 1.0), 1.0});
  }
  return natural_measure(WeightedGraph::build(std::move(vs), es));
}

DoubledGraph doubled_radial(int n, double nu) {
  return double_graph(radial_graph(n, nu));
}

VertexValues log_test_function(int n, int m) {
  if (m < 1) throw InputError("log test function needs m >= 1");
  if (m > n) throw InputError("log test function needs m <= n");
  VertexValues f(n, 0.0);
  for (int i = 1; i <= m; ++i) f[i - 1] = std::log(static_cast<double>(m) / i);
  return f;
}

VertexValues odd_extension(const DoubledGraph& d, std::span<const double> f) {
  if (f.size() != d.plus.size()) throw InputError("function size mismatch");
  VertexValues out(d.graph.vertex_count(), 0.0);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (d.plus[v] == d.minus[v]) {
      out[d.plus[v]] = f[v];
    } else {
      out[d.plus[v]] = f[v];
      out[d.minus[v]] = -f[v];
    }
  }
  return out;
}

double log_gradient_sum(int m, double nu, double p) {
  double s = 0.0;
  for (int i = 1; i < m; ++i) {
    s += std::pow(std::log1p(1.0 / i), p) * std::pow(i, nu - 1.0);
  }
  return s;
}

VertexValues ClassicalRadial::lift(std::span<const double> f) const {
  if (static_cast<int>(f.size()) != quotient.graph.vertex_count()) {
    throw InputError("function size mismatch");
  }
  VertexValues out(projection.size());
  for (std::size_t v = 0; v < projection.size(); ++v) out[v] = f[projection[v]];
  return out;
}

ClassicalRadial classical_radial(int n, double nu, long long m) {
  if (n < 2) throw InputError("classical radial graph needs n >= 2");
  if (m < 1) throw InputError("classical radial graph needs m >= 1");
  if (!(nu >= 1.0) || std::isinf(nu)) {
    throw InputError("classical radial graph needs a finite nu >= 1");
  }
  ClassicalRadial out;
  auto& V = out.level_sizes;
  V.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    V[i - 1] = static_cast<long long>(std::floor(m * std::pow(i, nu - 1.0)));
  }
  // alt(i) = V(i) - V(i-1) + V(i-2) - ...
  std::vector<long long> alt(n, 0);
  for (int i = 1; i < n; ++i) alt[i - 1] = V[i - 1] - (i > 1 ? alt[i - 2] : 0);
  V[n - 1] = 2 * alt[n - 2];
  for (int i = 0; i < n; ++i) {
    if (V[i] < 1) throw InputError("classical radial graph has an empty level");
    if (i > 0 && i < n - 1 && V[i] < V[i - 1]) {
      throw InputError("level sizes must be non-decreasing");
    }
  }

  // E(i) = l alt(i) / (V(i) V(i+1)); l clears every denominator.
  long long ell = 1;
  std::vector<long long> num(n - 1);
  std::vector<long long> den(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const long long d = V[i] * V[i + 1];
    const long long g = std::gcd(alt[i], d);
    num[i] = alt[i] / g;
    den[i] = d / g;
    if (num[i] < 1) throw InputError("classical radial graph has no edges");
    ell = std::lcm(ell, den[i]);
    if (ell > kClassicalMaxRegularity) {
      throw InputError("no regular realization within the multiplier cap");
    }
  }
  out.multiplicity.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) out.multiplicity[i] = ell / den[i] * num[i];
  out.regularity = ell;

  long long total = V[n - 1];
  for (int i = 0; i + 1 < n; ++i) total += 2 * V[i];
  if (total > kClassicalMaxVertices) {
    throw InputError("classical radial graph exceeds the vertex cap");
  }

  // Quotient: weighted path with V(i) and a = E(i) V(i) V(i+1), halved
  // measure on the glued level so that doubling restores V(n).
  {
    std::vector<VertexSpec> vs;
    for (int i = 0; i < n; ++i) {
      vs.push_back({std::to_string(i + 1),
                    i + 1 == n ? V[i] / 2.0 : static_cast<double>(V[i]),
                    i + 1 == n});
    }
    std::vector<EdgeSpec> es;
    for (int i = 0; i + 1 < n; ++i) {
      es.push_back({vs[i].id, vs[i + 1].id,
                    static_cast<double>(out.multiplicity[i] * V[i] * V[i + 1]),
                    1.0});
    }
    out.quotient = double_graph(WeightedGraph::build(std::move(vs), es));
  }

  std::vector<VertexSpec> vs;
  // members[side][level] lists classical vertex ids; the glued level is shared.
  std::vector<std::vector<std::vector<std::string>>> members(
      2, std::vector<std::vector<std::string>>(n));
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < n; ++i) {
      const bool glued = i + 1 == n;
      if (glued && side == 1) {
        members[1][i] = members[0][i];
        continue;
      }
      const int q = side == 0 ? out.quotient.plus[i] : out.quotient.minus[i];
      for (long long j = 0; j < V[i]; ++j) {
        std::string id = std::to_string(i + 1) + (glued ? "" : (side ? "-" : "+")) +
                         ":" + std::to_string(j);
        members[side][i].push_back(id);
        vs.push_back({id, 1.0, false});
        out.projection.push_back(q);
      }
    }
  }
  std::vector<EdgeSpec> es;
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i + 1 < n; ++i) {
      for (const auto& x : members[side][i]) {
        for (const auto& y : members[side][i + 1]) {
          for (long long k = 0; k < out.multiplicity[i]; ++k) {
            es.push_back({x, y});
          }
        }
      }
    }
  }
  out.graph = WeightedGraph::build(std::move(vs), es);
  return out;
}

}  // namespace graphcalc
