#pragma once

#include <span>
#include <vector>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

/// Path on vertices "1".."n" with unit data; the end flags make vertex 1
/// and/or vertex n boundary.
WeightedGraph path(int n, bool first_boundary = false,
                   bool last_boundary = false);
/// Cycle on "0".."n-1". cycle(1) is a single self-loop, cycle(2) a double edge.
WeightedGraph cycle(int n);
/// Complete graph on "0".."n-1".
WeightedGraph complete(int n);
/// d-dimensional hypercube; vertex ids are the binary labels.
WeightedGraph hypercube(int d);

/// Path "1".."n" with E({i,i+1}) = i^{nu-1}, unit lengths, natural vertex
/// measure, and vertex n on the boundary.
WeightedGraph radial_graph(int n, double nu);
/// Double of radial_graph(n, nu).
DoubledGraph doubled_radial(int n, double nu);

/// f_m(i) = log(m/i) for i <= m and 0 beyond, on the vertices of
/// radial_graph(n, nu) (vertex "i" has index i-1).
VertexValues log_test_function(int n, int m);
/// The odd extension of f on a double: f on the positive copy, -f on the
/// negative copy, and f itself (zero for Dirichlet f) on the glued vertices.
VertexValues odd_extension(const DoubledGraph& d, std::span<const double> f);
/// sum_{i<m} log(1+1/i)^p i^{nu-1}: ||grad f_m||_p^p on radial_graph.
double log_gradient_sum(int m, double nu, double p);

/// Traditional graph realizing the doubled radial graph: level i < n holds
/// V(i) = floor(m i^{nu-1}) vertices on each side, the glued level holds
/// V(n) = 2[V(n-1) - V(n-2) + ...], and consecutive levels are joined by E(i)
/// parallel copies of the complete bipartite graph. `regularity` is the
/// common degree.
struct ClassicalRadial {
  WeightedGraph graph;
  /// Weighted double path whose quotient the classical graph realizes.
  DoubledGraph quotient;
  std::vector<long long> level_sizes;    // V(1..n)
  std::vector<long long> multiplicity;   // E(1..n-1)
  long long regularity = 0;
  /// quotient vertex of each classical vertex.
  std::vector<int> projection;

  /// Pulls a quotient function back to the classical graph.
  [[nodiscard]] VertexValues lift(std::span<const double> f) const;
};

inline constexpr long long kClassicalMaxRegularity = 10000;
inline constexpr long long kClassicalMaxVertices = 100000;

ClassicalRadial classical_radial(int n, double nu, long long m);

}  // namespace graphcalc
