#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {

/// Edgewise-constant vector field: one signed value per stored edge, positive
/// meaning "points from edge.u to edge.v".
using EdgeField = std::vector<double>;

enum class Mode { closed, dirichlet };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

/// (Lap f)(v) = V(v)^-1 sum_{e={u,v}} a_e (f(v) - f(u)) / l_e at every vertex,
/// boundary included. Self-loops contribute nothing.
VertexValues laplacian_apply(const WeightedGraph& g, std::span<const double> f);

/// Vertex divergence of an edgewise-constant field. For X_e > 0 on u->v the
/// tail u gets +a_e X_e / V(u) and the head v gets -a_e X_e / V(v).
VertexValues divergence(const WeightedGraph& g, std::span<const double> field);

/// <f, h> in L^2(V).
double inner_vertex(const WeightedGraph& g, std::span<const double> f,
                    std::span<const double> h);

struct SpectralDecomposition {
  Mode mode = Mode::closed;
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Full-length vertex functions, orthonormal in L^2(V); zero on the
  /// boundary in dirichlet mode.
  std::vector<VertexValues> eigenfunctions;
  /// Vertices the operator acts on (all in closed mode, interior otherwise).
  std::vector<int> support;
};

/// Dense symmetric eigensolve of V^{1/2} M V^{-1/2}, M the Laplacian matrix on
/// the support. Eigenvectors are signed so their first non-negligible
/// coordinate is positive. `count` limits the number of pairs returned.
SpectralDecomposition spectral_decomposition(
    const WeightedGraph& g, Mode mode, std::optional<int> count = std::nullopt);

inline constexpr int kMaxDenseVertices = 2000;

struct OperatorNormReport {
  double L_sup = 0.0;
  /// Largest Dirichlet eigenvalue: the operator norm on a finite graph.
  double norm = 0.0;
  bool sandwich_holds = false;
};

OperatorNormReport operator_norm_report(const WeightedGraph& g);

}  // namespace graphcalc
