#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace graphcalc {

/// Raised for malformed input: bad graph data, out-of-domain parameters,
/// unknown vertex ids. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VertexSpec {
  std::string id;
  double measure = 1.0;
  bool boundary = false;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  double a = 1.0;
  double length = 1.0;
};

struct Edge {
  int u = 0;
  int v = 0;
  double a = 1.0;
  double length = 1.0;

  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  /// Edge measure of the whole edge: a_e * l_e.
  [[nodiscard]] double measure() const noexcept { return a * length; }
  /// a_e / l_e, the coefficient the edge contributes to the Laplacian.
  [[nodiscard]] double conductance() const noexcept { return a / length; }
  [[nodiscard]] int other(int w) const noexcept { return w == u ? v : u; }
};

/// Finite weighted graph with a vertex measure, per-edge weights and lengths,
/// and a designated boundary vertex set. Multi-edges and self-loops are
/// allowed. Immutable once built; vertices are indexed densely in input order.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Validates and builds. Throws InputError on duplicate ids, unknown
  /// endpoints, or non-positive (or non-finite) measure, weight or length.
  static WeightedGraph build(std::vector<VertexSpec> vertices,
                             const std::vector<EdgeSpec>& edges);

  [[nodiscard]] int vertex_count() const noexcept {
    return static_cast<int>(ids_.size());
  }
  [[nodiscard]] int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }

  [[nodiscard]] const std::string& id(int v) const { return ids_.at(v); }
  [[nodiscard]] std::optional<int> find(std::string_view id) const;
  /// Like find() but throws InputError for an unknown id.
  [[nodiscard]] int index(std::string_view id) const;

  [[nodiscard]] double measure(int v) const { return measure_[v]; }
  [[nodiscard]] std::span<const double> measures() const noexcept {
    return measure_;
  }
  [[nodiscard]] bool is_boundary(int v) const { return boundary_[v] != 0; }
  [[nodiscard]] bool has_boundary() const noexcept;
  [[nodiscard]] std::vector<int> interior() const;

  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(int e) const { return edges_[e]; }
  /// Indices of the edges incident to v. A self-loop appears once.
  [[nodiscard]] std::span<const int> incident(int v) const {
    return incident_[v];
  }

  [[nodiscard]] double total_measure() const noexcept;
  [[nodiscard]] double total_edge_measure() const noexcept;

  [[nodiscard]] std::vector<VertexSpec> vertex_specs() const;
  [[nodiscard]] std::vector<EdgeSpec> edge_specs() const;

  /// Copy with new vertex measures (validated).
  [[nodiscard]] WeightedGraph with_measures(std::span<const double> m) const;
  /// Copy with a new boundary set.
  [[nodiscard]] WeightedGraph with_boundary(std::span<const bool> b) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> by_id_;
  std::vector<double> measure_;
  std::vector<char> boundary_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

struct HalfDegreeStats {
  std::vector<double> rho;
  double rho_inf = 0.0;
  double rho_sup = 0.0;
};

/// rho(v) = V(v)^-1 * sum_{e at v} E(e)/2; a self-loop counts once.
HalfDegreeStats half_degrees(const WeightedGraph& g);

/// Copy of g whose vertex measure makes it 2-regular (rho == 1).
/// Throws InputError when some vertex has no incident edge.
WeightedGraph natural_measure(const WeightedGraph& g);

/// Graph of a reversible Markov chain: V(u) = pi(u), unit lengths, one edge per
/// unordered pair {u,v} with K(u,v) > 0 and weight pi(u)K(u,v). `kernel` is
/// row-major n x n. Vertex ids are "0".."n-1" unless `ids` is given.
WeightedGraph from_markov_chain(std::span<const double> pi,
                                std::span<const double> kernel,
                                std::span<const std::string> ids = {});

inline constexpr double kReversibilityTolerance = 1e-9;

struct DoubledGraph {
  WeightedGraph graph;
  /// involution[v] is the mirror image of v; glued vertices are fixed.
  std::vector<int> involution;
  /// Index in `graph` of the positive / negative copy of each original vertex.
  std::vector<int> plus;
  std::vector<int> minus;
};

/// Two copies of g glued along its boundary; glued vertices lose their
/// boundary flag and get twice their measure. Throws if g has no boundary.
DoubledGraph double_graph(const WeightedGraph& g);

struct LStats {
  /// L(v) = V(v)^-1 * sum over non-loop edges at v of a_e / l_e.
  std::vector<double> L;
  /// sup of L over interior vertices (0 when the interior is empty).
  double L_sup = 0.0;
  /// L_j[j][v] = max of L over interior vertices within j steps of v,
  /// walking through interior vertices only.
  std::vector<std::vector<double>> L_j;
};

LStats l_stats(const WeightedGraph& g, int jmax);

}  // namespace graphcalc
