#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/operators.hpp"
#include "graphcalc/sobolev.hpp"

namespace graphcalc {

struct FuzzOptions {
  int min_vertices = 1;
  int max_vertices = 30;
  /// Each vertex is boundary with this probability.
  double boundary_probability = 0.0;
  bool unit_lengths = false;
  /// V == a == 1 everywhere.
  bool traditional = false;
  bool allow_loops = true;
};

/// Connected random graph: a random spanning tree plus extra edges (parallel
/// edges and self-loops included), ids "v0".."v{n-1}".
WeightedGraph random_graph(std::mt19937_64& rng, const FuzzOptions& options);

/// Random vertex values drawn from one of several shapes (Gaussian, sparse,
/// indicator-like, heavy-tailed), zero on the boundary when `dirichlet`.
VertexValues random_function(std::mt19937_64& rng, const WeightedGraph& g,
                             bool dirichlet);

/// Random edgewise-constant field.
EdgeField random_field(std::mt19937_64& rng, const WeightedGraph& g);

/// |lhs - rhs| / max(1, |lhs|, |rhs|).
double relative_residual(double lhs, double rhs);

/// Residuals of the exact identities for one graph, two functions and a
/// field. Identities that do not apply are reported as 0 and flagged: the
/// rho identities need a loop-free graph (a loop counts once in rho but
/// fully in E), and the last two of them also need unit lengths.
struct IdentityResiduals {
  double edge_integral = 0.0;    // int f dE = int rho f dV
  double mohar = 0.0;            // ||f||_{2,E}^2 + ||grad f||^2/6 = int rho f^2
  double averaged = 0.0;         // ||fbar||_{2,E}^2 + ||grad f||^2/4 = int rho f^2
  bool loop_free = false;
  bool unit_lengths = false;
  double laplacian_symmetric = 0.0;  // <Lap f, h> = <f, Lap h>
  double green = 0.0;                // int f div X dV = -int grad f . X dE
  double dirichlet_form = 0.0;       // <Lap f, h> = int grad f . grad h dE
  double coarea = 0.0;               // int A(t) dt = ||grad f||_1
  [[nodiscard]] double max() const;
};

IdentityResiduals identity_residuals(const WeightedGraph& g,
                                     std::span<const double> f,
                                     std::span<const double> h,
                                     std::span<const double> X);

/// Edgewise-constant gradient: (f(v) - f(u)) / l_e along the stored edge.
EdgeField gradient_field(const WeightedGraph& g, std::span<const double> f);

inline constexpr double kIdentityTolerance = 1e-12;

std::vector<std::string_view> suite_names();

struct SuiteOptions {
  double nu = 3.0;
  double p = 2.0;
  int trials = 100;
  std::uint64_t seed = 0;
  /// Overrides the mode chosen from the graph (dirichlet iff it has boundary).
  std::optional<Mode> mode;
  EnumerationLimits limits;
  /// Checked in addition to the random trials.
  std::optional<VertexValues> function;
};

struct SuiteReport {
  std::string suite;
  Mode mode = Mode::dirichlet;
  int trials = 0;
  int checks = 0;
  int failures = 0;
  /// Identity suites: largest relative residual.
  double max_residual = 0.0;
  /// Inequality suites: smallest lhs - rhs, relative to 1 + |rhs|.
  double min_margin = kInfinity;
  /// The check with the smallest margin.
  std::optional<InequalityCheck> worst;
  /// Constants the suite compared against, by name.
  std::vector<std::pair<std::string, double>> constants;
  [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Runs coarea, green, ff, sobolev, nash, trudinger or gennash on g.
SuiteReport run_suite(const WeightedGraph& g, std::string_view suite,
                      const SuiteOptions& options);

}  // namespace graphcalc
