#pragma once

#include <limits>
#include <span>
#include <vector>

#include "graphcalc/graph.hpp"

namespace graphcalc {

/// Edgewise-linear functions are stored by their vertex values, indexed like
/// the graph's vertices. All norms below are exact for that representation.
using VertexValues = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Hoelder conjugate: 1 -> inf, inf -> 1.
double conjugate(double p);

/// (sum_v |f(v)|^p V(v))^(1/p); max |f(v)| for p = inf.
double lp_norm_vertex(const WeightedGraph& g, std::span<const double> f,
                      double p);

/// Exact L^p norm of the edgewise-linear extension against the edge measure.
/// For p = inf the sup is taken over the edges (and isolated vertices carry no
/// edge measure).
double lp_norm_edge(const WeightedGraph& g, std::span<const double> f, double p);

/// ||grad f||_p against the edge measure; |grad f| = |f(u)-f(v)|/l_e on e.
double grad_lp_norm(const WeightedGraph& g, std::span<const double> f,
                    double p);

/// sum_v f(v) V(v).
double integral_vertex(const WeightedGraph& g, std::span<const double> f);
/// Integral of the edgewise-linear extension against the edge measure.
double integral_edge(const WeightedGraph& g, std::span<const double> f);

/// ||fbar||_{2,E}^2 where fbar is the edgewise-constant endpoint average.
double averaged_edge_l2_squared(const WeightedGraph& g,
                                std::span<const double> f);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool contains(double t) const noexcept {
    return lo <= t && t <= hi;
  }
  [[nodiscard]] double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

/// The unique a minimizing ||f - a||_p for p > 1 (bisection), the midpoint of
/// the range for p = inf. Throws InputError for p <= 1.
double balance_point(const WeightedGraph& g, std::span<const double> f,
                     double p);

/// The set of minimizers of ||f - a||_1: the weighted-median interval.
Interval balance_interval_l1(const WeightedGraph& g, std::span<const double> f);

/// min_a ||f - a||_q for q in [1, inf].
double min_shift_norm(const WeightedGraph& g, std::span<const double> f,
                      double q);

/// J = {t : f - t is split}. Signs are read at the vertices; a level set's
/// measure equals its vertex mass since V is supported on vertices.
Interval split_interval(const WeightedGraph& g, std::span<const double> f);
bool is_split(const WeightedGraph& g, std::span<const double> f);

/// Relative tolerance used when comparing sign-set masses against V(G)/2.
inline constexpr double kSplitTolerance = 1e-12;

/// Boundary area of the super-level sets {f > t} as a step function of t.
struct LevelSetSweep {
  /// Sorted distinct vertex values.
  std::vector<double> breakpoints;
  /// areas[i] is the constant area on (breakpoints[i], breakpoints[i+1]).
  std::vector<double> areas;
  /// Area of edges crossed strictly at t = breakpoints[i].
  std::vector<double> breakpoint_areas;

  /// sum_e a_e over edges whose open value range contains t.
  [[nodiscard]] double area_at(double t) const;
  /// Integral of the area over t; equals ||grad f||_1.
  [[nodiscard]] double integral() const;
};

LevelSetSweep coarea(const WeightedGraph& g, std::span<const double> f);

/// True when f vanishes on the boundary vertices.
bool is_dirichlet(const WeightedGraph& g, std::span<const double> f);

}  // namespace graphcalc
