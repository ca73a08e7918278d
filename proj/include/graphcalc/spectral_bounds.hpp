#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "graphcalc/graph.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/operators.hpp"

namespace graphcalc {

using Rational = boost::rational<long long>;

inline constexpr double kBoundSlack = 1e-9;

/// First Dirichlet eigenvalue, or the second eigenvalue in closed mode.
double true_lambda(const WeightedGraph& g, Mode mode);

/// Graph data every bound formula draws on.
struct BoundInputs {
  Mode mode = Mode::dirichlet;
  /// I_inf in dirichlet mode, the tilde constant in closed mode.
  double iso_inf = 0.0;
  std::vector<int> iso_witness;
  /// Magnification measured with V (closed mode: V(A) <= V(G)/2).
  double c = 0.0;
  std::vector<int> c_witness;
  double rho_sup = 0.0;
  double max_length = 0.0;
  bool unit_lengths = false;
  /// V == 1 and a == 1 everywhere.
  bool unit_measures = false;
  /// a_e / l_e == V(u) + V(v) on every non-loop edge.
  bool bobkov_measures = false;
};

BoundInputs bound_inputs(const WeightedGraph& g, Mode mode,
                         const EnumerationLimits& limits = {});

double dodziuk_value(double iso_inf, double rho_sup);
double mohar_value(double iso_inf, double rho_sup);
/// max(c^2/(2c^2+4), c^2/(4+2[c]+2{c}^2)) / max_length.
double alon_value(double c, double max_length);
double bobkov_value(double c);

struct BoundEntry {
  std::string name;
  double value = 0.0;
  bool applicable = false;
  /// Why the bound does not apply; empty when it does.
  std::string reason;
};

BoundEntry dodziuk_bound(const BoundInputs& in);
BoundEntry mohar_bound(const BoundInputs& in);
BoundEntry alon_bound(const BoundInputs& in);
BoundEntry bobkov_bound(const BoundInputs& in);

struct BoundReport {
  Mode mode = Mode::dirichlet;
  double lambda = 0.0;
  BoundInputs inputs;
  std::vector<BoundEntry> bounds;

  /// Every applicable bound is <= lambda + kBoundSlack.
  [[nodiscard]] bool sound() const;
};

BoundReport bound_report(const WeightedGraph& g, Mode mode,
                         const EnumerationLimits& limits = {});

/// Field produced by the flow network on a source set A in the unit-measure
/// setting. Values are exact; X is oriented like the stored edges.
struct AlonField {
  std::vector<int> A;
  Rational c{0};
  std::vector<Rational> X;

  struct Conditions {
    bool bounded = false;       // |X_e| <= 1
    bool source_gain = false;   // -div X >= c on A
    bool outside_loss = false;  // -div X <= 0 off A
    bool inflow = false;        // absorbed flow <= 1 at every vertex
    bool outflow = false;       // emitted flow <= 1 + c on A, 0 elsewhere
    bool energy = false;        // rho_sup(G^{|X|^2}) <= (2+[c]+{c}^2) max l / 2
    double energy_rho = 0.0;
    double energy_limit = 0.0;
    [[nodiscard]] bool all() const {
      return bounded && source_gain && outside_loss && inflow && outflow &&
             energy;
    }
  } conditions;

  [[nodiscard]] EdgeField values() const;
};

/// min over nonempty A' in A of |Gamma(A')|/|A'| - 1, exactly (unit measures).
Rational certified_magnification(const WeightedGraph& g,
                                 std::span<const int> A);

/// Builds the field with the certified c of A. Requires V == a == 1.
AlonField alon_field(const WeightedGraph& g, std::span<const int> A);
/// Same with a caller-chosen c; throws std::runtime_error when the network
/// cannot carry (1+c)|A|.
AlonField alon_field(const WeightedGraph& g, std::span<const int> A,
                     Rational c);

/// Measure-weighted network: s->v capacity (1+c)V(v), v->w capacity V(w) per
/// edge (and the identity), w->t capacity V(w).
struct WeightedAlonField {
  std::vector<int> A;
  double c = 0.0;
  EdgeField X;
  bool source_gain = false;
  bool outside_loss = false;
  bool inflow = false;       // absorbed a|X| <= V(v)
  bool outflow = false;      // emitted a|X| <= (1+c)V(v)
  bool per_edge_out = false; // each emitted share <= V(u) of the receiver
  [[nodiscard]] bool all() const {
    return source_gain && outside_loss && inflow && outflow && per_edge_out;
  }
};

double certified_weighted_magnification(const WeightedGraph& g,
                                        std::span<const int> A);
WeightedAlonField weighted_alon_field(const WeightedGraph& g,
                                      std::span<const int> A);

/// Q1(f) <= 2 Q2(f) sqrt(R(f)) for a function and a chosen field.
struct BasicTechniqueCheck {
  double q1 = 0.0;
  double q2 = 0.0;
  double rayleigh = 0.0;
  bool holds = false;
};

BasicTechniqueCheck basic_technique_check(const WeightedGraph& g,
                                          std::span<const double> f,
                                          std::span<const double> X);

/// Unit field along the gradient of f (zero where f is constant on an edge).
EdgeField gradient_direction(const WeightedGraph& g, std::span<const double> f);

/// Bounds on the smaller nodal region of the second closed eigenfunction,
/// with every other vertex made boundary, compared against lambda_2.
struct NodalRegionCheck {
  double lambda2 = 0.0;
  std::vector<int> region;
  BoundReport region_report;
  bool sound = false;
};

NodalRegionCheck nodal_region_check(const WeightedGraph& g,
                                    const EnumerationLimits& limits = {});

}  // namespace graphcalc
