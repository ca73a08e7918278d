#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcalc/graph.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/operators.hpp"

namespace graphcalc {

/// K(x,y,t) = sum_i exp(-t lambda_i) phi_i(x) phi_i(y) from a full spectral
/// decomposition. Dirichlet mode on a graph without boundary is the closed
/// kernel.
class HeatKernel {
 public:
  HeatKernel(const WeightedGraph& g, Mode mode);

  [[nodiscard]] double operator()(int x, int y, double t) const;
  /// d/dt K(x,y,t) = -sum_i lambda_i exp(-t lambda_i) phi_i(x) phi_i(y).
  [[nodiscard]] double time_derivative(int x, int y, double t) const;
  /// u(x,t) = sum_y K(x,y,t) f0(y) V(y).
  [[nodiscard]] VertexValues apply(std::span<const double> f0, double t) const;

  [[nodiscard]] const SpectralDecomposition& spectrum() const { return dec_; }
  [[nodiscard]] Mode mode() const { return dec_.mode; }
  [[nodiscard]] int vertex_count() const {
    return static_cast<int>(measures_.size());
  }

 private:
  SpectralDecomposition dec_;
  std::vector<double> measures_;
};

HeatKernel heat_kernel(const WeightedGraph& g, Mode mode);

/// Log-spaced grid with `per_decade` points per factor of 10, both ends
/// included.
std::vector<double> log_grid(double lo, double hi, int per_decade = 32);

/// Dirichlet solution at time t; f0 is masked to 0 on the boundary.
VertexValues heat_solve(const WeightedGraph& g, std::span<const double> f0,
                        double t);

/// max over interior vertices of |u_t + Lap u| with u_t from centered
/// differences of step h.
double heat_residual(const WeightedGraph& g, std::span<const double> f0,
                     double t, double h = 1e-5);

struct HeatProbe {
  int x = 0;
  int y = 0;
  double t = 0.0;
};

struct ExhaustionTable {
  /// rows[i][k]: kernel of the i-th subset at probe k.
  std::vector<std::vector<double>> rows;
  /// Kernel of the whole graph at each probe.
  std::vector<double> full;
  bool monotone = false;
  bool below_full = false;
};

/// Kernels of nested interior subsets (everything else made boundary).
ExhaustionTable exhaustion_check(const WeightedGraph& g,
                                 const std::vector<std::vector<int>>& chain,
                                 std::span<const HeatProbe> probes,
                                 double tol = 1e-12);

struct NashCheck {
  double nu = 0.0;
  Mode mode = Mode::dirichlet;
  double iso = 0.0;
  double rho_sup = 0.0;
  double C1 = 0.0;
  double C2 = kInfinity;
  bool applicable = false;
  /// max over grid and vertices of G(x,x,t) t^{nu/2}.
  double max_scaled = 0.0;
  double worst_t = 0.0;
  int worst_x = -1;
  bool holds = false;
};

/// G(x,x,t) <= C2 t^{-nu/2} with C2 = (nu/2)^{nu/2} C1^{-nu}. Open mode:
/// C1 = I_nu rho_sup^{-1/2}/2 and G = K. Closed mode: C1 carries the extra
/// factor 2^{-2/nu}, uses the tilde constant, and G = K - 1/V(G).
NashCheck nash_diagonal_bound(const WeightedGraph& g, double nu, Mode mode,
                              std::span<const double> t_grid,
                              const EnumerationLimits& limits = {});

struct EigenBoundRow {
  int k = 0;
  double lambda = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// lambda_k >= (k/V(G))^{2/nu} 2^{-4/nu} (I rho_sup^{-1/2}/2)^2 / e for the
/// nontrivial eigenvalues k = 1..n-1 of a closed graph, I the tilde constant.
std::vector<EigenBoundRow> eigenvalue_lower_bounds(
    const WeightedGraph& g, double nu, const EnumerationLimits& limits = {});

/// phi with F(x) = int_x^inf phi(4/u)^2 / u du. The power family
/// phi(x) = kappa x^{1/nu} has an analytic tail.
struct DecayProfile {
  std::string name;
  std::function<double(double)> phi;
  std::optional<double> power_nu;
  double kappa = 1.0;
};

DecayProfile power_profile(double nu, double kappa = 1.0);

/// Numeric F: Gauss-Kronrod on s = log u, plus the analytic tail for
/// power profiles. Throws InputError when the integral does not converge.
double decay_F(const DecayProfile& p, double x);
/// Closed form kappa^2 4^{2/nu} (nu/2) x^{-2/nu} for power profiles.
double decay_F_power(double nu, double kappa, double x);
/// The x with F(x) = y, by bisection in log x.
double decay_F_inverse(const DecayProfile& p, double y);

struct HypothesisAudit {
  bool holds = true;
  std::optional<AdmissibleSet> violation;
  long long sets_examined = 0;
};

/// Checks A(dOmega) >= V(Omega)/phi(V(Omega)) on every connected interior set.
HypothesisAudit decay_hypothesis(const WeightedGraph& g, const DecayProfile& p,
                                 const EnumerationLimits& limits = {});

struct DecayProbe {
  int x = 0;
  double t = 0.0;
  double kernel = 0.0;
  double bound = 0.0;
  bool holds = false;
};

struct DecayCheck {
  HypothesisAudit audit;
  double C = 0.0;  // 1/(32 rho_sup)
  std::vector<DecayProbe> probes;
  bool holds = false;
};

/// K(x,x,t) <= F^{-1}(C t) at every probe, once the hypothesis audit passes.
/// Throws InputError carrying the violating set when the audit fails.
DecayCheck general_decay_bound(const WeightedGraph& g, const DecayProfile& p,
                               std::span<const int> xs,
                               std::span<const double> ts,
                               const EnumerationLimits& limits = {});

/// Level profile of the tree whose level-i vertices have floor(i^{1+alpha})
/// children, solving Lap f = -f.
struct TreeProfile {
  double alpha = 0.0;
  std::vector<long long> children;  // n_i, i = 1..depth
  std::vector<double> f;            // f(i), i = 1..depth
  /// Partial products prod_{j<i} (1 + 2/n_j).
  std::vector<double> product_bound;
  bool increasing = false;
  bool bounded = false;
  /// max |Lap f + f| over levels 1..depth-1, relative to the level's terms.
  double residual = 0.0;
  /// sup_i u(i,t) for u = e^t f at t = 0, 1, 2.
  std::vector<double> sup_growth;
};

TreeProfile nonuniqueness_tree(double alpha, int depth);

struct UniquenessReport {
  int trials = 0;
  double max_energy_error = 0.0;
  bool energy_ok = false;
  bool zero_stays_zero = false;
  bool positivity_ok = false;
};

/// Energy identity d/dt int u^2 = -2 ||grad u||^2 at t = 0.5, zero data, and
/// strict positivity for nonnegative data on a connected interior.
UniquenessReport finite_uniqueness_check(const WeightedGraph& g, int trials,
                                         std::uint64_t seed);

}  // namespace graphcalc
