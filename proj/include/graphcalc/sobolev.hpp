#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/operators.hpp"

namespace graphcalc {

/// Every check is phrased as lhs >= rhs.
struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double nu = 0.0;
  double p = 0.0;
  double iso = 0.0;
  double rho_sup = 0.0;
  Mode mode = Mode::dirichlet;
  bool passed = false;
};

/// Graph constants shared by the checks. Dirichlet mode uses I_nu and needs
/// Dirichlet functions; closed mode uses the tilde constant and split
/// functions on a graph without boundary.
struct SobolevContext {
  Mode mode = Mode::dirichlet;
  double nu = 0.0;
  double iso = 0.0;
  double rho_sup = 0.0;
  double total_measure = 0.0;
};

SobolevContext sobolev_context(const WeightedGraph& g, double nu, Mode mode,
                               const EnumerationLimits& limits = {});

inline constexpr double kCheckTolerance = 1e-9;

/// I ||F(phi)||_{nu'} <= rho_sup^{1/p'} ||grad phi||_p ||F'(phi)||_{p'} for
/// F(x) = |x|^{r-1} x. Throws InputError when (F')^{p'} is not convex.
InequalityCheck general_F_check(const WeightedGraph& g,
                                const SobolevContext& ctx,
                                std::span<const double> f, double r, double p);

/// ||grad f||_p >= c ||f||_{p nu/(nu-p)}, c = I rho^{-(p-1)/p}(nu-p)/(p(nu-1)).
InequalityCheck sobolev_check(const WeightedGraph& g, const SobolevContext& ctx,
                              std::span<const double> f, double p);

/// ||grad f||_2 >= (I rho^{-1/2}/2) ||f||_2^{1+2/nu} ||f||_1^{-2/nu}. Closed
/// mode accepts V-mean-zero f instead of split f.
InequalityCheck nash_check(const WeightedGraph& g, const SobolevContext& ctx,
                           std::span<const double> f);

/// V(G)(1-gamma)^{-nu'} >= int exp(gamma phi~)^{nu'}, with
/// phi~ = phi I rho^{-1/nu'} / ||grad phi||_nu, integrated against V, or
/// against E when `edge_integral` is set.
InequalityCheck trudinger_check(const WeightedGraph& g,
                                const SobolevContext& ctx,
                                std::span<const double> f, double gamma,
                                bool edge_integral = false);

/// 32 rho (phi(4||f||_1^2/||f||_2^2))^2 ||grad f||_2^2 >= ||f||_2^2 with
/// phi(x) = x^{1/nu}/I_nu, for Dirichlet f.
InequalityCheck gennash_check(const WeightedGraph& g, const SobolevContext& ctx,
                              std::span<const double> f);

struct IterationConstant {
  double delta = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  /// c1^{-c2}
  double c_star = 0.0;
  int terms = 0;
};

/// delta = nu'/p' > 1, gamma_i = 1 + delta + ... + delta^{i+1},
/// c1 = prod gamma_i^{delta^{-i}}, c2 = p'(nu'-p')/nu'^2. `max_terms` bounds
/// the truncation (0 means until the tail is below 1e-16).
IterationConstant iteration_constant(double p, double nu, int max_terms = 0);

/// ||grad phi||_p >= c* V(G)^{1/p-1/nu} I rho^{-1/p'} ||phi||_inf, p > nu.
InequalityCheck sup_embedding_check(const WeightedGraph& g,
                                    const SobolevContext& ctx,
                                    std::span<const double> f, double p);

/// Shifts f by the midpoint of its L^1 balance interval, which makes it split.
VertexValues split_shift(const WeightedGraph& g, std::span<const double> f);

struct SharpnessRow {
  double nu = 0.0;
  int m = 0;
  /// ||grad f_m||_p / ||f_m||_q with q = p nu/(nu-p) (q = inf at nu = p).
  double quotient = 0.0;
  /// quotient / (I_nu rho^{-1/p'}).
  double normalized = 0.0;
};

struct SharpnessReport {
  double p = 0.0;
  int n = 0;
  std::vector<SharpnessRow> rows;
  /// Per nu > p: min over m of normalized / (nu-p)^{1/p-1}; C is their max.
  std::vector<double> nu_values;
  std::vector<double> fitted;
  double C = 0.0;
};

/// Log test functions on radial graphs of size n over a grid of nu and m.
SharpnessReport sharpness_experiment(double p, std::span<const double> nus,
                                     std::span<const int> ms, int n);

}  // namespace graphcalc
