#include <doctest.h>

#include <cmath>
#include <random>

#include "graphcalc/fnspace.hpp"
#include "graphcalc/generators.hpp"
#include "graphcalc/heat.hpp"
#include "graphcalc/verify.hpp"
#include "oracles.hpp"

using namespace graphcalc;
using doctest::Approx;

TEST_CASE("closed-form kernels") {
  const auto k2 = heat_kernel(path(2), Mode::closed);
  for (double t : {0.0, 0.1, 1.0, 7.0}) {
    CHECK(k2(0, 0, t) == Approx((1.0 + std::exp(-2.0 * t)) / 2.0).epsilon(1e-13));
    CHECK(k2(0, 1, t) == Approx((1.0 - std::exp(-2.0 * t)) / 2.0).scale(1.0).epsilon(1e-13));
  }
  const auto p3 = heat_kernel(path(3, true, true), Mode::dirichlet);
  for (double t : {0.0, 0.5, 3.0}) {
    CHECK(p3(1, 1, t) == Approx(std::exp(-2.0 * t)).epsilon(1e-13));
    CHECK(p3(0, 1, t) == 0.0);
  }
  const auto w = WeightedGraph::build({{"a", 2.0}, {"b", 0.5}, {"c", 3.0}},
                                      {{"a", "b"}, {"b", "c", 2.0}});
  const auto kw = heat_kernel(w, Mode::closed);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(kw(x, y, 0.0) == Approx(x == y ? 1.0 / w.measure(x) : 0.0).scale(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel matches the matrix exponential") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_graph(rng, {2, 15, 0.25});
    for (Mode mode : {Mode::closed, Mode::dirichlet}) {
      if (mode == Mode::dirichlet && g.interior().empty()) continue;
      const auto K = heat_kernel(g, mode);
      for (double t : {0.01, 0.3, 2.0}) {
        for (int k = 0; k < 5; ++k) {
          const int x = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
          const int y = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
          const double ref = oracle::heat_kernel(g, mode, x, y, t);
          CHECK(K(x, y, t) == Approx(ref).epsilon(1e-9).scale(1.0 + std::abs(ref)));
        }
      }
    }
  }
}

TEST_CASE("heat kernel axioms") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_graph(rng, {2, 14, trial % 2 == 0 ? 0.0 : 0.3});
    const Mode mode = g.has_boundary() ? Mode::dirichlet : Mode::closed;
    if (g.interior().empty()) continue;
    const auto K = heat_kernel(g, mode);
    const int n = g.vertex_count();
    for (double t : log_grid(0.01, 100.0, 4)) {
      for (int x = 0; x < n; ++x) {
        double mass = 0.0;
        for (int y = 0; y < n; ++y) {
          CHECK(K(x, y, t) == Approx(K(y, x, t)).epsilon(1e-10).scale(1.0));
          CHECK(K(x, y, t) >= -1e-12);
          mass += K(x, y, t) * g.measure(y);
        }
        if (g.is_boundary(x)) continue;
        if (mode == Mode::closed) {
          CHECK(mass == Approx(1.0).epsilon(1e-10));
        } else {
          CHECK(mass <= 1.0 + 1e-12);
        }
        // Strict positivity on the connected interior is not guaranteed when
        // boundary vertices cut it, so only the diagonal is asserted.
        CHECK(K(x, x, t) > 0.0);
      }
    }
    // Semigroup and its time derivative.
    for (int k = 0; k < 6; ++k) {
      const int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int y = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const double t = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
      const double tau = std::uniform_real_distribution<double>(0.0, t)(rng);
      double sum = 0.0;
      double dsum = 0.0;
      for (int s = 0; s < n; ++s) {
        sum += K(x, s, tau) * K(s, y, t - tau) * g.measure(s);
        dsum += K(x, s, tau) * K.time_derivative(s, y, t - tau) * g.measure(s);
      }
      CHECK(std::abs(sum - K(x, y, t)) <= 1e-10 * (1.0 + std::abs(K(x, y, t))));
      CHECK(std::abs(dsum - K.time_derivative(x, y, t)) <=
            1e-9 * (1.0 + std::abs(K.time_derivative(x, y, t))));
    }
  }
}

TEST_CASE("heat solutions") {
  const auto c = cycle(7);
  const std::vector<double> ones(7, 2.5);
  for (double x : heat_solve(c, ones, 3.0)) CHECK(x == Approx(2.5));

  const auto g = radial_graph(7, 2.0);
  const auto dec = spectral_decomposition(g, Mode::dirichlet);
  const auto u = heat_solve(g, dec.eigenfunctions[1], 0.7);
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(u[v] == Approx(std::exp(-0.7 * dec.eigenvalues[1]) * dec.eigenfunctions[1][v])
                      .scale(1.0)
                      .epsilon(1e-10));
  }

  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = random_graph(rng, {2, 16, 0.3});
    if (h.interior().empty()) continue;
    const auto f0 = random_function(rng, h, true);
    const auto u0 = heat_solve(h, f0, 0.0);
    for (int v = 0; v < h.vertex_count(); ++v) {
      CHECK(u0[v] == Approx(h.is_boundary(v) ? 0.0 : f0[v]).scale(1.0).epsilon(1e-10));
    }
    for (double t : {0.05, 0.5, 5.0}) {
      const auto ut = heat_solve(h, f0, t);
      for (double p : {1.0, 2.0, kInfinity}) {
        CHECK(lp_norm_vertex(h, ut, p) <= lp_norm_vertex(h, f0, p) * (1.0 + 1e-10) + 1e-12);
      }
      CHECK(heat_residual(h, f0, t) <= 1e-5 * (1.0 + lp_norm_vertex(h, f0, kInfinity)));
    }
  }
}

TEST_CASE("log grid") {
  const auto grid = log_grid(1e-2, 1e2);
  CHECK(grid.size() == 129);
  CHECK(grid.front() == Approx(1e-2));
  CHECK(grid.back() == Approx(1e2));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("exhaustion") {
  const auto g = path(9, true, true);
  std::vector<std::vector<int>> chain;
  for (int i = 0; i <= 3; ++i) {
    std::vector<int> window;
    for (int v = 4 - i; v <= 4 + i; ++v) window.push_back(v);
    chain.push_back(window);
  }
  const std::vector<HeatProbe> probes{{4, 4, 0.0}, {4, 4, 0.5}, {4, 4, 3.0}, {4, 4, 20.0}};
  const auto table = exhaustion_check(g, chain, probes);
  CHECK(table.monotone);
  CHECK(table.below_full);
  for (const auto& row : table.rows) CHECK(row[0] == Approx(1.0));
  for (std::size_t k = 0; k < probes.size(); ++k) {
    CHECK(table.rows.back()[k] == Approx(table.full[k]).epsilon(1e-12).scale(1.0));
  }
  CHECK(table.rows[2][2] > table.rows[0][2]);

  const std::vector<HeatProbe> outside{{1, 1, 1.0}};
  CHECK_THROWS_AS(exhaustion_check(g, chain, outside), InputError);
}

TEST_CASE("Nash diagonal bounds") {
  const auto grid = log_grid(0.01, 100.0);
  const auto radial = nash_diagonal_bound(radial_graph(12, 3.0), 3.0, Mode::dirichlet, grid);
  CHECK(radial.applicable);
  CHECK(radial.holds);
  CHECK(radial.max_scaled <= radial.C2);

  const auto k2 = nash_diagonal_bound(path(2), 3.0, Mode::closed, grid);
  CHECK(k2.applicable);
  CHECK(k2.holds);

  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = random_graph(rng, {2, 12, trial % 2 == 0 ? 0.0 : 0.3});
    const Mode mode = g.has_boundary() ? Mode::dirichlet : Mode::closed;
    if (g.interior().empty()) continue;
    for (double nu : {2.5, 4.0}) {
      const auto r = nash_diagonal_bound(g, nu, mode, grid);
      if (r.applicable) CHECK(r.holds);
    }
  }
  CHECK_THROWS_AS(nash_diagonal_bound(path(2), 2.0, Mode::closed, grid), InputError);
}

TEST_CASE("eigenvalue lower bounds from Nash decay") {
  const auto rows = eigenvalue_lower_bounds(cycle(8), 3.0);
  CHECK(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(r.holds);
    CHECK(r.bound <= r.lambda);
  }
  for (const auto& g : {hypercube(3), complete(5), doubled_radial(5, 2.0).graph}) {
    for (const auto& r : eigenvalue_lower_bounds(g, 4.0)) CHECK(r.holds);
  }
}

TEST_CASE("decay profile integrals") {
  for (double nu : {2.0, 3.0, 5.5}) {
    for (double kappa : {1.0, 0.3}) {
      const auto p = power_profile(nu, kappa);
      for (double x : {1e-3, 0.5, 1.0, 40.0}) {
        CHECK(decay_F(p, x) == Approx(decay_F_power(nu, kappa, x)).epsilon(1e-9));
        CHECK(decay_F_inverse(p, decay_F(p, x)) == Approx(x).epsilon(1e-9));
      }
    }
  }
  // nu = 2 and rho_sup = 1: F^{-1}(t/32) = 128/t.
  const auto p2 = power_profile(2.0);
  for (double t : {0.5, 4.0, 100.0}) {
    CHECK(decay_F_inverse(p2, t / 32.0) == Approx(128.0 / t).epsilon(1e-9));
  }
  DecayProfile flat{"flat", [](double) { return 1.0; }, std::nullopt, 1.0};
  CHECK_THROWS_AS(decay_F(flat, 1.0), InputError);
}

TEST_CASE("general decay bound") {
  const auto g = radial_graph(10, 2.0);
  const std::vector<int> xs{0, 3, 6};
  const auto ts = log_grid(0.1, 100.0, 4);
  // A large enough kappa makes the isoperimetric hypothesis hold.
  const auto check = general_decay_bound(g, power_profile(2.0, 50.0), xs, ts);
  CHECK(check.audit.holds);
  CHECK(check.holds);
  CHECK(check.C == Approx(1.0 / (32.0 * half_degrees(g).rho_sup)));
  for (const auto& probe : check.probes) CHECK(probe.kernel <= probe.bound + 1e-9);

  const auto audit = decay_hypothesis(g, power_profile(2.0, 1e-3));
  CHECK_FALSE(audit.holds);
  CHECK(audit.violation.has_value());
  CHECK_THROWS_AS(general_decay_bound(g, power_profile(2.0, 1e-3), xs, ts), InputError);
}

TEST_CASE("non-uniqueness tree") {
  const auto tree = nonuniqueness_tree(1.0, 12);
  REQUIRE(tree.f.size() == 12);
  CHECK(tree.f[0] == 1.0);
  CHECK(tree.f[1] == 2.0);
  CHECK(tree.f[2] == Approx(2.75));
  CHECK(tree.increasing);
  CHECK(tree.bounded);
  CHECK(tree.residual <= 1e-12);
  REQUIRE(tree.sup_growth.size() == 3);
  CHECK(tree.sup_growth[1] > tree.sup_growth[0]);
  CHECK(tree.sup_growth[2] > tree.sup_growth[1]);
  for (double alpha : {0.5, 2.0}) {
    const auto t = nonuniqueness_tree(alpha, 15);
    CHECK(t.increasing);
    CHECK(t.bounded);
    CHECK(t.residual <= 1e-12);
  }
  CHECK_THROWS_AS(nonuniqueness_tree(1.0, 2), InputError);
}

TEST_CASE("finite uniqueness") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(rng, {2, 14, trial % 2 == 0 ? 0.0 : 0.3});
    if (g.interior().empty()) continue;
    const auto r = finite_uniqueness_check(g, 5, 1000 + trial);
    CHECK(r.energy_ok);
    CHECK(r.zero_stays_zero);
    CHECK(r.positivity_ok);
    CHECK(r.max_energy_error <= 1e-6);
  }
}
