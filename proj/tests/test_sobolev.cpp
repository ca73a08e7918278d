#include <doctest.h>

#include <cmath>
#include <random>

#include "graphcalc/generators.hpp"
#include "graphcalc/sobolev.hpp"
#include "graphcalc/verify.hpp"

using namespace graphcalc;
using doctest::Approx;

namespace {

WeightedGraph random_dirichlet_graph(std::mt19937_64& rng) {
  for (;;) {
    auto g = random_graph(rng, {3, 14, 0.3});
    if (g.has_boundary() && !g.interior().empty()) return g;
  }
}

bool nonzero(std::span<const double> f) {
  return std::any_of(f.begin(), f.end(), [](double x) { return x != 0.0; });
}

}  // namespace

TEST_CASE("iteration constant") {
  const auto c = iteration_constant(2.0, 1.5);
  CHECK(c.delta == Approx(1.5));
  CHECK(c.c2 == Approx(2.0 / 9.0));
  CHECK(std::isfinite(c.c1));
  CHECK(c.c1 > 1.0);
  CHECK(c.c_star == Approx(std::pow(c.c1, -c.c2)));

  // delta = 2: p' = 2, nu' = 4, so p = 2 and nu = 4/3.
  const auto t64 = iteration_constant(2.0, 4.0 / 3.0, 64);
  const auto t128 = iteration_constant(2.0, 4.0 / 3.0, 128);
  CHECK(t64.delta == Approx(2.0));
  CHECK(t64.c1 == Approx(t128.c1).epsilon(1e-14));
  CHECK(t64.terms == 64);

  CHECK_THROWS_AS(iteration_constant(2.0, 3.0), InputError);
  CHECK_THROWS_AS(iteration_constant(2.0, 2.0), InputError);
}

TEST_CASE("Trudinger at gamma = 0 is an equality") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, {2, 14});
    const auto ctx = sobolev_context(g, 3.0, Mode::closed);
    const auto f = split_shift(g, random_function(rng, g, false));
    if (grad_lp_norm(g, f, 3.0) == 0.0) continue;
    const auto r = trudinger_check(g, ctx, f, 0.0);
    CHECK(r.lhs == r.rhs);
    CHECK(r.lhs == Approx(g.total_measure()));
    CHECK(r.passed);
  }
}

TEST_CASE("Nash on C6") {
  const auto g = cycle(6);
  const auto ctx = sobolev_context(g, 3.0, Mode::closed);
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_function(rng, g, false);
    double mean = 0.0;
    for (double x : f) mean += x / 6.0;
    for (double& x : f) x -= mean;
    if (lp_norm_vertex(g, f, 1.0) < 1e-12) continue;
    CHECK(nash_check(g, ctx, f).passed);
  }
}

TEST_CASE("general F on C6") {
  const auto g = cycle(6);
  const auto ctx = sobolev_context(g, 4.0, Mode::closed);
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = split_shift(g, random_function(rng, g, false));
    if (!nonzero(f)) continue;
    CHECK(is_split(g, f));
    CHECK(general_F_check(g, ctx, f, 2.0, 2.0).passed);
    CHECK(general_F_check(g, ctx, f, 1.0, 2.0).passed);
  }
  const std::vector<double> f{1.0, -1.0, 1.0, -1.0, 1.0, -1.0};
  CHECK_THROWS_AS(general_F_check(g, ctx, f, 0.5, 2.0), InputError);
}

TEST_CASE("p = 1 Sobolev is Federer-Fleming at nu = 2") {
  const auto g = path(3, true, true);
  const auto ctx = sobolev_context(g, 2.0, Mode::dirichlet);
  const std::vector<double> f{0.0, 1.0, 0.0};
  const auto r = sobolev_check(g, ctx, f, 1.0);
  CHECK(r.rhs == Approx(ctx.iso * lp_norm_vertex(g, f, 2.0)));
  CHECK(r.lhs == Approx(2.0));
  CHECK(r.passed);
}

TEST_CASE("inequalities hold on random Dirichlet data") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_dirichlet_graph(rng);
    for (double nu : {1.5, 3.0, 6.0}) {
      const auto ctx = sobolev_context(g, nu, Mode::dirichlet);
      for (int k = 0; k < 10; ++k) {
        const auto f = random_function(rng, g, true);
        if (!nonzero(f)) continue;
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
          const double r_min = 1.0 + 1.0 / conjugate(p);
          CHECK(general_F_check(g, ctx, f, 1.0, p).passed);
          CHECK(general_F_check(g, ctx, f, r_min + 0.7, p).passed);
          if (nu > p) CHECK(sobolev_check(g, ctx, f, p).passed);
          if (p > nu) CHECK(sup_embedding_check(g, ctx, f, p).passed);
        }
        if (nu > 2.0) {
          CHECK(nash_check(g, ctx, f).passed);
          CHECK(gennash_check(g, ctx, f).passed);
        }
        if (grad_lp_norm(g, f, nu) > 0.0) {
          for (double gamma : {0.1, 0.5, 0.9}) {
            CHECK(trudinger_check(g, ctx, f, gamma).passed);
          }
        }
      }
    }
  }
}

TEST_CASE("inequalities hold on random closed data") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, {2, 14});
    for (double nu : {1.5, 3.0, 6.0}) {
      const auto ctx = sobolev_context(g, nu, Mode::closed);
      for (int k = 0; k < 10; ++k) {
        const auto raw = random_function(rng, g, false);
        const auto f = split_shift(g, raw);
        if (!nonzero(f)) continue;
        CHECK(is_split(g, f));
        for (double p : {1.0, 2.0, 3.0}) {
          CHECK(general_F_check(g, ctx, f, 1.0, p).passed);
          if (nu > p) CHECK(sobolev_check(g, ctx, f, p).passed);
          if (p > nu) CHECK(sup_embedding_check(g, ctx, f, p).passed);
        }
        if (grad_lp_norm(g, f, nu) > 0.0) {
          CHECK(trudinger_check(g, ctx, f, 0.5).passed);
        }
        auto centred = raw;
        const double mean = integral_vertex(g, raw) / g.total_measure();
        for (double& x : centred) x -= mean;
        if (nu > 2.0 && lp_norm_vertex(g, centred, 1.0) > 1e-9) {
          CHECK(nash_check(g, ctx, centred).passed);
        }
      }
    }
  }
}

TEST_CASE("mode and hypothesis checks") {
  const auto closed = cycle(5);
  // Without boundary the whole vertex set is admissible, so I_nu = 0.
  CHECK(sobolev_context(closed, 3.0, Mode::dirichlet).iso == 0.0);
  const auto open = path(4, true, true);
  const auto ctx = sobolev_context(open, 3.0, Mode::dirichlet);
  const std::vector<double> not_dirichlet{1.0, 1.0, 1.0, 0.0};
  CHECK_THROWS_AS(nash_check(open, ctx, not_dirichlet), InputError);
  const std::vector<double> f{0.0, 1.0, 2.0, 0.0};
  CHECK_THROWS_AS(sobolev_check(open, ctx, f, 3.0), InputError);
  CHECK_THROWS_AS(sup_embedding_check(open, ctx, f, 2.0), InputError);
  CHECK_THROWS_AS(trudinger_check(open, ctx, f, 1.0), InputError);
  const auto cctx = sobolev_context(closed, 3.0, Mode::closed);
  CHECK_THROWS_AS(gennash_check(closed, cctx, std::vector<double>{1, -1, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(nash_check(closed, cctx, std::vector<double>{1, 1, 1, 1, 1}), InputError);
}

TEST_CASE("split shift") {
  const auto g = path(4);
  const auto s = split_shift(g, std::vector<double>{0.0, 1.0, 2.0, 3.0});
  CHECK(s == std::vector<double>{-1.5, -0.5, 0.5, 1.5});
  CHECK(is_split(g, s));
}

TEST_CASE("sharpness experiment") {
  const std::vector<double> nus{2.0, 2.5, 3.0, 4.0};
  const std::vector<int> ms{4, 8, 16, 32};
  const auto rep = sharpness_experiment(2.0, nus, ms, 40);
  CHECK(rep.rows.size() == nus.size() * ms.size());
  // At nu = p the quotient decays like 1/sqrt(log m).
  std::vector<double> at_p;
  for (const auto& row : rep.rows) {
    if (row.nu == 2.0) at_p.push_back(row.quotient);
  }
  REQUIRE(at_p.size() == ms.size());
  for (std::size_t i = 1; i < at_p.size(); ++i) CHECK(at_p[i] < at_p[i - 1]);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const double squared = at_p[i] * at_p[i] * std::log(static_cast<double>(ms[i]));
    CHECK(squared > 0.3);
    CHECK(squared < 3.0);
  }
  CHECK(rep.nu_values.size() == 3);
  CHECK(std::isfinite(rep.C));
  CHECK(rep.C > 0.0);
  for (std::size_t i = 0; i < rep.nu_values.size(); ++i) {
    CHECK(rep.fitted[i] <= rep.C);
  }
  CHECK_THROWS_AS(sharpness_experiment(2.0, nus, std::vector<int>{50}, 40), InputError);
}
