#include <doctest.h>

#include <random>

#include "graphcalc/generators.hpp"
#include "graphcalc/verify.hpp"

using namespace graphcalc;

TEST_CASE("random graphs respect their options") {
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 50; ++trial) {
    FuzzOptions o{3, 10, 0.0, true, true, false};
    const auto g = random_graph(rng, o);
    CHECK(g.vertex_count() >= 3);
    CHECK(g.vertex_count() <= 10);
    CHECK_FALSE(g.has_boundary());
    for (const auto& e : g.edges()) {
      CHECK_FALSE(e.is_loop());
      CHECK(e.a == 1.0);
      CHECK(e.length == 1.0);
    }
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.measure(v) == 1.0);
    const auto f = random_function(rng, path(4, true, true), true);
    CHECK(f[0] == 0.0);
    CHECK(f[3] == 0.0);
  }
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  CHECK(random_graph(a, {}).edge_specs().size() == random_graph(b, {}).edge_specs().size());
}

TEST_CASE("relative residual") {
  CHECK(relative_residual(1.0, 1.0) == 0.0);
  CHECK(relative_residual(0.0, 1e-13) == 1e-13);
  CHECK(relative_residual(1e6, 1e6 + 1.0) == doctest::Approx(1e-6));
}

TEST_CASE("every suite passes on closed and Dirichlet graphs") {
  const std::vector<WeightedGraph> closed{cycle(6), hypercube(3), doubled_radial(5, 3.0).graph};
  const std::vector<WeightedGraph> open{path(7, true, true), radial_graph(8, 3.0)};
  for (auto name : suite_names()) {
    for (const auto& g : closed) {
      SuiteOptions o;
      o.trials = 40;
      o.seed = 11;
      if (name == "gennash") {
        CHECK_THROWS_AS(run_suite(g, name, o), InputError);
        continue;
      }
      const auto r = run_suite(g, name, o);
      CHECK(r.mode == Mode::closed);
      CHECK(r.passed());
      CHECK(r.checks > 0);
    }
    for (const auto& g : open) {
      SuiteOptions o;
      o.trials = 40;
      o.seed = 13;
      const auto r = run_suite(g, name, o);
      CHECK(r.mode == Mode::dirichlet);
      CHECK(r.passed());
      CHECK(r.checks > 0);
    }
  }
}

TEST_CASE("suites are reproducible and validate their input") {
  SuiteOptions o;
  o.trials = 20;
  o.seed = 3;
  const auto a = run_suite(radial_graph(8, 3.0), "sobolev", o);
  const auto b = run_suite(radial_graph(8, 3.0), "sobolev", o);
  CHECK(a.min_margin == b.min_margin);
  CHECK(a.checks == b.checks);
  CHECK_THROWS_AS(run_suite(cycle(4), "nope", o), InputError);
  o.function = VertexValues{1.0, 2.0};
  CHECK_THROWS_AS(run_suite(cycle(4), "ff", o), InputError);
}

TEST_CASE("suites on random graphs") {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = random_graph(rng, {2, 12, trial % 2 == 0 ? 0.0 : 0.3});
    if (g.interior().empty()) continue;
    for (auto name : suite_names()) {
      if (name == "gennash" && !g.has_boundary()) continue;
      SuiteOptions o;
      o.trials = 15;
      o.seed = trial;
      CHECK(run_suite(g, name, o).passed());
    }
  }
}
