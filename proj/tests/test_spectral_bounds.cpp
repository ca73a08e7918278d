#include <doctest.h>

#include <cmath>
#include <random>

#include "graphcalc/generators.hpp"
#include "graphcalc/spectral_bounds.hpp"
#include "graphcalc/verify.hpp"

using namespace graphcalc;
using doctest::Approx;

namespace {

const BoundEntry& entry(const BoundReport& r, const std::string& name) {
  for (const auto& b : r.bounds) {
    if (b.name == name) return b;
  }
  FAIL("missing bound " << name);
  return r.bounds.front();
}

}  // namespace

TEST_CASE("true lambda") {
  CHECK(true_lambda(cycle(4), Mode::closed) == Approx(2.0));
  CHECK(true_lambda(path(3, true, true), Mode::dirichlet) == Approx(2.0));
  const auto two = WeightedGraph::build({{"a"}, {"b"}, {"c"}, {"d"}},
                                        {{"a", "b"}, {"c", "d"}});
  CHECK(std::abs(true_lambda(two, Mode::closed)) < 1e-12);
}

TEST_CASE("bound formulas") {
  CHECK(dodziuk_value(2.0, 1.0) == 1.0);
  CHECK(dodziuk_value(0.0, 1.0) == 0.0);
  CHECK(mohar_value(1.0, 1.0) == Approx(2.0 - std::sqrt(3.0)));
  CHECK(mohar_value(2.0, 1.0) == Approx(2.0));
  CHECK(alon_value(1.0, 1.0) == Approx(1.0 / 6.0));
  CHECK(alon_value(0.0, 1.0) == 0.0);
  CHECK(alon_value(2.0, 1.0) == Approx(0.5));
  CHECK(alon_value(2.0, 2.0) == Approx(0.25));
  CHECK(bobkov_value(0.0) == 0.0);
  CHECK(bobkov_value(1.0) == Approx(3.0 / 14.0));
  for (double I : {0.1, 0.5, 1.0, 1.7, 2.0}) {
    CHECK(mohar_value(I, 1.0) >= dodziuk_value(I, 1.0) * (1.0 - 1e-15));
  }
}

TEST_CASE("C4 closed report") {
  const auto r = bound_report(cycle(4), Mode::closed);
  CHECK(r.lambda == Approx(2.0));
  CHECK(r.inputs.iso_inf == Approx(1.0));
  CHECK(r.inputs.rho_sup == 1.0);
  CHECK(entry(r, "dodziuk").value == Approx(0.25));
  CHECK(entry(r, "mohar").value == Approx(2.0 - std::sqrt(3.0)));
  CHECK(entry(r, "alon").applicable);
  CHECK(r.sound());
}

TEST_CASE("path 1-2-3 with boundary ends") {
  const auto r = bound_report(path(3, true, true), Mode::dirichlet);
  CHECK(r.lambda == Approx(2.0));
  CHECK(entry(r, "dodziuk").value == Approx(1.0));
  CHECK(r.sound());
}

TEST_CASE("applicability flags") {
  const auto stretched = WeightedGraph::build({{"a"}, {"b"}, {"c"}},
                                              {{"a", "b", 1.0, 2.0}, {"b", "c"}, {"c", "a"}});
  const auto r = bound_report(stretched, Mode::closed);
  CHECK_FALSE(entry(r, "mohar").applicable);
  CHECK_FALSE(entry(r, "mohar").reason.empty());
  CHECK(entry(r, "dodziuk").applicable);
  CHECK(r.sound());

  const auto heavy = WeightedGraph::build({{"a", 2.0}, {"b"}, {"c"}},
                                          {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK_FALSE(entry(bound_report(heavy, Mode::closed), "alon").applicable);
}

TEST_CASE("Bobkov measures") {
  const auto g = WeightedGraph::build({{"x", 0.3}, {"y", 0.7}}, {{"x", "y", 1.0, 1.0}});
  const auto r = bound_report(g, Mode::closed);
  CHECK(r.inputs.bobkov_measures);
  CHECK(entry(r, "bobkov").applicable);
  CHECK(entry(r, "bobkov").value <= r.lambda + kBoundSlack);
  CHECK_FALSE(bound_report(cycle(5), Mode::closed).inputs.bobkov_measures);
}

TEST_CASE("bounds are sound on the generator families") {
  std::vector<std::pair<WeightedGraph, Mode>> cases;
  for (int n : {3, 4, 5, 8, 12}) cases.emplace_back(cycle(n), Mode::closed);
  for (int n : {2, 5, 9}) {
    cases.emplace_back(path(n), Mode::closed);
    cases.emplace_back(path(n, true, true), Mode::dirichlet);
    cases.emplace_back(path(n, true), Mode::dirichlet);
  }
  for (int n : {2, 4, 6}) cases.emplace_back(complete(n), Mode::closed);
  for (int d : {1, 2, 3, 4}) cases.emplace_back(hypercube(d), Mode::closed);
  for (double nu : {1.5, 2.0, 3.0}) {
    cases.emplace_back(radial_graph(8, nu), Mode::dirichlet);
    cases.emplace_back(doubled_radial(6, nu).graph, Mode::closed);
  }
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, {2, 14, trial % 2 == 0 ? 0.0 : 0.3,
                                      trial % 3 == 0, trial % 4 == 0});
    cases.emplace_back(g, g.has_boundary() ? Mode::dirichlet : Mode::closed);
  }
  for (const auto& [g, mode] : cases) {
    if (mode == Mode::dirichlet && g.interior().empty()) continue;
    const auto r = bound_report(g, mode);
    CHECK(r.sound());
    for (const auto& b : r.bounds) {
      if (b.applicable) CHECK(b.value <= r.lambda + kBoundSlack);
    }
    const auto& d = entry(r, "dodziuk");
    const auto& m = entry(r, "mohar");
    if (d.applicable && m.applicable) CHECK(m.value >= d.value * (1.0 - 1e-12));
  }
}

TEST_CASE("K4 and Q3 Alon fields") {
  const auto k4 = complete(4);
  const std::vector<int> one{0};
  const auto f = alon_field(k4, one);
  CHECK(f.c == Rational(2));
  CHECK(f.conditions.all());
  const auto f1 = alon_field(k4, one, Rational(1));
  CHECK(f1.conditions.all());

  const auto q3 = hypercube(3);
  const std::vector<int> A{0, 1, 2, 3};
  const auto fq = alon_field(q3, A);
  CHECK(fq.c == certified_magnification(q3, A));
  CHECK(fq.conditions.all());
  CHECK(fq.conditions.energy_rho <= fq.conditions.energy_limit);

  const auto none = alon_field(q3, std::vector<int>{});
  for (const auto& x : none.X) CHECK(x == Rational(0));

  CHECK_THROWS_AS(alon_field(k4, one, Rational(4)), std::runtime_error);
  const auto heavy = WeightedGraph::build({{"a", 2.0}, {"b"}}, {{"a", "b"}});
  CHECK_THROWS_AS(alon_field(heavy, one), InputError);
}

TEST_CASE("Alon fields on random traditional graphs") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    FuzzOptions o{2, 12, 0.2, true, true};
    const auto g = random_graph(rng, o);
    const auto interior = g.interior();
    std::vector<int> A;
    for (int v : interior) {
      if (std::bernoulli_distribution(0.4)(rng)) A.push_back(v);
    }
    if (A.empty()) continue;
    const auto f = alon_field(g, A);
    CHECK(f.conditions.all());
    // The field is reproducible.
    CHECK(alon_field(g, A).X == f.X);
  }
}

TEST_CASE("weighted Alon fields") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, {2, 12, 0.2});
    std::vector<int> A;
    for (int v : g.interior()) {
      if (std::bernoulli_distribution(0.4)(rng)) A.push_back(v);
    }
    if (A.empty()) continue;
    const auto f = weighted_alon_field(g, A);
    CHECK(f.c == Approx(certified_weighted_magnification(g, A)));
    CHECK(f.all());
  }
}

TEST_CASE("basic technique") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, {2, 20, 0.3});
    if (g.interior().empty()) continue;
    const auto f = random_function(rng, g, true);
    if (lp_norm_vertex(g, f, 2.0) == 0.0) continue;
    CHECK(basic_technique_check(g, f, gradient_direction(g, f)).holds);
    CHECK(basic_technique_check(g, f, random_field(rng, g)).holds);
  }
  const std::vector<double> f{0.0, 1.0, 0.0};
  const auto X = gradient_direction(path(3, true, true), f);
  CHECK(X[0] == 1.0);
  CHECK(X[1] == -1.0);
}

TEST_CASE("nodal region reduction") {
  for (const auto& g : {cycle(6), path(7), hypercube(3), doubled_radial(6, 2.0).graph}) {
    const auto n = nodal_region_check(g);
    CHECK(n.sound);
    CHECK_FALSE(n.region.empty());
    CHECK(n.region.size() * 2 <= static_cast<std::size_t>(g.vertex_count()));
  }
}
