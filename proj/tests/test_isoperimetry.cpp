#include <doctest.h>

#include <cmath>
#include <random>

#include "graphcalc/generators.hpp"
#include "graphcalc/isoperimetry.hpp"
#include "graphcalc/verify.hpp"
#include "oracles.hpp"

using namespace graphcalc;
using doctest::Approx;

namespace {

bool same(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return a == Approx(b).epsilon(1e-12);
}

}  // namespace

TEST_CASE("small isoperimetric constants") {
  const auto c4 = iso_constant(cycle(4), kInfinity, IsoVariant::tilde);
  CHECK(c4.value == Approx(1.0));
  REQUIRE(c4.witness);
  CHECK(c4.witness->vertices.size() == 2);
  CHECK(c4.witness->area == 2.0);

  const auto p3 = iso_constant(path(3, true, true), kInfinity, IsoVariant::open);
  CHECK(p3.value == 2.0);
  REQUIRE(p3.witness);
  CHECK(p3.witness->vertices == std::vector<int>{1});
  CHECK(p3.witness->vmass == 1.0);

  // With nu = 1 the mass drops out and only the smallest area counts.
  CHECK(iso_constant(path(5, true, true), 1.0, IsoVariant::open).value == 2.0);
  // A closed graph has I_nu = 0 (the whole vertex set has no boundary).
  CHECK(iso_constant(cycle(5), 2.0, IsoVariant::open).value == 0.0);
}

TEST_CASE("variant names and validation") {
  CHECK(parse_iso_variant("tilde-prime") == IsoVariant::tilde_prime);
  CHECK(to_string(IsoVariant::open) == "open");
  CHECK_THROWS_AS(parse_iso_variant("closed"), InputError);
  CHECK_THROWS_AS(iso_constant(path(3, true), 2.0, IsoVariant::tilde), InputError);
  CHECK_THROWS_AS(iso_constant(path(3, true), 0.5, IsoVariant::open), InputError);
}

TEST_CASE("tilde variants are sandwiched") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, {2, 12});
    for (double nu : {1.0, 1.5, 3.0, kInfinity}) {
      const double t = iso_constant(g, nu, IsoVariant::tilde).value;
      const double tp = iso_constant(g, nu, IsoVariant::tilde_prime).value;
      CHECK(t <= tp * (1.0 + 1e-12));
      CHECK(tp <= std::pow(2.0, 1.0 / nu) * t * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("connected enumeration agrees with all subsets") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const bool closed = trial % 2 == 0;
    const auto g = random_graph(rng, {2, 12, closed ? 0.0 : 0.3});
    for (double nu : {1.0, 2.0, 4.5, kInfinity}) {
      if (closed) {
        for (auto variant : {IsoVariant::tilde, IsoVariant::tilde_prime}) {
          const auto r = iso_constant(g, nu, variant);
          CHECK(same(r.value, oracle::iso_all_subsets(g, nu, variant)));
        }
      } else {
        const auto r = iso_constant(g, nu, IsoVariant::open);
        CHECK(same(r.value, oracle::iso_all_subsets(g, nu, IsoVariant::open)));
        if (r.witness) {
          CHECK(iso_functional(IsoVariant::open, nu, r.witness->area, r.witness->vmass,
                               g.total_measure()) == r.value);
        }
      }
    }
  }
}

TEST_CASE("connected subsets are visited once") {
  const auto g = cycle(5);
  std::vector<char> allowed(5, 1);
  long long count = 0;
  for_each_connected_subset(g, allowed, [&](std::span<const int>, double, double) { ++count; });
  // Arcs of length 1..4 from every start, plus the whole cycle.
  CHECK(count == 5 * 4 + 1);
}

TEST_CASE("enumeration cap") {
  const auto big = cycle(23);
  CHECK_THROWS_AS(iso_constant(big, 2.0, IsoVariant::tilde), CapExceeded);
  CHECK_THROWS_AS(magnification(big, Mode::closed), CapExceeded);
  const auto forced = iso_constant(big, kInfinity, IsoVariant::tilde, {22, true});
  CHECK(forced.value == Approx(2.0 / 11.0));
  CHECK_NOTHROW(iso_constant(path(8, true, true), 2.0, IsoVariant::open, {6, false}));
  CHECK_THROWS_AS(iso_constant(path(8, true, true), 2.0, IsoVariant::open, {5, false}),
                  CapExceeded);
}

TEST_CASE("magnification") {
  const auto k4 = magnification(complete(4), Mode::closed);
  CHECK(k4.c == Approx(1.0));
  // Alternate vertices of an even cycle have exactly the other half as
  // neighbours.
  const auto c6 = magnification(cycle(6), Mode::closed);
  CHECK(c6.c == 0.0);
  CHECK(c6.witness == std::vector<int>{0, 2, 4});
  CHECK(magnification(cycle(7), Mode::closed).c > 0.0);

  const auto lone = magnification(WeightedGraph::build({{"x"}}, {}), Mode::dirichlet);
  CHECK(lone.c == -1.0);
  CHECK(lone.witness == std::vector<int>{0});

  const auto nb = neighbourhood(path(4), std::vector<int>{1});
  CHECK(nb == std::vector<int>{0, 2});

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, {1, 12, 0.25});
    for (Mode mode : {Mode::closed, Mode::dirichlet}) {
      if (mode == Mode::dirichlet && g.interior().empty()) continue;
      CHECK(same(magnification(g, mode).c, oracle::magnification_all_subsets(g, mode)));
    }
  }
}

TEST_CASE("sobolev quotient") {
  const auto g = path(4, true, true);
  const std::vector<double> f{0.0, 1.0, 2.0, 0.0};
  const double s = sobolev_quotient(g, f, 2.0);
  CHECK(s == Approx(4.0 / std::sqrt(5.0)));
  std::vector<double> scaled(f);
  for (double& x : scaled) x *= 7.5;
  CHECK(sobolev_quotient(g, scaled, 2.0) == Approx(s));
  CHECK_THROWS_AS(sobolev_quotient(g, std::vector<double>(4, 0.0), 2.0), InputError);
}

TEST_CASE("characteristic approximants") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, {3, 12, 0.3});
    if (g.interior().empty()) continue;
    for (double nu : {1.5, 3.0, kInfinity}) {
      const auto r = iso_constant(g, nu, IsoVariant::open);
      if (!r.witness || r.value == 0.0) continue;
      for (double eps : {1e-2, 1e-6}) {
        const auto approx = characteristic_approx(g, r.witness->vertices, eps);
        CHECK(grad_lp_norm(approx.graph, approx.f, 1.0) ==
              Approx(r.witness->area).epsilon(1e-12));
        CHECK(lp_norm_vertex(approx.graph, approx.f, conjugate(nu)) ==
              Approx(std::pow(r.witness->vmass, 1.0 / conjugate(nu))).epsilon(1e-12));
        CHECK(sobolev_quotient(approx.graph, approx.f, nu) ==
              Approx(r.value).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(characteristic_approx(path(2), std::vector<int>{0}, 1.0), InputError);
  CHECK_THROWS_AS(characteristic_approx(path(2), std::vector<int>{0}, 0.0), InputError);
}

TEST_CASE("Federer-Fleming: random Dirichlet functions respect I_nu") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, {3, 14, 0.3});
    if (g.interior().empty() || !g.has_boundary()) continue;
    for (double nu : {1.0, 2.0, 5.0, kInfinity}) {
      const double I = iso_constant(g, nu, IsoVariant::open).value;
      for (int k = 0; k < 60; ++k) {
        const auto f = random_function(rng, g, true);
        if (lp_norm_vertex(g, f, 1.0) == 0.0) continue;
        CHECK(sobolev_quotient(g, f, nu) >= I - 1e-9);
      }
    }
  }
}

TEST_CASE("closed Federer-Fleming on split and shifted functions") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, {2, 12});
    for (double nu : {1.5, 3.0, kInfinity}) {
      const double It = iso_constant(g, nu, IsoVariant::tilde).value;
      const double Itp = iso_constant(g, nu, IsoVariant::tilde_prime).value;
      const double q = conjugate(nu);
      for (int k = 0; k < 40; ++k) {
        auto f = random_function(rng, g, false);
        const double grad = grad_lp_norm(g, f, 1.0);
        CHECK(grad >= Itp * min_shift_norm(g, f, q) * (1.0 - 1e-9) - 1e-12);
        const auto I = balance_interval_l1(g, f);
        const double mid = (I.lo + I.hi) / 2.0;
        for (double& x : f) x -= mid;
        CHECK(is_split(g, f));
        CHECK(grad >= It * lp_norm_vertex(g, f, q) * (1.0 - 1e-9) - 1e-12);
      }
    }
  }
}
