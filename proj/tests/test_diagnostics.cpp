#include <doctest.h>

#include <cmath>

#include "cgl/diagnostics.hpp"
#include "cgl/solver.hpp"
#include "helpers.hpp"

using namespace cgl;
using testutil::prim;

TEST_CASE("L1 error") {
  const std::vector<double> a{1, 2, 3, 4};
  CHECK(l1_error(a, a, 0.25) == 0.0);
  std::vector<double> b = a;
  for (double& x : b) x += 0.5;
  CHECK(l1_error(a, b, 0.25) == doctest::Approx(0.5));
  const int n = 1000;
  std::vector<double> s(n), z(n, 0.0);
  for (int i = 0; i < n; ++i) s[i] = std::sin(2 * M_PI * (i + 0.5) / n);
  CHECK(l1_error(s, z, 1.0 / n) == doctest::Approx(2 / M_PI).epsilon(1e-5));
  CHECK(l1_error(a, b, 0.5, 0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(l1_error(a, z, 0.1), ShapeMismatch);
}

TEST_CASE("convergence orders") {
  const auto o = convergence_order({4.0, 1.0}, {10, 20});
  REQUIRE(o.size() == 1);
  CHECK(o[0] == doctest::Approx(2.0));
  CHECK(convergence_order({5.53282e-3, 7.07952e-4}, {40, 80})[0] ==
        doctest::Approx(2.966).epsilon(1e-3));
  CHECK_THROWS_AS(convergence_order({1.0, 0.0}, {10, 20}), NonPositiveError);
  CHECK_THROWS_AS(convergence_order({1.0}, {10, 20}), ShapeMismatch);
}

TEST_CASE("pairwise sum") {
  CHECK(pairwise_sum({}) == 0.0);
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  std::vector<double> w{1e16, 1.0, -1e16, 1.0};
  CHECK(std::isfinite(pairwise_sum(w)));
}

TEST_CASE("dt refinement factor") {
  CHECK(dt_refinement(2, 2, 40, 80) == 1.0);
  CHECK(dt_refinement(4, 4, 40, 320) == 1.0);
  CHECK(dt_refinement(3, 2, 40, 80) == doctest::Approx(std::pow(0.5, 0.5)));
  CHECK(dt_refinement(4, 2, 40, 160) == doctest::Approx(0.25));
  CHECK(dt_refinement(4, 2, 40, 40) == 1.0);
}

TEST_CASE("entropy totals and anisotropy") {
  const Grid g = make_grid_1d(4, 0, 1, 2, Boundary::periodic);
  const Vec9 w = prim(2, 3, 0, 0, 1.5, 0.7, 1, 0, 0);
  Field u(g.size(), prim_to_cons(w));
  const double e = -2 * std::log(1.5 * 0.7 * 0.7 / 32.0);
  CHECK(total_entropy(u, g) == doctest::Approx(4 * e));
  CHECK(max_abs_entropy(u, g) == doctest::Approx(std::abs(e)));
  CHECK(entropy_change(u, u, g) == 0.0);
  const AnisotropyStats a = anisotropy(u, g);
  CHECK(a.median == doctest::Approx(0.8 / (2.9 / 3)));
  CHECK(a.max == doctest::Approx(a.median));
  CHECK(count_region_violations(u, g) == 0);
  u[g.index(1)] = prim_to_cons(prim(1, 0, 0, 0, 10, 1, 1, 0, 0));
  CHECK(count_region_violations(u, g) == 1);
  CHECK(density(u, g).size() == 4);
}
