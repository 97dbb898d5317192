#include <doctest.h>

#include <cmath>

#include "cgl/cases.hpp"
#include "cgl/physics.hpp"
#include "helpers.hpp"

using namespace cgl;
using testutil::prim;

TEST_CASE("case registry") {
  CHECK(case_ids().size() == 9);
  CHECK(find_case("rp1").id == "brio_wu");
  CHECK(find_case("rp2").id == "ryu_jones");
  CHECK(find_case("rp3").id == "superfast");
  CHECK_THROWS_AS(find_case("nope"), ConfigError);
  for (const auto& id : case_ids()) CHECK(find_case(id).t_final > 0.0);
}

TEST_CASE("Brio-Wu states") {
  const TestCase& c = find_case("brio_wu");
  CHECK(c.x0 == -1.0);
  CHECK(c.x1 == 1.0);
  CHECK(c.t_final == 0.2);
  CHECK(c.left == prim(1, 0, 0, 0, 1, 1, 0.75, 1, 0));
  CHECK(c.right == prim(0.125, 0, 0, 0, 0.1, 0.1, 0.75, -1, 0));
  const Grid g = case_grid(c, 100, 2);
  const Field u = init_case(c, g);
  CHECK(cons_to_prim(u[g.index(49)])[0] == 1.0);
  CHECK(cons_to_prim(u[g.index(50)])[0] == 0.125);
  // outflow ghosts copy the edge cells
  CHECK(u[g.index(-2)] == u[g.index(0)]);
  CHECK(u[g.index(101)] == u[g.index(99)]);
}

TEST_CASE("RP6 states") {
  const TestCase& c = find_case("rp6");
  const double s4 = std::sqrt(4 * M_PI);
  CHECK(c.left[0] == doctest::Approx(1 / (4 * M_PI)));
  CHECK(c.left[2] == 1.0);
  CHECK(c.right[2] == -1.0);
  CHECK(c.left[7] == doctest::Approx(-1 / s4));
  CHECK(c.right[7] == doctest::Approx(1 / s4));
}

TEST_CASE("initial data is admissible") {
  for (const auto& id : case_ids()) {
    const TestCase& c = find_case(id);
    const Grid g = case_grid(c, 32, 2);
    const Field u = init_case(c, g);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const Vec9 w = cons_to_prim(u[g.index(i, j)]);
        CHECK(admissibility(w).region != Region::violated);
      }
    }
  }
}

TEST_CASE("Orszag-Tang data is point symmetric") {
  const TestCase& c = find_case("orszag_tang");
  const int n = 32;
  const Grid g = case_grid(c, n, 2);
  const Field u = init_case(c, g);
  double e = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec9 a = u[g.index(i, j)];
      const Vec9 b = u[g.index(n - 1 - i, n - 1 - j)];
      // rotation by 180 degrees flips the in-plane vector components
      Vec9 r = b;
      r[1] = -r[1];
      r[2] = -r[2];
      r[6] = -r[6];
      r[7] = -r[7];
      e = std::max(e, (a - r).cwiseAbs().maxCoeff());
    }
  }
  CHECK(e == 0.0);
  const Vec9 w = cons_to_prim(u[g.index(0, 0)]);
  CHECK(w[0] == doctest::Approx(25 / (36 * M_PI)));
  CHECK(w[4] == doctest::Approx(5 / (12 * M_PI)));
}

TEST_CASE("dimension mismatch") {
  const Grid g2 = make_grid_2d(8, 8, 0, 1, 0, 1, 2, Boundary::periodic);
  CHECK_THROWS_AS(init_case(find_case("brio_wu"), g2), DimensionMismatch);
  const Grid g1 = make_grid_1d(8, 0, 1, 2, Boundary::periodic);
  CHECK_THROWS_AS(init_case(find_case("orszag_tang"), g1), DimensionMismatch);
}

TEST_CASE("smooth advection solution") {
  CHECK(exact_accuracy_solution(0.0, 0.0)[0] == 2.0);
  CHECK(exact_accuracy_solution(0.25, 0.0)[0] == doctest::Approx(3.0));
  CHECK(exact_accuracy_solution(0.5, 0.25)[0] == doctest::Approx(3.0));
  CHECK(exact_accuracy_solution(0.3, 2.0)[0] == doctest::Approx(exact_accuracy_solution(0.3, 0.0)[0]));
  const Vec9 w = exact_accuracy_solution(0.1, 0.7);
  CHECK(w.tail<8>() == prim(0, 1, 0, 0, 1, 1, 1, 1, 0).tail<8>());
}
