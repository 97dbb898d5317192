#include <doctest.h>

#include <cmath>

#include "cgl/eigensystem.hpp"
#include "cgl/reconstruct.hpp"
#include "helpers.hpp"

using namespace cgl;
using testutil::prim;

TEST_CASE("minmod") {
  CHECK(minmod(1.0, 2.0) == 1.0);
  CHECK(minmod(-3.0, -2.0) == -2.0);
  CHECK(minmod(1.0, -1.0) == 0.0);
  CHECK(minmod(0.0, 5.0) == 0.0);
}

TEST_CASE("reconstruction coefficient tables") {
  const double k3[4][3] = {{11. / 6, -7. / 6, 1. / 3},
                           {1. / 3, 5. / 6, -1. / 6},
                           {-1. / 6, 5. / 6, 1. / 3},
                           {1. / 3, -7. / 6, 11. / 6}};
  const double k4[5][4] = {{25. / 12, -23. / 12, 13. / 12, -1. / 4},
                           {1. / 4, 13. / 12, -5. / 12, 1. / 12},
                           {-1. / 12, 7. / 12, 7. / 12, -1. / 12},
                           {1. / 12, -5. / 12, 13. / 12, 1. / 4},
                           {-1. / 4, 13. / 12, -23. / 12, 25. / 12}};
  for (int r = -1; r < 3; ++r)
    for (int j = 0; j < 3; ++j) CHECK(eno_coefficient(3, r, j) == doctest::Approx(k3[r + 1][j]).epsilon(1e-15));
  for (int r = -1; r < 4; ++r)
    for (int j = 0; j < 4; ++j) CHECK(eno_coefficient(4, r, j) == doctest::Approx(k4[r + 1][j]).epsilon(1e-15));
  CHECK_THROWS_AS(eno_coefficient(5, 0, 0), ConfigError);
  CHECK_THROWS_AS(eno_coefficient(3, 3, 0), ConfigError);
}

TEST_CASE("face values reproduce cell averages of polynomials") {
  // cell averages of x^m on unit cells [i, i+1]
  auto avg = [](int m, int i) { return (std::pow(i + 1.0, m + 1) - std::pow(i, m + 1.0)) / (m + 1); };
  for (int k : {3, 4}) {
    for (int m = 0; m < k; ++m) {
      double a[9];
      for (int i = 0; i < 9; ++i) a[i] = avg(m, i);
      const FaceValues f = reconstruct_faces(a, 9, 4, k);
      CHECK(f.left == doctest::Approx(std::pow(4.0, m)).epsilon(1e-12));
      CHECK(f.right == doctest::Approx(std::pow(5.0, m)).epsilon(1e-12));
    }
  }
}

TEST_CASE("stencil selection avoids a discontinuity") {
  double a[9] = {0, 0, 0, 0, 0, 1, 1, 1, 1};
  const FaceValues f = reconstruct_faces(a, 9, 3, 4);
  CHECK(f.left == 0.0);
  CHECK(f.right == 0.0);
  const FaceValues g = reconstruct_faces(a, 9, 5, 4);
  CHECK(g.left == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.right == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(reconstruct_faces(a, 9, 0, 3), InsufficientGhostWidth);
  CHECK_THROWS_AS(reconstruct_faces(a, 9, 0, 2), InsufficientGhostWidth);
}

namespace {

std::vector<Vec9> window(double dx, int k, double x0) {
  std::vector<Vec9> c;
  for (int j = 0; j < 2 * k; ++j) {
    const double x = x0 + (j - k + 0.5) * dx;
    c.push_back(prim(1.5 + 0.4 * std::sin(x), 0.3 * std::cos(x), 0.1, -0.2 * std::sin(2 * x),
                     1 + 0.2 * std::cos(x), 1.2 + 0.1 * std::sin(x), 0.8, 0.6 + 0.3 * std::cos(x),
                     0.2));
  }
  return c;
}

}  // namespace

TEST_CASE("uniform window gives zero jump") {
  const Vec9 w = prim(1.2, 0.3, -0.1, 0.2, 0.9, 1.1, 0.4, 0.5, -0.3);
  for (int k = 1; k <= 4; ++k) {
    const ScaledJump j = scaled_entropy_jump(std::vector<Vec9>(2 * k, w), Axis::x, k);
    CHECK(j.jump.cwiseAbs().maxCoeff() == 0.0);
    CHECK(j.w_rec.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("first order returns the raw jump") {
  const auto c = window(0.3, 1, 0.0);
  const ScaledJump j = scaled_entropy_jump(c, Axis::y, 1);
  CHECK(testutil::rel_err(j.jump, Vec9(entropy_vars(c[1]) - entropy_vars(c[0]))) == 0.0);
}

TEST_CASE("reconstructed jump keeps the sign of the raw jump") {
  std::mt19937_64 rng(51);
  for (int s = 0; s < 2000; ++s) {
    const int k = 2 + s % 3;
    std::vector<Vec9> c;
    for (int j = 0; j < 2 * k; ++j) c.push_back(random_admissible_state(rng));
    const ScaledJump j = scaled_entropy_jump(c, s % 2 ? Axis::x : Axis::y, k);
    for (int q = 0; q < 9; ++q) CHECK(j.w_rec[q] * j.w_raw[q] >= 0.0);
    if (k == 2) {
      for (int q = 0; q < 9; ++q) CHECK(std::abs(j.w_rec[q]) <= std::abs(j.w_raw[q]));
    }
  }
}

TEST_CASE("fast path matches the scalar reconstruction") {
  std::mt19937_64 rng(52);
  for (int s = 0; s < 500; ++s) {
    const int k = 3 + s % 2;
    std::vector<Vec9> c;
    for (int j = 0; j < 2 * k; ++j) c.push_back(random_admissible_state(rng));
    const ScaledJump j = scaled_entropy_jump(c, Axis::x, k);
    const Mat9 rt = entropy_scaled_eigenvectors(c[k - 1], c[k], Axis::x).r_tilde;
    for (int q = 0; q < 9; ++q) {
      double a[8];
      for (int i = 0; i < 2 * k; ++i) a[i] = rt.col(q).dot(entropy_vars(c[i]));
      const double plus = reconstruct_faces(a, 2 * k, k, k).left;
      const double minus = reconstruct_faces(a, 2 * k, k - 1, k).right;
      CHECK(j.w_rec[q] == doctest::Approx(plus - minus).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("reconstructed jump vanishes at the design order") {
  for (int k = 2; k <= 4; ++k) {
    const double e1 = scaled_entropy_jump(window(0.02, k, 0.7), Axis::x, k).jump.norm();
    const double e2 = scaled_entropy_jump(window(0.01, k, 0.7), Axis::x, k).jump.norm();
    CHECK(std::log2(e1 / e2) > k - 0.2);
  }
  const double r1 = scaled_entropy_jump(window(0.02, 1, 0.7), Axis::x, 1).jump.norm();
  const double r2 = scaled_entropy_jump(window(0.01, 1, 0.7), Axis::x, 1).jump.norm();
  CHECK(std::log2(r1 / r2) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("window size and order are validated") {
  const auto c = window(0.1, 3, 0.0);
  CHECK_THROWS_AS(scaled_entropy_jump(c, Axis::x, 4), InsufficientGhostWidth);
  CHECK_THROWS_AS(scaled_entropy_jump(c, Axis::x, 5), ConfigError);
}
