#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "cgl/eigensystem.hpp"
#include "cgl/flux.hpp"
#include "helpers.hpp"

using namespace cgl;
using testutil::prim;

namespace {

// Primitive Jacobian of the conservative flux plus the Godunov term.
Mat9 primitive_jacobian(const Vec9& w, Axis d) {
  const Mat9 df = testutil::fd_jacobian([d](const Vec9& x) { return physical_flux(x, d); }, w);
  Mat9 a = df;
  a.col(d == Axis::x ? 6 : 7) += godunov_phi(entropy_vars(w)).dphi;
  return du_dw(w).inverse() * a;
}

}  // namespace

TEST_CASE("Y has the closed-form entries") {
  const double rho = 1.7, ppar = 0.9, pperp = 1.3;
  const Mat9 y = y_matrix(prim(rho, 0.2, -0.1, 0.3, ppar, pperp, 0.5, 0.4, -0.6));
  CHECK(y(0, 0) == doctest::Approx(1 / (8 * rho)));
  CHECK(y(1, 1) == doctest::Approx(1 / (8 * rho)));
  CHECK(y(7, 7) == doctest::Approx(1 / (8 * rho)));
  CHECK(y(8, 8) == doctest::Approx(1 / (8 * rho)));
  CHECK(y(2, 2) == doctest::Approx(pperp / (4 * rho * rho)));
  CHECK(y(6, 6) == doctest::Approx(pperp / (4 * rho * rho)));
  CHECK(y(3, 3) == doctest::Approx(rho / 4));
  CHECK(y(3, 5) == doctest::Approx(ppar / 4));
  CHECK(y(5, 3) == doctest::Approx(ppar / 4));
  CHECK(y(5, 5) == doctest::Approx(5 * ppar * ppar / (4 * rho)));
  CHECK(y(4, 4) == doctest::Approx(pperp / (2 * rho)));
  Mat9 off = y;
  for (int k = 0; k < 9; ++k) off(k, k) = 0.0;
  off(3, 5) = off(5, 3) = 0.0;
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("T squares to Y and is positive definite") {
  std::mt19937_64 rng(41);
  for (int s = 0; s < 1000; ++s) {
    const Vec9 w = random_admissible_state(rng);
    const Mat9 t = scaling_matrix(w);
    const Mat9 y = y_matrix(w);
    CHECK(testutil::rel_err(Mat9(t * t), y) < 1e-13);
    CHECK((t - t.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Eigen::SelfAdjointEigenSolver<Mat9> es(t);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("2x2 square root") {
  const Eigen::Matrix2d r = block_sqrt(4, 0, 0, 9);
  CHECK(r(0, 0) == doctest::Approx(2.0));
  CHECK(r(1, 1) == doctest::Approx(3.0));
  CHECK(r(0, 1) == 0.0);
  Eigen::Matrix2d m;
  m << 2, 1, 1, 3;
  const Eigen::Matrix2d q = block_sqrt(2, 1, 1, 3);
  CHECK((q * q - m).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(block_sqrt(0, 0, 0, 0), SqrtBranch);
  CHECK_THROWS_AS(block_sqrt(1, 2, 2, 1), SqrtBranch);
}

TEST_CASE("dU/dW") {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 200; ++s) {
    const Vec9 w = random_admissible_state(rng);
    const Mat9 fd = testutil::fd_jacobian([](const Vec9& x) { return prim_to_cons(x); }, w);
    CHECK(testutil::rel_err(du_dw(w), fd) < 1e-10);
    CHECK(du_dw(w).determinant() > 0.0);
  }
  const Mat9 m = du_dw(prim(2, 0, 0, 0, 1, 1, 0.3, 0.4, 0.5));
  CHECK(m(5, 4) == 0.5);
  CHECK(m(5, 5) == 1.0);
  CHECK(m(5, 6) == 0.3);
  CHECK(m(5, 0) == 0.0);
}

TEST_CASE("right eigenvectors diagonalise the primitive Jacobian") {
  std::mt19937_64 rng(43);
  for (int s = 0; s < 300; ++s) {
    const Vec9 w = random_admissible_state(rng);
    for (Axis d : {Axis::x, Axis::y}) {
      const Mat9 a = primitive_jacobian(w, d);
      const Mat9 r = eigensystem_primitive(w, d);
      const Vec9 l = conservative_eigenvalues(w, d);
      const Mat9 lhs = a * r;
      const Mat9 rhs = r * l.asDiagonal();
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <=
            1e-7 * std::max(1.0, a.cwiseAbs().maxCoeff() * r.cwiseAbs().maxCoeff()));
      CHECK(std::abs(r.determinant()) > 0.0);
    }
  }
}

TEST_CASE("slow, Alfven and fast speeds interlace") {
  std::mt19937_64 rng(44);
  for (int s = 0; s < 1000; ++s) {
    const Vec9 w = random_admissible_state(rng);
    const Vec9 l = conservative_eigenvalues(w, Axis::y);
    const double u = w[2];
    const double cf = u - l[0], cs = u - l[1], va = u - l[2];
    CHECK(cs <= va * (1 + 1e-14));
    CHECK(va <= cf * (1 + 1e-14));
    for (int k = 0; k < 9; ++k) CHECK(l[k] + l[8 - k] == doctest::Approx(2 * u));
  }
}

TEST_CASE("scaled eigenvectors reproduce dU/dV") {
  std::mt19937_64 rng(45);
  for (int s = 0; s < 300; ++s) {
    const Vec9 w = random_admissible_state(rng);
    const Vec9 v = entropy_vars(w);
    const Mat9 dudv =
        testutil::fd_jacobian([](const Vec9& x) { return cons_from_entropy_vars(x); }, v, 1e-4);
    for (Axis d : {Axis::x, Axis::y}) {
      const EigenDecomp e = entropy_scaled_eigenvectors(w, d);
      const Mat9 rrt = e.r_tilde * e.r_tilde.transpose();
      CHECK(testutil::rel_err(rrt, dudv) < 1e-6);
      // the fast path agrees with dU/dW R_W T
      const Mat9 slow = du_dw(w) * eigensystem_primitive(w, d) * scaling_matrix(w);
      CHECK(testutil::rel_err(e.r_tilde, slow) < 1e-12);
      CHECK(e.lambda_max ==
            doctest::Approx(conservative_eigenvalues(w, d).cwiseAbs().maxCoeff()).epsilon(1e-12));
    }
  }
}

TEST_CASE("diffusion matrix is symmetric positive semidefinite") {
  std::mt19937_64 rng(46);
  for (int s = 0; s < 500; ++s) {
    const Vec9 wl = random_admissible_state(rng);
    const Vec9 wr = random_admissible_state(rng);
    const Mat9 dm = diffusion_matrix(entropy_scaled_eigenvectors(wl, wr, Axis::x));
    CHECK((dm - dm.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * dm.cwiseAbs().maxCoeff());
    const Eigen::SelfAdjointEigenSolver<Mat9> es(dm);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12 * es.eigenvalues().maxCoeff());
  }
}
