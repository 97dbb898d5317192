#include "cgl/eigensystem.hpp"

#include <algorithm>
#include <cmath>

#include "cgl/physics.hpp"

namespace cgl {

namespace {

struct WaveFactors {
  double cf, cs, vax, a;
  double af, as;
  double betay, betaz;
  double sign;
};

WaveFactors wave_factors_x(const Vec9& w) {
  const double rho = w[0];
  const double bx = w[6], by = w[7], bz = w[8];
  const double b2 = bx * bx + by * by + bz * bz;
  WaveFactors f{};
  const double a2 = 2.0 * w[5] / rho;
  const double vax2 = bx * bx / rho;
  const double sum = b2 / rho + a2;
  const double disc = std::sqrt(std::max(sum * sum - 4.0 * vax2 * a2, 0.0));
  const double cf2 = 0.5 * (sum + disc);
  const double cs2 = std::max(0.5 * (sum - disc), 0.0);
  f.cf = std::sqrt(cf2);
  f.cs = std::sqrt(cs2);
  f.vax = std::sqrt(vax2);
  f.a = std::sqrt(a2);

  const double gap = cf2 - cs2;
  if (std::abs(gap) < 1e-12 * cf2) {
    f.af = 1.0;
    f.as = 0.0;
  } else {
    f.af = std::sqrt(std::clamp((a2 - cs2) / gap, 0.0, 1.0));
    f.as = std::sqrt(std::clamp((cf2 - a2) / gap, 0.0, 1.0));
  }

  const double bt2 = by * by + bz * bz;
  if (bt2 < 1e-12 * b2) {
    f.betay = f.betaz = 1.0 / std::sqrt(2.0);
  } else {
    const double bt = std::sqrt(bt2);
    f.betay = by / bt;
    f.betaz = bz / bt;
  }
  f.sign = bx >= 0.0 ? 1.0 : -1.0;
  return f;
}

void fill_primitive_x(const Vec9& w, const WaveFactors& f, Mat9& R) {
  const double rho = w[0], ppar = w[4];
  const double sr = std::sqrt(rho);
  const double a2 = f.a * f.a;
  const double af = f.af, as = f.as, cf = f.cf, cs = f.cs;
  const double by = f.betay, bz = f.betaz, S = f.sign, a = f.a;
  // clang-format off
  R << af*rho,        as*rho,         0,          1, 0, 0, 0,          as*rho,         af*rho,
       -af*cf,        -as*cs,         0,          0, 0, 0, 0,          as*cs,          af*cf,
       as*by*cs*S,    -af*by*cf*S,    -bz,        0, 0, 0, bz,         af*by*cf*S,     -as*by*cs*S,
       as*bz*cs*S,    -af*bz*cf*S,    by,         0, 0, 0, -by,        af*bz*cf*S,     -as*bz*cs*S,
       af*ppar,       as*ppar,        0,          0, 0, 1, 0,          as*ppar,        af*ppar,
       a2*af*rho,     a2*as*rho,      0,          0, 0, 0, 0,          a2*as*rho,      a2*af*rho,
       0,             0,              0,          0, 1, 0, 0,          0,              0,
       a*as*by*sr,    -a*af*by*sr,    -bz*sr*S,   0, 0, 0, -bz*sr*S,   -a*af*by*sr,    a*as*by*sr,
       a*as*bz*sr,    -a*af*bz*sr,    by*sr*S,    0, 0, 0, by*sr*S,    -a*af*bz*sr,    a*as*bz*sr;
  // clang-format on
}

Mat9 eigensystem_primitive_x(const Vec9& w) {
  Mat9 R;
  fill_primitive_x(w, wave_factors_x(w), R);
  return R;
}

// Row permutation P (swap u_x/u_y and B_x/B_y).
Mat9 swap_rows(const Mat9& m) {
  Mat9 r = m;
  r.row(1).swap(r.row(2));
  r.row(6).swap(r.row(7));
  return r;
}

}  // namespace

Mat9 eigensystem_primitive(const Vec9& w, Axis d) {
  check_positive(w);
  if (d == Axis::x) return eigensystem_primitive_x(w);
  return swap_rows(eigensystem_primitive_x(swap_xy(w)));
}

Vec9 conservative_eigenvalues(const Vec9& w, Axis d) {
  const Vec9 ws = d == Axis::x ? w : swap_xy(w);
  const WaveFactors f = wave_factors_x(ws);
  const double u = ws[1];
  Vec9 l;
  l << u - f.cf, u - f.cs, u - f.vax, u, u, u, u + f.vax, u + f.cs, u + f.cf;
  return l;
}

Mat9 du_dw(const Vec9& w) {
  const double rho = w[0], ux = w[1], uy = w[2], uz = w[3];
  Mat9 m = Mat9::Identity();
  m(1, 0) = ux;
  m(2, 0) = uy;
  m(3, 0) = uz;
  m(1, 1) = m(2, 2) = m(3, 3) = rho;
  m(5, 0) = 0.5 * (ux * ux + uy * uy + uz * uz);
  m(5, 1) = rho * ux;
  m(5, 2) = rho * uy;
  m(5, 3) = rho * uz;
  m(5, 4) = 0.5;
  m(5, 5) = 1.0;
  m(5, 6) = w[6];
  m(5, 7) = w[7];
  m(5, 8) = w[8];
  return m;
}

Mat9 y_matrix(const Vec9& w) {
  const double rho = w[0], ppar = w[4], pperp = w[5];
  Mat9 y = Mat9::Zero();
  y(0, 0) = y(1, 1) = y(7, 7) = y(8, 8) = 1.0 / (8.0 * rho);
  y(2, 2) = y(6, 6) = pperp / (4.0 * rho * rho);
  y(3, 3) = rho / 4.0;
  y(3, 5) = y(5, 3) = ppar / 4.0;
  y(5, 5) = 5.0 * ppar * ppar / (4.0 * rho);
  y(4, 4) = pperp / (2.0 * rho);
  return y;
}

Eigen::Matrix2d block_sqrt(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det >= 0.0)) throw SqrtBranch("negative determinant " + std::to_string(det));
  const double s = std::sqrt(det);
  const double t2 = a + d + 2.0 * s;
  if (!(t2 > 0.0)) throw SqrtBranch("t = 0 in block square root");
  const double t = std::sqrt(t2);
  Eigen::Matrix2d r;
  r << (a + s) / t, b / t, c / t, (d + s) / t;
  return r;
}

Mat9 scaling_matrix(const Vec9& w) {
  const Mat9 y = y_matrix(w);
  Mat9 t = Mat9::Zero();
  for (int k : {0, 1, 2, 4, 6, 7, 8}) t(k, k) = std::sqrt(y(k, k));
  const Eigen::Matrix2d r = block_sqrt(y(3, 3), y(3, 5), y(5, 3), y(5, 5));
  t(3, 3) = r(0, 0);
  t(3, 5) = r(0, 1);
  t(5, 3) = r(1, 0);
  t(5, 5) = r(1, 1);
  return t;
}

EigenDecomp entropy_scaled_eigenvectors(const Vec9& w, Axis d) {
  check_positive(w);
  const Vec9 ws = d == Axis::x ? w : swap_xy(w);
  const WaveFactors f = wave_factors_x(ws);
  EigenDecomp e;
  Mat9& r = e.r_tilde;
  fill_primitive_x(ws, f, r);

  // R_W T with T = sqrt(Y): diagonal except for the (3,5) block
  const double rho = ws[0], ppar = ws[4], pperp = ws[5];
  const double t0 = std::sqrt(1.0 / (8.0 * rho));
  const double t2 = std::sqrt(pperp / (4.0 * rho * rho));
  const double t4 = std::sqrt(pperp / (2.0 * rho));
  const Eigen::Matrix2d blk =
      block_sqrt(rho / 4.0, ppar / 4.0, ppar / 4.0, 5.0 * ppar * ppar / (4.0 * rho));
  r.col(0) *= t0;
  r.col(1) *= t0;
  r.col(7) *= t0;
  r.col(8) *= t0;
  r.col(2) *= t2;
  r.col(6) *= t2;
  r.col(4) *= t4;
  const Vec9 c3 = r.col(3), c5 = r.col(5);
  r.col(3) = c3 * blk(0, 0) + c5 * blk(1, 0);
  r.col(5) = c3 * blk(0, 1) + c5 * blk(1, 1);

  // dU/dW applied row-wise; the energy row reads the untouched rows 1-3
  const double ux = ws[1], uy = ws[2], uz = ws[3];
  const double u2h = 0.5 * (ux * ux + uy * uy + uz * uz);
  r.row(5) = (u2h * r.row(0) + rho * (ux * r.row(1) + uy * r.row(2) + uz * r.row(3)) +
              0.5 * r.row(4) + r.row(5) + ws[6] * r.row(6) + ws[7] * r.row(7) +
              ws[8] * r.row(8))
                 .eval();
  r.row(1) = ux * r.row(0) + rho * r.row(1);
  r.row(2) = uy * r.row(0) + rho * r.row(2);
  r.row(3) = uz * r.row(0) + rho * r.row(3);
  if (d == Axis::y) {
    r.row(1).swap(r.row(2));
    r.row(6).swap(r.row(7));
  }
  e.lambda_max = std::abs(ws[1]) + f.cf;
  e.dir = d;
  return e;
}

EigenDecomp entropy_scaled_eigenvectors(const Vec9& wl, const Vec9& wr, Axis d) {
  return entropy_scaled_eigenvectors(Vec9(0.5 * (wl + wr)), d);
}

Mat9 diffusion_matrix(const EigenDecomp& e) {
  Mat9 dm = e.lambda_max * (e.r_tilde * e.r_tilde.transpose());
#ifndef NDEBUG
  const Mat9 alt = e.r_tilde * (e.lambda_max * Mat9::Identity()) * e.r_tilde.transpose();
  if ((dm - alt).norm() > 1e-10 * (1.0 + dm.norm())) {
    throw Error("diffusion matrix forms disagree");
  }
#endif
  return dm;
}

}  // namespace cgl
