#include "cgl/noncons.hpp"

#include <cmath>

#include "cgl/physics.hpp"

namespace cgl {

namespace {

Vec9 noncons_apply_x(const Vec9& w, const Vec9& g) {
  const double rho = w[0], ux = w[1], uy = w[2], uz = w[3];
  const double ppar = w[4], pperp = w[5];
  const double Bx = w[6], By = w[7], Bz = w[8];
  const double bmag = std::sqrt(Bx * Bx + By * By + Bz * Bz);
  if (!(bmag * bmag > kEpsB)) throw DegenerateField("|B| = " + std::to_string(bmag));
  const double bx = Bx / bmag, by = By / bmag, bz = Bz / bmag;
  const double dp = ppar - pperp;
  const double gx = dp * (1.0 - bx * bx);
  const double gy = dp * (1.0 - by * by);
  const double gz = dp * (1.0 - bz * bz);
  const double bu = bx * ux + by * uy + bz * uz;
  const double u2 = ux * ux + uy * uy + uz * uz;
  const double ib = 1.0 / bmag;

  // common part of rows 2-4: gradient of dP contracted with g
  const double base = -0.5 * u2 * g[0] + ux * g[1] + uy * g[2] + uz * g[3] + 1.5 * g[4] -
                      g[5] + Bx * g[6] + By * g[7] + Bz * g[8];

  Vec9 r = Vec9::Zero();
  r[1] = bx * bx * base +
         (2.0 * gx * bx * g[6] - 2.0 * dp * by * bx * bx * g[7] - 2.0 * dp * bz * bx * bx * g[8]) *
             ib;
  r[2] = bx * by * base +
         ((gx * by - dp * by * bx * bx) * g[6] + (gy * bx - dp * bx * by * by) * g[7] -
          2.0 * dp * bx * by * bz * g[8]) *
             ib;
  r[3] = bx * bz * base +
         ((gx * bz - dp * bz * bx * bx) * g[6] - 2.0 * dp * bx * by * bz * g[7] +
          (gz * bx - dp * bx * bz * bz) * g[8]) *
             ib;

  const double k = 2.0 * ppar * bx / rho;
  r[4] = k * (-bu * g[0] + bx * g[1] + by * g[2] + bz * g[3]);

  const double s = bu + bx * ux;
  const double th1 = s * gx * ib - dp * bx * bx * by * uy * ib - dp * bx * bx * bz * uz * ib;
  const double th2 = gy * bx * uy * ib - dp * bx * by * bz * uz * ib - s * dp * bx * by * ib;
  const double th3 = gz * bx * uz * ib - dp * bx * by * bz * uy * ib - s * dp * bx * bz * ib;
  const double y1 = -bx * bu * 0.5 * u2 - dp * bx * bu / rho;
  const double y2 = bx * bu * ux + dp * bx * bx / rho;
  const double y3 = bx * bu * uy + dp * bx * by / rho;
  const double y4 = bx * bu * uz + dp * bx * bz / rho;
  const double xb = bx * bu;
  r[5] = y1 * g[0] + y2 * g[1] + y3 * g[2] + y4 * g[3] + 1.5 * xb * g[4] - xb * g[5] +
         (xb * Bx + th1) * g[6] + (xb * By + th2) * g[7] + (xb * Bz + th3) * g[8];
  return r;
}

}  // namespace

Vec9 noncons_apply(const Vec9& w, const Vec9& g, Axis d) {
  if (d == Axis::x) return noncons_apply_x(w, g);
  return swap_xy(noncons_apply_x(swap_xy(w), swap_xy(g)));
}

Mat9 noncons_matrix(const Vec9& w, Axis d) {
  Mat9 c;
  for (int j = 0; j < 9; ++j) c.col(j) = noncons_apply(w, Vec9::Unit(j), d);
  return c;
}

Vec9 godunov_term(const Vec9& v, double div_b) { return godunov_phi(v).dphi * div_b; }

std::vector<double> central_diff(const std::vector<double>& a, int ghost, double dx,
                                 int order) {
  if (order != 2 && order != 4) throw ConfigError("central_diff order must be 2 or 4");
  const int need = order / 2;
  if (ghost < need) {
    throw InsufficientGhostWidth("order " + std::to_string(order) + " needs " +
                                 std::to_string(need) + " ghost cells, have " +
                                 std::to_string(ghost));
  }
  const int n = static_cast<int>(a.size()) - 2 * ghost;
  if (n < 0) throw InsufficientGhostWidth("array shorter than its ghost padding");
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    const int c = i + ghost;
    if (order == 2) {
      d[i] = (a[c + 1] - a[c - 1]) / (2.0 * dx);
    } else {
      d[i] = (-a[c + 2] + 8.0 * a[c + 1] - 8.0 * a[c - 1] + a[c - 2]) / (12.0 * dx);
    }
  }
  return d;
}

}  // namespace cgl
