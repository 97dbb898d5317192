#include "cgl/flux.hpp"

#include <cmath>

#include "cgl/physics.hpp"

namespace cgl {

namespace {

Vec9 physical_flux_x(const Vec9& w) {
  const double rho = w[0], ux = w[1], uy = w[2], uz = w[3];
  const double ppar = w[4], pperp = w[5];
  const double bx = w[6], by = w[7], bz = w[8];
  const double b2 = bx * bx + by * by + bz * bz;
  const double u2 = ux * ux + uy * uy + uz * uz;
  const double e = 0.5 * rho * u2 + 0.5 * b2 + pperp + 0.5 * ppar;
  const double ub = ux * bx + uy * by + uz * bz;
  Vec9 f;
  f[0] = rho * ux;
  f[1] = rho * ux * ux + pperp - (bx * bx - 0.5 * b2);
  f[2] = rho * ux * uy - bx * by;
  f[3] = rho * ux * uz - bx * bz;
  f[4] = ppar * ux;
  f[5] = ux * (e + pperp + 0.5 * b2) - bx * ub;
  f[6] = 0.0;
  f[7] = ux * by - uy * bx;
  f[8] = ux * bz - uz * bx;
  return f;
}

Vec9 ec_flux_x(const Vec9& wl, const Vec9& wr) {
  const double rl = wl[0], rr = wr[0];
  const double bperp_l = rl / wl[5], bperp_r = rr / wr[5];
  const double bpar_l = rl / wl[4], bpar_r = rr / wr[4];

  const double rho_ln = log_mean(rl, rr);
  const double bperp_ln = log_mean(bperp_l, bperp_r);
  const double bpar_ln = log_mean(bpar_l, bpar_r);

  const double rho_m = 0.5 * (rl + rr);
  const double bperp_m = 0.5 * (bperp_l + bperp_r);
  const double ux = 0.5 * (wl[1] + wr[1]);
  const double uy = 0.5 * (wl[2] + wr[2]);
  const double uz = 0.5 * (wl[3] + wr[3]);
  const double bx = 0.5 * (wl[6] + wr[6]);
  const double by = 0.5 * (wl[7] + wr[7]);
  const double bz = 0.5 * (wl[8] + wr[8]);
  const double u2_m = 0.5 * ((wl[1] * wl[1] + wl[2] * wl[2] + wl[3] * wl[3]) +
                             (wr[1] * wr[1] + wr[2] * wr[2] + wr[3] * wr[3]));
  const double b2_m = 0.5 * ((wl[6] * wl[6] + wl[7] * wl[7] + wl[8] * wl[8]) +
                             (wr[6] * wr[6] + wr[7] * wr[7] + wr[8] * wr[8]));
  const double bux_m = 0.5 * (bperp_l * wl[1] + bperp_r * wr[1]);
  const double buy_m = 0.5 * (bperp_l * wl[2] + bperp_r * wr[2]);
  const double buz_m = 0.5 * (bperp_l * wl[3] + bperp_r * wr[3]);

  Vec9 f;
  f[0] = rho_ln * ux;
  f[1] = rho_m / bperp_m + ux * f[0] + 0.5 * b2_m - bx * bx;
  f[2] = uy * f[0] - bx * by;
  f[3] = uz * f[0] - bx * bz;
  f[4] = f[0] / bpar_ln;
  f[6] = 0.0;
  f[7] = (bux_m * by - buy_m * bx) / bperp_m;
  f[8] = (bux_m * bz - buz_m * bx) / bperp_m;
  f[5] = 0.5 * (2.0 / bperp_ln - u2_m) * f[0] + ux * f[1] + uy * f[2] + uz * f[3] +
         0.5 * f[4] + bx * f[6] + by * f[7] + bz * f[8] - 0.5 * ux * b2_m +
         (ux * bx + uy * by + uz * bz) * bx;
  return f;
}

}  // namespace

Vec9 physical_flux(const Vec9& w, Axis d) {
  if (d == Axis::x) return physical_flux_x(w);
  return swap_xy(physical_flux_x(swap_xy(w)));
}

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw NonPositiveInput("log_mean(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  // f = (b - a)/(b + a) and ln(b/a) = 2 atanh(f); |b/a - 1| < 1e-4
  // corresponds to |f| < 5e-5.
  const double f = (b - a) / (b + a);
  const double u = f * f;
  if (u < 2.5e-9) {
    return (a + b) / (2.0 * (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0)))));
  }
  return (b - a) / (2.0 * std::atanh(f));
}

Vec9 ec_flux(const Vec9& wl, const Vec9& wr, Axis d) {
  if (d == Axis::x) return ec_flux_x(wl, wr);
  return swap_xy(ec_flux_x(swap_xy(wl), swap_xy(wr)));
}

double ec_entropy_flux(const Vec9& wl, const Vec9& wr, const Vec9& f, Axis d) {
  const Vec9 vl = entropy_vars(wl), vr = entropy_vars(wr);
  const int n = d == Axis::x ? 6 : 7;
  const double phil = 2.0 * wl[0] / wl[5] *
                      (wl[1] * wl[6] + wl[2] * wl[7] + wl[3] * wl[8]);
  const double phir = 2.0 * wr[0] / wr[5] *
                      (wr[1] * wr[6] + wr[2] * wr[7] + wr[3] * wr[8]);
  return 0.5 * (vl + vr).dot(f) + 0.25 * (phil + phir) * (wl[n] + wr[n]) -
         0.5 * (potential_flux(wl, d) + potential_flux(wr, d));
}

Vec9 ec_flux_fourth(const std::array<Vec9, 4>& w, Axis d) {
  return (4.0 / 3.0) * ec_flux(w[1], w[2], d) -
         (1.0 / 6.0) * (ec_flux(w[0], w[2], d) + ec_flux(w[1], w[3], d));
}

}  // namespace cgl
