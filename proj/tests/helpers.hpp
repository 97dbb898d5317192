// Shared test utilities.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "cgl/core.hpp"
#include "cgl/physics.hpp"
#include "cgl/verify.hpp"

namespace testutil {

using cgl::Mat9;
using cgl::Vec9;

inline Vec9 prim(double rho, double ux, double uy, double uz, double ppar, double pperp,
                 double bx, double by, double bz) {
  Vec9 w;
  w << rho, ux, uy, uz, ppar, pperp, bx, by, bz;
  return w;
}

// Fourth-order central finite-difference Jacobian of f at x.
inline Mat9 fd_jacobian(const std::function<Vec9(const Vec9&)>& f, const Vec9& x,
                        double rel = 1e-3) {
  Mat9 j;
  for (int k = 0; k < 9; ++k) {
    const double h = rel * std::max(1.0, std::abs(x[k]));
    Vec9 a = x, b = x, c = x, d = x;
    a[k] += 2 * h;
    b[k] += h;
    c[k] -= h;
    d[k] -= 2 * h;
    j.col(k) = (-f(a) + 8.0 * f(b) - 8.0 * f(c) + f(d)) / (12.0 * h);
  }
  return j;
}

inline double rel_err(const Mat9& a, const Mat9& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

inline double rel_err(const Vec9& a, const Vec9& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

}  // namespace testutil
