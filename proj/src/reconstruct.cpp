#include "cgl/reconstruct.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>

#include "cgl/eigensystem.hpp"
#include "cgl/physics.hpp"

namespace cgl {

namespace {

// c_{r,j} = sum_{m=j+1}^{k} [sum_{l!=m} prod_{q!=m,l} (r-q+1)] / prod_{l!=m} (m-l)
double shu_coefficient(int k, int r, int j) {
  double c = 0.0;
  for (int m = j + 1; m <= k; ++m) {
    double num = 0.0;
    for (int l = 0; l <= k; ++l) {
      if (l == m) continue;
      double p = 1.0;
      for (int q = 0; q <= k; ++q) {
        if (q == m || q == l) continue;
        p *= static_cast<double>(r - q + 1);
      }
      num += p;
    }
    double den = 1.0;
    for (int l = 0; l <= k; ++l) {
      if (l != m) den *= static_cast<double>(m - l);
    }
    c += num / den;
  }
  return c;
}

struct CoeffTable {
  // [k][r+1][j] for k = 3, 4
  std::array<std::array<std::array<double, 4>, 5>, 5> c{};
  CoeffTable() {
    for (int k = 3; k <= 4; ++k)
      for (int r = -1; r < k; ++r)
        for (int j = 0; j < k; ++j) c[k][r + 1][j] = shu_coefficient(k, r, j);
  }
};

const CoeffTable& table() {
  static const CoeffTable t;
  return t;
}

// Leftmost index of the ENO stencil of width k for cell c.
int eno_stencil(const double* a, int n, int c, int k) {
  int left = c;
  std::array<double, 8> dd{};
  for (int m = 1; m < k; ++m) {
    // undivided differences of order m on [left-1, left+m-1] and [left, left+m]
    if (left - 1 < 0 || left + m >= n) {
      throw InsufficientGhostWidth("ENO stencil leaves the window");
    }
    auto diff = [&](int start) {
      for (int q = 0; q <= m; ++q) dd[q] = a[start + q];
      for (int o = 1; o <= m; ++o)
        for (int q = 0; q <= m - o; ++q) dd[q] = dd[q + 1] - dd[q];
      return std::abs(dd[0]);
    };
    if (diff(left - 1) <= diff(left)) --left;
  }
  return left;
}

}  // namespace

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double eno_coefficient(int k, int r, int j) {
  if (k < 3 || k > 4 || r < -1 || r >= k || j < 0 || j >= k) {
    throw ConfigError("eno_coefficient index out of range");
  }
  return table().c[k][r + 1][j];
}

FaceValues reconstruct_faces(const double* a, int n, int c, int k) {
  if (k == 1) return {a[c], a[c]};
  if (k == 2) {
    if (c < 1 || c + 1 >= n) throw InsufficientGhostWidth("MinMod needs one neighbour");
    const double s = 0.5 * minmod(a[c + 1] - a[c], a[c] - a[c - 1]);
    return {a[c] - s, a[c] + s};
  }
  const int left = eno_stencil(a, n, c, k);
  const int r = c - left;
  const auto& t = table().c[k];
  double right_v = 0.0, left_v = 0.0;
  for (int j = 0; j < k; ++j) {
    right_v += t[r + 1][j] * a[left + j];
    left_v += t[r][j] * a[left + j];
  }
  return {left_v, right_v};
}

void scaled_w_jump(const Vec9* v, int k, const Mat9& rt, Vec9& w_raw, Vec9& w_rec) {
  const int n = 2 * k;
  std::array<Vec9, 8> w;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < 9; ++i) w[j][i] = rt.col(i).dot(v[j]);
  w_raw = w[k] - w[k - 1];
  if (k == 1) {
    w_rec = w_raw;
    return;
  }
  if (k == 2) {
    // jump minus half the two limited slopes; each slope is no larger than
    // the jump itself, so the sign survives rounding
    for (int comp = 0; comp < 9; ++comp) {
      const double d = w_raw[comp];
      const double sl = minmod(d, w[1][comp] - w[0][comp]);
      const double sr = minmod(w[3][comp] - w[2][comp], d);
      w_rec[comp] = d - 0.5 * (sl + sr);
    }
    return;
  }
  const auto& t = table().c[k];
  // dd[m][q]: undivided difference of order m over a[q..q+m]
  std::array<std::array<double, 8>, 4> dd;
  for (int comp = 0; comp < 9; ++comp) {
    for (int j = 0; j < n; ++j) dd[0][j] = w[j][comp];
    for (int m = 1; m < k; ++m)
      for (int q = 0; q + m < n; ++q) dd[m][q] = dd[m - 1][q + 1] - dd[m - 1][q];
    // same selection as eno_stencil: ties go left
    int lp = k - 1, lm = k;
    for (int m = 1; m < k; ++m) {
      if (std::abs(dd[m][lp - 1]) <= std::abs(dd[m][lp])) --lp;
      if (std::abs(dd[m][lm - 1]) <= std::abs(dd[m][lm])) --lm;
    }
    const auto& cp = t[k - 1 - lp + 1];
    const auto& cm = t[k - lm];
    // weights sum to one; offsets from a common value keep constants exact
    const double ref = dd[0][k - 1];
    double plus = 0.0, minus = 0.0;
    for (int j = 0; j < k; ++j) {
      plus += cp[j] * (dd[0][lp + j] - ref);
      minus += cm[j] * (dd[0][lm + j] - ref);
    }
    w_rec[comp] = minus - plus;
  }
}

ScaledJump scaled_entropy_jump(const std::vector<Vec9>& cells, Axis d, int k) {
  if (k < 1 || k > 4) throw ConfigError("reconstruction order must be 1..4");
  if (static_cast<int>(cells.size()) != 2 * k) {
    throw InsufficientGhostWidth("order " + std::to_string(k) + " needs a window of " +
                                 std::to_string(2 * k) + " cells");
  }
  std::array<Vec9, 8> v;
  for (int j = 0; j < 2 * k; ++j) v[j] = entropy_vars(cells[j]);
  const EigenDecomp e = entropy_scaled_eigenvectors(cells[k - 1], cells[k], d);
  ScaledJump out;
  out.order = k;
  scaled_w_jump(v.data(), k, e.r_tilde, out.w_raw, out.w_rec);
  if (k == 1) {
    out.jump = v[k] - v[k - 1];
    return out;
  }
  const Mat9 rtt = e.r_tilde.transpose();
  const Eigen::PartialPivLU<Mat9> lu(rtt);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-12)) {
    throw SingularScaling("condition estimate " + std::to_string(1.0 / rcond) +
                          " at interface state rho = " +
                          std::to_string(0.5 * (cells[k - 1][0] + cells[k][0])));
  }
  out.jump = lu.solve(out.w_rec);
  return out;
}

}  // namespace cgl
