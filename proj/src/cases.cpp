#include "cgl/cases.hpp"

#include <cmath>
#include <numbers>

#include "cgl/physics.hpp"

namespace cgl {

namespace {

constexpr double kPi = std::numbers::pi;

Vec9 prim(double rho, double ux, double uy, double uz, double ppar, double pperp, double bx,
          double by, double bz) {
  Vec9 w;
  w << rho, ux, uy, uz, ppar, pperp, bx, by, bz;
  return w;
}

TestCase riemann(std::string id, std::string title, double x0, double x1, double t, Vec9 l,
                 Vec9 r) {
  TestCase c;
  c.id = std::move(id);
  c.title = std::move(title);
  c.x0 = x0;
  c.x1 = x1;
  c.x_jump = 0.5 * (x0 + x1);
  c.t_final = t;
  c.riemann = true;
  c.left = l;
  c.right = r;
  return c;
}

std::vector<TestCase> build_cases() {
  const double s4 = std::sqrt(4.0 * kPi);
  std::vector<TestCase> v;

  TestCase acc;
  acc.id = "accuracy";
  acc.title = "smooth density advection";
  acc.bc = Boundary::periodic;
  acc.t_final = 2.0;
  acc.default_n = 40;
  v.push_back(acc);

  v.push_back(riemann("brio_wu", "Brio-Wu shock tube", -1.0, 1.0, 0.2,
                      prim(1, 0, 0, 0, 1, 1, 0.75, 1, 0), prim(0.125, 0, 0, 0, 0.1, 0.1, 0.75, -1, 0)));
  v.push_back(riemann("ryu_jones", "Ryu-Jones problem", -0.5, 0.5, 0.2,
                      prim(1.08, 1.2, 0, 0, 0.95, 0.95, 2 / s4, 3.6 / s4, 2 / s4),
                      prim(1, 0, 0, 0, 1, 1, 2 / s4, 4 / s4, 2 / s4)));
  v.push_back(riemann("superfast", "super-fast expansion", 0.0, 1.0, 0.05,
                      prim(1, -3.1, 0, 0, 1, 1, 0, 0.5, 0), prim(1, 3.1, 0, 0, 1, 1, 0, 0.5, 0)));
  v.push_back(riemann("rp4", "Riemann problem 4", -0.5, 0.5, 0.15,
                      prim(1, 0, 0, 0, 1, 1, 1.3, 1, 0), prim(0.4, 0, 0, 0, 0.4, 0.4, 1.3, -1, 0)));
  v.push_back(riemann("rp5", "Riemann problem 5", -0.5, 0.5, 0.15,
                      prim(1.7, 0, 0, 0, 1.7, 1.7, 3.899398 / s4, 3.544908 / s4, 0),
                      prim(0.2, 0, 0, -1.496891, 0.2, 0.2, 3.899398 / s4, 2.785898 / s4,
                           2.192064 / s4)));
  v.push_back(riemann("rp6", "Riemann problem 6", -0.5, 0.5, 0.15,
                      prim(1 / (4 * kPi), -1, 1, -1, 1, 1, 1 / s4, -1 / s4, 1 / s4),
                      prim(1 / (4 * kPi), -1, -1, -1, 1, 1, 1 / s4, 1 / s4, 1 / s4)));
  v.push_back(riemann("rp7", "Riemann problem 7", -0.5, 0.5, 0.15,
                      prim(1, 0, 0, 0, 1, 1, 1, 1, 0), prim(0.2, 0, 0, 0, 0.1, 0.1, 1, 0, 0)));

  TestCase ot;
  ot.id = "orszag_tang";
  ot.title = "Orszag-Tang vortex";
  ot.dim = 2;
  ot.bc = Boundary::periodic;
  ot.t_final = 0.5;
  ot.default_n = 200;
  v.push_back(ot);
  return v;
}

const std::vector<TestCase>& all_cases() {
  static const std::vector<TestCase> v = build_cases();
  return v;
}

// Offset of cell centre i from the domain centre in units of the domain
// length, computed from integers so that mirrored cells get exactly
// opposite values.
double centred(int i, int n) { return static_cast<double>(2 * i + 1 - n) / (2.0 * n); }

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> r;
    for (const auto& c : all_cases()) r.push_back(c.id);
    return r;
  }();
  return ids;
}

const TestCase& find_case(const std::string& id) {
  std::string key = id;
  if (key == "rp1") key = "brio_wu";
  if (key == "rp2") key = "ryu_jones";
  if (key == "rp3") key = "superfast";
  for (const auto& c : all_cases()) {
    if (c.id == key) return c;
  }
  throw ConfigError("unknown case '" + id + "'");
}

Grid case_grid(const TestCase& c, int n, int ghost) {
  if (c.dim == 1) return make_grid_1d(n, c.x0, c.x1, ghost, c.bc);
  return make_grid_2d(n, n, c.x0, c.x1, c.y0, c.y1, ghost, c.bc);
}

Vec9 exact_accuracy_solution(double x, double t) {
  return prim(2.0 + std::sin(2.0 * kPi * (x - t)), 1, 0, 0, 1, 1, 1, 1, 0);
}

Field init_case(const TestCase& c, const Grid& g) {
  if (g.dim != c.dim) {
    throw DimensionMismatch("case " + c.id + " is " + std::to_string(c.dim) + "D, grid is " +
                            std::to_string(g.dim) + "D");
  }
  Field u(g.size(), Vec9::Zero());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      Vec9 w;
      if (c.riemann) {
        w = g.xc(i) <= c.x_jump ? c.left : c.right;
      } else if (c.id == "accuracy") {
        w = exact_accuracy_solution(g.xc(i), 0.0);
      } else {
        // sin(2 pi x) = -sin(2 pi s) and sin(4 pi x) = sin(4 pi s) with s
        // the centred coordinate
        const double sx = centred(i, g.nx), sy = centred(j, g.ny);
        const double s2x = -std::sin(2.0 * kPi * sx), s2y = -std::sin(2.0 * kPi * sy);
        const double s4x = std::sin(4.0 * kPi * sx);
        const double b0 = 1.0 / std::sqrt(4.0 * kPi);
        w = prim(25.0 / (36.0 * kPi), -s2y, s2x, 0, 5.0 / (12.0 * kPi), 5.0 / (12.0 * kPi),
                 -b0 * s2y, b0 * s4x, 0);
      }
      u[g.index(i, j)] = prim_to_cons(w);
    }
  }
  apply_boundary(u, g);
  return u;
}

}  // namespace cgl
