#include "cgl/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "cgl/physics.hpp"

namespace cgl {

namespace {

double pairwise(const double* a, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(a, h) + pairwise(a + h, n - h);
}

template <class F>
std::vector<double> interior_map(const Field& u, const Grid& g, F f) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(g.cells()));
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out.push_back(f(u[g.index(i, j)], g.index(i, j)));
  return out;
}

double cell_entropy(const Vec9& u) { return entropy_pair(cons_to_prim(u)).E; }

}  // namespace

double pairwise_sum(const std::vector<double>& a) { return pairwise(a.data(), a.size()); }

double total_entropy(const Field& u, const Grid& g) {
  return pairwise_sum(interior_map(u, g, [](const Vec9& c, std::size_t) { return cell_entropy(c); }));
}

double entropy_change(const Field& u_old, const Field& u_new, const Grid& g) {
  if (u_old.size() != u_new.size()) throw ShapeMismatch("fields differ in size");
  return pairwise_sum(interior_map(u_new, g, [&](const Vec9& c, std::size_t k) {
    return cell_entropy(c) - cell_entropy(u_old[k]);
  }));
}

double max_abs_entropy(const Field& u, const Grid& g) {
  double m = 0.0;
  for (double e : interior_map(u, g, [](const Vec9& c, std::size_t) { return cell_entropy(c); }))
    m = std::max(m, std::abs(e));
  return m;
}

double l1_error(const std::vector<double>& a, const std::vector<double>& b, double dx, double dy) {
  if (a.size() != b.size()) {
    throw ShapeMismatch("l1_error: sizes " + std::to_string(a.size()) + " and " +
                        std::to_string(b.size()));
  }
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::abs(a[i] - b[i]);
  return pairwise_sum(d) * dx * dy;
}

std::vector<double> convergence_order(const std::vector<double>& errors, const std::vector<int>& ns) {
  if (errors.size() != ns.size()) throw ShapeMismatch("errors and resolutions differ in length");
  for (double e : errors) {
    if (!(e > 0.0)) throw NonPositiveError("error " + std::to_string(e));
  }
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    out.push_back(std::log(errors[i] / errors[i + 1]) /
                  std::log(static_cast<double>(ns[i + 1]) / ns[i]));
  }
  return out;
}

long count_region_violations(const Field& u, const Grid& g) {
  long n = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (admissibility(cons_to_prim(u[g.index(i, j)])).region == Region::violated) ++n;
  return n;
}

std::vector<double> density(const Field& u, const Grid& g) {
  return interior_map(u, g, [](const Vec9& c, std::size_t) { return c[0]; });
}

AnisotropyStats anisotropy(const Field& u, const Grid& g) {
  std::vector<double> r = interior_map(u, g, [](const Vec9& c, std::size_t) {
    const Vec9 w = cons_to_prim(c);
    return std::abs(w[4] - w[5]) / ((w[4] + 2.0 * w[5]) / 3.0);
  });
  AnisotropyStats s{0.0, 0.0};
  if (r.empty()) return s;
  s.max = *std::max_element(r.begin(), r.end());
  const std::size_t m = r.size() / 2;
  std::nth_element(r.begin(), r.begin() + m, r.end());
  s.median = r[m];
  if (r.size() % 2 == 0) {
    const double lo = *std::max_element(r.begin(), r.begin() + m);
    s.median = 0.5 * (s.median + lo);
  }
  return s;
}

}  // namespace cgl
