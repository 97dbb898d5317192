#include "cgl/scheme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <thread>

#include "cgl/eigensystem.hpp"
#include "cgl/flux.hpp"
#include "cgl/noncons.hpp"
#include "cgl/physics.hpp"
#include "cgl/reconstruct.hpp"

namespace cgl {

const char* boundary_name(Boundary b) { return b == Boundary::periodic ? "periodic" : "outflow"; }

Grid make_grid_1d(int nx, double x0, double x1, int ghost, Boundary bc) {
  if (nx < 1 || !(x1 > x0)) throw ConfigError("bad 1D grid extents");
  Grid g;
  g.dim = 1;
  g.nx = nx;
  g.ny = 1;
  g.x0 = x0;
  g.x1 = x1;
  g.dx = (x1 - x0) / nx;
  g.ghost = ghost;
  g.bc = bc;
  return g;
}

Grid make_grid_2d(int nx, int ny, double x0, double x1, double y0, double y1, int ghost,
                  Boundary bc) {
  if (nx < 1 || ny < 1 || !(x1 > x0) || !(y1 > y0)) throw ConfigError("bad 2D grid extents");
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.dx = (x1 - x0) / nx;
  g.dy = (y1 - y0) / ny;
  g.ghost = ghost;
  g.bc = bc;
  return g;
}

int ghost_width(int k) { return k <= 2 ? 2 : 4; }

const char* integrator_name(Integrator i) {
  switch (i) {
    case Integrator::ssprk2: return "SSPRK2";
    case Integrator::ssprk3: return "SSPRK3";
    case Integrator::ssprk4: return "SSPRK4";
    case Integrator::ark2: return "ARK2";
  }
  return "?";
}

Integrator integrator_from_name(const std::string& s) {
  for (Integrator i : {Integrator::ssprk2, Integrator::ssprk3, Integrator::ssprk4,
                       Integrator::ark2}) {
    if (s == integrator_name(i)) return i;
  }
  throw ConfigError("unknown integrator '" + s + "' (SSPRK2, SSPRK3, SSPRK4, ARK2)");
}

int integrator_order(Integrator i) {
  switch (i) {
    case Integrator::ssprk2: return 2;
    case Integrator::ssprk3: return 3;
    case Integrator::ssprk4: return 4;
    case Integrator::ark2: return 2;
  }
  return 0;
}

bool is_imex(Integrator i) { return i == Integrator::ark2; }

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names = {"O2ES-EXP",  "O3ES-EXP",  "O4ES-EXP",
                                                 "O2ES-IMEX", "O3ES-IMEX", "O4ES-IMEX",
                                                 "EC-only"};
  return names;
}

SchemeConfig scheme_from_name(const std::string& name) {
  SchemeConfig c;
  c.name = name;
  if (name == "EC-only") {
    c.k = 1;
    c.flux_order = 2;
    c.diffusion = false;
    c.integrator = Integrator::ssprk4;
    return c;
  }
  if (name.size() < 6 || name[0] != 'O' || name.substr(2, 3) != "ES-") {
    throw ConfigError("unknown scheme '" + name + "'");
  }
  const int k = name[1] - '0';
  const std::string kind = name.substr(5);
  if (k < 2 || k > 4 || (kind != "EXP" && kind != "IMEX")) {
    throw ConfigError("unknown scheme '" + name + "'");
  }
  c.k = k;
  c.flux_order = k == 2 ? 2 : 4;
  if (kind == "EXP") {
    c.integrator = k == 2 ? Integrator::ssprk2 : k == 3 ? Integrator::ssprk3 : Integrator::ssprk4;
  } else {
    c.integrator = Integrator::ark2;
    c.source = true;
  }
  return c;
}

void validate(const SchemeConfig& cfg, const Grid& g) {
  if (cfg.k < 1 || cfg.k > 4) throw ConfigError("k must be 1..4");
  if (cfg.flux_order != 2 && cfg.flux_order != 4) throw ConfigError("flux_order must be 2 or 4");
  if (!(cfg.cfl >= 0.0)) throw ConfigError("cfl must be >= 0");
  if (!(cfg.tau > 0.0)) throw ConfigError("tau must be > 0");
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  const int need = std::max(cfg.diffusion ? cfg.k : 1, cfg.flux_order / 2);
  if (g.ghost < need) {
    throw InsufficientGhostWidth("scheme needs " + std::to_string(need) + " ghost cells, grid has " +
                                 std::to_string(g.ghost));
  }
  const int min_n = 2 * g.ghost;
  if (g.nx < min_n || (g.dim == 2 && g.ny < min_n)) {
    throw ConfigError("grid too small for ghost width " + std::to_string(g.ghost));
  }
}

void apply_boundary(Field& u, const Grid& g) {
  const int G = g.ghost;
  const bool per = g.bc == Boundary::periodic;
  for (int j = 0; j < g.ny; ++j) {
    for (int q = 1; q <= G; ++q) {
      u[g.index(-q, j)] = per ? u[g.index(g.nx - q, j)] : u[g.index(0, j)];
      u[g.index(g.nx - 1 + q, j)] = per ? u[g.index(q - 1, j)] : u[g.index(g.nx - 1, j)];
    }
  }
  if (g.dim < 2) return;
  for (int i = -G; i < g.nx + G; ++i) {
    for (int q = 1; q <= G; ++q) {
      u[g.index(i, -q)] = per ? u[g.index(i, g.ny - q)] : u[g.index(i, 0)];
      u[g.index(i, g.ny - 1 + q)] = per ? u[g.index(i, q - 1)] : u[g.index(i, g.ny - 1)];
    }
  }
}

void parallel_for(int n, int workers, const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  const int t = std::min(workers, n);
  if (t <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::exception_ptr> errs(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int c = 0; c < t; ++c) {
    const int b = static_cast<int>(static_cast<long>(n) * c / t);
    const int e = static_cast<int>(static_cast<long>(n) * (c + 1) / t);
    pool.emplace_back([&, b, e, c] {
      try {
        fn(b, e);
      } catch (...) {
        errs[c] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

using CellAux = Scheme::CellAux;

struct TwoPoint {
  Vec9 f;
  double q;
};

TwoPoint two_point(const CellAux& l, const CellAux& r, Axis d) {
  TwoPoint t;
  t.f = ec_flux(l.w, r.w, d);
  const int n = d == Axis::x ? slot::bx : slot::by;
  const int a = static_cast<int>(d);
  t.q = 0.5 * (l.v + r.v).dot(t.f) + 0.25 * (l.phi + r.phi) * (l.w[n] + r.w[n]) -
        0.5 * (l.fpot[a] + r.fpot[a]);
  return t;
}

struct Diffusion {
  Vec9 g;       // 1/2 D [[V^]]
  double prod;  // -1/2 [[V]] . D [[V^]]
};

// Interface between line cells l and l+1.
Diffusion diffusion(const CellAux* const* line, int l, Axis d, int k) {
  const Vec9 avg = 0.5 * (line[l]->w + line[l + 1]->w);
  const EigenDecomp e = entropy_scaled_eigenvectors(avg, d);
  std::array<Vec9, 8> v;
  for (int q = 0; q < 2 * k; ++q) v[q] = line[l - k + 1 + q]->v;
  Vec9 wraw, wrec;
  scaled_w_jump(v.data(), k, e.r_tilde, wraw, wrec);
  const Mat9& r = e.r_tilde;
  // paired so that mirror-image interfaces round identically
  const Vec9 s = ((r.col(0) * wrec[0] + r.col(8) * wrec[8]) +
                  (r.col(1) * wrec[1] + r.col(7) * wrec[7])) +
                 ((r.col(2) * wrec[2] + r.col(6) * wrec[6]) +
                  ((r.col(3) * wrec[3] + r.col(5) * wrec[5]) + r.col(4) * wrec[4]));
  Diffusion out;
  out.g = 0.5 * e.lambda_max * s;
  out.prod = -0.5 * e.lambda_max * wraw.dot(wrec);
  return out;
}

struct Scratch {
  std::vector<const CellAux*> line;
  std::vector<TwoPoint> narrow, wide;
  std::vector<Vec9> fhat;
  std::vector<double> qhat;
};

thread_local Scratch tls_scratch;

std::string cell_label(const Grid& g, std::size_t idx) {
  const int i = static_cast<int>(idx % g.sx()) - g.ghost;
  const int j = static_cast<int>(idx / g.sx()) - g.gy();
  const bool ghost = i < 0 || i >= g.nx || j < 0 || j >= g.ny;
  std::string s = "cell (" + std::to_string(i);
  if (g.dim == 2) s += ", " + std::to_string(j);
  s += ")";
  if (ghost) s += " [ghost]";
  return s;
}

}  // namespace

Scheme::Scheme(const Grid& g, const SchemeConfig& cfg) : grid_(g), cfg_(cfg) {
  validate(cfg_, grid_);
  aux_.resize(grid_.size());
}

void Scheme::fill_aux(const Field& u, int j_begin, int j_end) {
  const Grid& g = grid_;
  for (int j = j_begin; j < j_end; ++j) {
    for (int i = 0; i < g.sx(); ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * g.sx() + i;
      CellAux& a = aux_[idx];
      try {
        a.w = cons_to_prim(u[idx], cfg_.eps_b);
      } catch (const Error& e) {
        throw InadmissibleState(cell_label(g, idx) + ": " + e.what());
      }
      a.v = entropy_vars(a.w);
      a.phi = 2.0 * a.w[0] / a.w[5] * (a.w[1] * a.w[6] + a.w[2] * a.w[7] + a.w[3] * a.w[8]);
      a.fpot[0] = potential_flux(a.w, Axis::x);
      a.fpot[1] = potential_flux(a.w, Axis::y);
    }
  }
}

// One row (d = x) or column (d = y).  Interfaces are numbered by the line
// index l of their left cell; interior cell c sits at l = c + ghost.
void Scheme::sweep(Axis d, int line_id, double* flux_div, double* max_prod, Field& du,
                   bool update) {
  const Grid& g = grid_;
  const int G = g.ghost;
  const int n = d == Axis::x ? g.nx : g.ny;
  const int len = n + 2 * G;
  const double h = d == Axis::x ? g.dx : g.dy;
  Scratch& s = tls_scratch;
  s.line.resize(len);
  std::vector<std::size_t> idx(len);
  for (int l = 0; l < len; ++l) {
    idx[l] = d == Axis::x ? g.index(l - G, line_id) : g.index(line_id, l - G);
    s.line[l] = &aux_[idx[l]];
  }
  const CellAux* const* line = s.line.data();

  // interfaces l = G-1 .. G+n-1; with update == false only the two ends
  const int lo = G - 1, hi = G + n - 1;
  auto wanted = [&](int l) { return update || l == lo || l == hi; };

  s.narrow.resize(len);
  s.wide.resize(len);
  s.fhat.resize(len);
  s.qhat.resize(len);
  for (int l = lo; l <= hi; ++l) {
    if (wanted(l)) s.narrow[l] = two_point(*line[l], *line[l + 1], d);
  }
  if (cfg_.flux_order == 4) {
    for (int l = lo; l <= hi + 1; ++l) {
      if (wanted(l) || wanted(l - 1)) s.wide[l] = two_point(*line[l - 1], *line[l + 1], d);
    }
  }
  double prod = -1e300;
  for (int l = lo; l <= hi; ++l) {
    if (!wanted(l)) continue;
    Vec9 f;
    double q;
    if (cfg_.flux_order == 4) {
      f = (4.0 / 3.0) * s.narrow[l].f - (1.0 / 6.0) * (s.wide[l].f + s.wide[l + 1].f);
      q = (4.0 / 3.0) * s.narrow[l].q - (1.0 / 6.0) * (s.wide[l].q + s.wide[l + 1].q);
    } else {
      f = s.narrow[l].f;
      q = s.narrow[l].q;
    }
    if (cfg_.diffusion) {
      Diffusion dd;
      try {
        dd = diffusion(line, l, d, cfg_.k);
      } catch (const Error& e) {
        throw Error(std::string("interface after ") + cell_label(g, idx[l]) + " (" +
                    axis_name(d) + "): " + e.what());
      }
      f -= dd.g;
      q -= 0.5 * (line[l]->v + line[l + 1]->v).dot(dd.g);
      prod = std::max(prod, dd.prod);
    }
    s.fhat[l] = f;
    s.qhat[l] = q;
  }
  *flux_div = (s.qhat[hi] - s.qhat[lo]) / h;
  *max_prod = prod;
  if (!update) return;

  const int bslot = d == Axis::x ? slot::bx : slot::by;
  const Field& u = *u_;
  for (int l = G; l < G + n; ++l) {
    Vec9 grad;
    if (cfg_.flux_order == 2) {
      grad = (u[idx[l + 1]] - u[idx[l - 1]]) / (2.0 * h);
    } else {
      grad = (-u[idx[l + 2]] + 8.0 * u[idx[l + 1]] - 8.0 * u[idx[l - 1]] + u[idx[l - 2]]) /
             (12.0 * h);
    }
    const Vec9& w = line[l]->w;
    Vec9 dphi;
    dphi << 0.0, w[6], w[7], w[8], 0.0, w[1] * w[6] + w[2] * w[7] + w[3] * w[8], w[1], w[2],
        w[3];
    Vec9 r = -(s.fhat[l] - s.fhat[l - 1]) / h;
    r -= noncons_apply(w, grad, d);
    r -= dphi * grad[bslot];
    if (d == Axis::x) {
      du[idx[l]] = r;
    } else {
      du[idx[l]] += r;
    }
  }
}

void Scheme::rhs(const Field& u, Field& du, RhsStats* stats) {
  const Grid& g = grid_;
  if (u.size() != g.size()) throw ShapeMismatch("state does not match grid");
  du.assign(g.size(), Vec9::Zero());
  u_ = &u;
  parallel_for(g.sy(), cfg_.workers, [&](int b, int e) { fill_aux(u, b, e); });

  std::vector<double> div_x(g.ny), prod_x(g.ny);
  parallel_for(g.ny, cfg_.workers, [&](int b, int e) {
    for (int j = b; j < e; ++j) sweep(Axis::x, j, &div_x[j], &prod_x[j], du, true);
  });
  std::vector<double> div_y, prod_y;
  if (g.dim == 2) {
    div_y.resize(g.nx);
    prod_y.resize(g.nx);
    parallel_for(g.nx, cfg_.workers, [&](int b, int e) {
      for (int i = b; i < e; ++i) sweep(Axis::y, i, &div_y[i], &prod_y[i], du, true);
    });
  }
  u_ = nullptr;
  if (stats) {
    double div = 0.0, prod = -1e300;
    for (int j = 0; j < g.ny; ++j) {
      div += div_x[j];
      prod = std::max(prod, prod_x[j]);
    }
    for (std::size_t i = 0; i < div_y.size(); ++i) {
      div += div_y[i];
      prod = std::max(prod, prod_y[i]);
    }
    stats->entropy_flux_div = div;
    stats->max_production = prod;
  }
}

double Scheme::entropy_flux_div(const Field& u) {
  const Grid& g = grid_;
  if (g.bc == Boundary::periodic) return 0.0;
  if (u.size() != g.size()) throw ShapeMismatch("state does not match grid");
  Field dummy;
  u_ = &u;
  parallel_for(g.sy(), cfg_.workers, [&](int b, int e) { fill_aux(u, b, e); });
  double div = 0.0, prod = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    double dj;
    sweep(Axis::x, j, &dj, &prod, dummy, false);
    div += dj;
  }
  if (g.dim == 2) {
    for (int i = 0; i < g.nx; ++i) {
      double di;
      sweep(Axis::y, i, &di, &prod, dummy, false);
      div += di;
    }
  }
  u_ = nullptr;
  return div;
}

Field assemble_rhs(const Field& u, const Grid& g, const SchemeConfig& cfg, RhsStats* stats) {
  Scheme s(g, cfg);
  Field du;
  s.rhs(u, du, stats);
  return du;
}

}  // namespace cgl
