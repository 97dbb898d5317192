// Semi-discrete right-hand side on a uniform 1D or 2D grid.
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cgl/core.hpp"

namespace cgl {

enum class Boundary { periodic, outflow };

const char* boundary_name(Boundary b);

// Cells are stored row-major with `ghost` padding on each side in x and,
// for 2D grids, in y.  1D grids have ny = 1 and no y padding.
struct Grid {
  int dim = 1;
  int nx = 0, ny = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double dx = 1.0, dy = 1.0;
  int ghost = 2;
  Boundary bc = Boundary::periodic;

  int gy() const { return dim == 2 ? ghost : 0; }
  int sx() const { return nx + 2 * ghost; }
  int sy() const { return ny + 2 * gy(); }
  std::size_t size() const { return static_cast<std::size_t>(sx()) * sy(); }
  // (i, j) are interior coordinates; ghosts have i < 0 or i >= nx.
  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j + gy()) * sx() + (i + ghost);
  }
  double xc(int i) const { return x0 + (i + 0.5) * dx; }
  double yc(int j) const { return y0 + (j + 0.5) * dy; }
  long cells() const { return static_cast<long>(nx) * ny; }
};

Grid make_grid_1d(int nx, double x0, double x1, int ghost, Boundary bc);
Grid make_grid_2d(int nx, int ny, double x0, double x1, double y0, double y1, int ghost,
                  Boundary bc);

// Ghost width required by reconstruction order k.
int ghost_width(int k);

using Field = std::vector<Vec9>;

enum class Integrator { ssprk2, ssprk3, ssprk4, ark2 };

const char* integrator_name(Integrator i);
Integrator integrator_from_name(const std::string& s);
int integrator_order(Integrator i);
bool is_imex(Integrator i);

struct SchemeConfig {
  std::string name = "O2ES-EXP";
  int k = 2;            // reconstruction order of the diffusion jump
  int flux_order = 2;   // 2 or 4; also the central-difference order
  bool diffusion = true;
  Integrator integrator = Integrator::ssprk2;
  double cfl = 0.4;
  bool source = false;
  double tau = 1e-5;
  double eps_b = kEpsB;
  bool newton = false;  // implicit source solve by Newton instead of closed form
  std::string tableau_file;  // optional ARK tableau replacing ARK2
  int workers = 1;
};

SchemeConfig scheme_from_name(const std::string& name);
const std::vector<std::string>& scheme_names();

// Throws ConfigError on inconsistent combinations.
void validate(const SchemeConfig& cfg, const Grid& g);

void apply_boundary(Field& u, const Grid& g);

struct RhsStats {
  // sum over interior cells of the numerical entropy flux differences,
  // (Q_{i+1/2} - Q_{i-1/2})/dx + (...)/dy
  double entropy_flux_div = 0.0;
  // largest per-interface entropy production -1/2 [[V]] . D [[V^]] (<= 0)
  double max_production = -1e300;
};

class Scheme {
 public:
  Scheme(const Grid& g, const SchemeConfig& cfg);

  // dU for the conservative transport part; U must have its ghosts filled.
  void rhs(const Field& u, Field& du, RhsStats* stats = nullptr);

  // Entropy flux divergence only (boundary interfaces; 0 for periodic).
  double entropy_flux_div(const Field& u);

  const Grid& grid() const { return grid_; }
  const SchemeConfig& config() const { return cfg_; }

  struct CellAux {
    Vec9 w;
    Vec9 v;
    double phi;
    double fpot[2];
  };

 private:
  void fill_aux(const Field& u, int j_begin, int j_end);
  void sweep(Axis d, int line, double* flux_div, double* max_prod, Field& du, bool update);

  Grid grid_;
  SchemeConfig cfg_;
  std::vector<CellAux> aux_;
  const Field* u_ = nullptr;
};

// Convenience wrapper around Scheme::rhs.
Field assemble_rhs(const Field& u, const Grid& g, const SchemeConfig& cfg,
                   RhsStats* stats = nullptr);

// Serial or threaded loop over [0, n) in contiguous chunks.  Exceptions
// from the lowest-numbered failing chunk are rethrown.
void parallel_for(int n, int workers, const std::function<void(int, int)>& fn);

}  // namespace cgl
