// Sign-preserving reconstruction of scaled entropy variables W = R~^T V.
#pragma once

#include <vector>

#include "cgl/core.hpp"

namespace cgl {

double minmod(double a, double b);

// Reconstruction coefficients: value at the right face of a cell from a
// k-cell stencil whose leftmost cell is r cells to the left, r = -1..k-1.
// r = -1 gives the left-face weights of the stencil starting at the cell.
double eno_coefficient(int k, int r, int j);

// Face values of cell `c` in `a` (a window of scalars) using ENO of order k
// (k = 3, 4) or MinMod (k = 2).  Ties in the stencil selection go left.
struct FaceValues {
  double left;
  double right;
};
FaceValues reconstruct_faces(const double* a, int n, int c, int k);

struct ScaledJump {
  Vec9 jump;   // [[V^]]
  Vec9 w_raw;  // [[W]]
  Vec9 w_rec;  // [[W^]]
  int order;
};

// Reconstructed jump in W across the middle interface of a window of 2k
// entropy-variable vectors.  `rt` is R~ at the interface.
void scaled_w_jump(const Vec9* v, int k, const Mat9& rt, Vec9& w_raw, Vec9& w_rec);

// Window of 2k primitive states around the interface between cells k-1
// and k.  k = 1 returns the raw jump [[V]].
ScaledJump scaled_entropy_jump(const std::vector<Vec9>& cells, Axis d, int k);

}  // namespace cgl
