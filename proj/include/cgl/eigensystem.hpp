// Eigensystem of the conservative part (Godunov-symmetrised), Barth scaling
// and the Rusanov-type diffusion matrix.
#pragma once

#include "cgl/core.hpp"

namespace cgl {

// Primitive-variable right eigenvectors, columns
//   u-cf, u-cs, u-vax, u (rho), u (Bx), u (p_par), u+vax, u+cs, u+cf
Mat9 eigensystem_primitive(const Vec9& w, Axis d);

// Eigenvalues matching the columns above.
Vec9 conservative_eigenvalues(const Vec9& w, Axis d);

Mat9 du_dw(const Vec9& w);

// Y = R_W^-1 dW/dV (dU/dW)^-T R_W^-T in closed form (direction independent).
Mat9 y_matrix(const Vec9& w);

// Square root of a 2x2 block [[a, b], [c, d]] with the closed-form
// formula; throws SqrtBranch when t = sqrt(a + d + 2 sqrt(ad - bc)) is 0.
Eigen::Matrix2d block_sqrt(double a, double b, double c, double d);

// T = sqrt(Y).
Mat9 scaling_matrix(const Vec9& w);

struct EigenDecomp {
  Mat9 r_tilde;
  double lambda_max;
  Axis dir;
};

// R~ = dU/dW R_W T at state w.
EigenDecomp entropy_scaled_eigenvectors(const Vec9& w, Axis d);

// Same, evaluated at the arithmetic mean of the primitive states.
EigenDecomp entropy_scaled_eigenvectors(const Vec9& wl, const Vec9& wr, Axis d);

// D = R~ Lambda R~^T with Lambda = lambda_max I.
Mat9 diffusion_matrix(const EigenDecomp& e);

}  // namespace cgl
