// Non-conservative products C_d(U) g, the Godunov term and central
// difference stencils.
#pragma once

#include <vector>

#include "cgl/core.hpp"

namespace cgl {

// C_d(U(w)) g evaluated row by row.  Rows 1, 7, 8, 9 vanish.
Vec9 noncons_apply(const Vec9& w, const Vec9& g, Axis d);

// Dense C_d(U(w)); used by tests and the verify suite.
Mat9 noncons_matrix(const Vec9& w, Axis d);

// phi'(V) * div_b
Vec9 godunov_term(const Vec9& v, double div_b);

// Central derivative of a ghost-padded array.  `ghost` cells are present on
// each side; the result has size samples.size() - 2*ghost.
std::vector<double> central_diff(const std::vector<double>& samples, int ghost, double dx,
                                 int order);

}  // namespace cgl
