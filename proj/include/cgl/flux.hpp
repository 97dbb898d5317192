// Physical fluxes of the conservative part and entropy-conservative
// two-point fluxes.
#pragma once

#include <array>

#include "cgl/core.hpp"

namespace cgl {

Vec9 physical_flux(const Vec9& w, Axis d);

// (b - a)/(ln b - ln a), series evaluation near a == b.
double log_mean(double a, double b);

// Two-point entropy-conservative flux.
Vec9 ec_flux(const Vec9& wl, const Vec9& wr, Axis d);

// Numerical entropy flux consistent with ec_flux:
//   Vbar . F + phibar Bbar_d - Fpotbar_d
double ec_entropy_flux(const Vec9& wl, const Vec9& wr, const Vec9& f, Axis d);

// (4/3) F(i,i+1) - (1/6) [F(i-1,i+1) + F(i,i+2)] for the stencil
// (i-1, i, i+1, i+2).
Vec9 ec_flux_fourth(const std::array<Vec9, 4>& w, Axis d);

}  // namespace cgl
