// Error norms, convergence orders and entropy bookkeeping.
#pragma once

#include <vector>

#include "cgl/scheme.hpp"

namespace cgl {

// Pairwise (tree) summation; the order is fixed by the input length only.
double pairwise_sum(const std::vector<double>& a);

// Sum of E = -rho s over interior cells.
double total_entropy(const Field& u, const Grid& g);

// Sum over interior cells of E(new) - E(old), cell by cell.
double entropy_change(const Field& u_old, const Field& u_new, const Grid& g);

// max |E| over interior cells.
double max_abs_entropy(const Field& u, const Grid& g);

// sum |a - b| * cell volume
double l1_error(const std::vector<double>& a, const std::vector<double>& b, double dx,
                double dy = 1.0);

// log(e_i / e_{i+1}) / log(n_{i+1} / n_i)
std::vector<double> convergence_order(const std::vector<double>& errors, const std::vector<int>& ns);

// Number of interior cells whose state lies outside p_m <= p_par <= p_M.
long count_region_violations(const Field& u, const Grid& g);

// Interior density values in storage order.
std::vector<double> density(const Field& u, const Grid& g);

// Largest |p_par - p_perp| / p with p = (p_par + 2 p_perp)/3 and its median.
struct AnisotropyStats {
  double median;
  double max;
};
AnisotropyStats anisotropy(const Field& u, const Grid& g);

}  // namespace cgl
