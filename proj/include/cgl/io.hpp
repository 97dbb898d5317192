// CSV output, run manifests and the convergence table.
#pragma once

#include <string>
#include <vector>

#include "cgl/solver.hpp"

namespace cgl {

// x[,y],rho,ux,uy,uz,p_par,p_perp,Bx,By,Bz with 17 significant digits.
void write_snapshot_csv(const std::string& path, const Grid& g, const Field& u);
std::string snapshot_csv(const Grid& g, const Field& u, int stride = 1);

// step,t,dt,total_entropy,budget_residual followed by
// budget_residual_stage,tolerance,max_production,region_violations.
void write_budget_csv(const std::string& path, const std::vector<StepRecord>& rows);

struct ConvergenceRow {
  int n;
  double error;
};

// Columns N, L1 error, order; the first row has no order.
std::string convergence_table(const std::string& scheme, const std::vector<ConvergenceRow>& rows);

std::string manifest_json(const RunResult& r, const std::string& extra_json = "{}");

}  // namespace cgl
