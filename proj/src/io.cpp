#include "cgl/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cgl/diagnostics.hpp"
#include "cgl/physics.hpp"

namespace cgl {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  if (!f) throw ConfigError("write failed for " + path);
}

}  // namespace

std::string snapshot_csv(const Grid& g, const Field& u, int stride) {
  if (stride < 1) stride = 1;
  std::ostringstream out;
  out << (g.dim == 2 ? "x,y," : "x,") << "rho,ux,uy,uz,p_par,p_perp,Bx,By,Bz\n";
  for (int j = 0; j < g.ny; j += (g.dim == 2 ? stride : 1)) {
    for (int i = 0; i < g.nx; i += stride) {
      const Vec9 w = cons_to_prim(u[g.index(i, j)]);
      out << g17(g.xc(i));
      if (g.dim == 2) out << ',' << g17(g.yc(j));
      for (int k = 0; k < 9; ++k) out << ',' << g17(w[k]);
      out << '\n';
    }
  }
  return out.str();
}

void write_snapshot_csv(const std::string& path, const Grid& g, const Field& u) {
  write_text(path, snapshot_csv(g, u));
}

void write_budget_csv(const std::string& path, const std::vector<StepRecord>& rows) {
  std::ostringstream out;
  out << "step,t,dt,total_entropy,budget_residual,budget_residual_stage,tolerance,"
         "max_production,region_violations\n";
  for (const auto& r : rows) {
    out << r.step << ',' << g17(r.t) << ',' << g17(r.dt) << ',' << g17(r.total_entropy) << ','
        << g17(r.residual) << ',' << g17(r.residual_stage) << ',' << g17(r.tolerance) << ','
        << g17(r.max_production) << ',' << r.region_violations << '\n';
  }
  write_text(path, out.str());
}

std::string convergence_table(const std::string& scheme, const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  if (rows.empty()) return out.str();
  std::vector<double> e;
  std::vector<int> n;
  for (const auto& r : rows) {
    e.push_back(r.error);
    n.push_back(r.n);
  }
  const std::vector<double> ord = convergence_order(e, n);
  char buf[128];
  out << scheme << '\n';
  std::snprintf(buf, sizeof buf, "%8s  %14s  %8s\n", "N", "L1 error", "order");
  out << buf;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0) {
      std::snprintf(buf, sizeof buf, "%8d  %14.6e  %8s\n", rows[i].n, rows[i].error, "--");
    } else {
      std::snprintf(buf, sizeof buf, "%8d  %14.6e  %8.4f\n", rows[i].n, rows[i].error, ord[i - 1]);
    }
    out << buf;
  }
  return out.str();
}

std::string manifest_json(const RunResult& r, const std::string& extra_json) {
  nlohmann::json j;
  j["case"] = r.tc.id;
  j["dim"] = r.grid.dim;
  j["nx"] = r.grid.nx;
  j["ny"] = r.grid.ny;
  j["ghost"] = r.grid.ghost;
  j["boundary"] = boundary_name(r.grid.bc);
  j["t_final"] = r.t;
  j["steps"] = r.steps;
  const SchemeConfig& s = r.scheme;
  j["scheme"] = {{"name", s.name},
                 {"k", s.k},
                 {"flux_order", s.flux_order},
                 {"central_order", s.flux_order},
                 {"diffusion", s.diffusion},
                 {"reconstruction", !s.diffusion ? "none"
                                    : s.k == 1   ? "none"
                                    : s.k == 2   ? "minmod"
                                                 : "eno" + std::to_string(s.k)},
                 {"integrator", integrator_name(s.integrator)},
                 {"time_order", r.time_order},
                 {"cfl", s.cfl},
                 {"source", s.source},
                 {"tau", s.tau},
                 {"eps_b", s.eps_b},
                 {"implicit_solver", s.newton ? "newton" : "closed_form"},
                 {"tableau_file", s.tableau_file},
                 {"workers", s.workers}};
  j["tolerances"] = {{"budget_relative", 1e-10},
                     {"complex_speed_clamp", 1e-12},
                     {"log_mean_series_switch", 1e-4},
                     {"singular_scaling_cond", 1e12}};
  j["max_region_violations"] = r.max_region_violations;
  j["wall_seconds"] = r.wall_seconds;
#ifdef CGL_GIT_DESCRIBE
  j["git_describe"] = CGL_GIT_DESCRIBE;
#else
  j["git_describe"] = "unknown";
#endif
  nlohmann::json extra = nlohmann::json::parse(extra_json);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

}  // namespace cgl
