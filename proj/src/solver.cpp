#include "cgl/solver.hpp"

#include <chrono>
#include <cmath>

#include "cgl/diagnostics.hpp"
#include "cgl/physics.hpp"

namespace cgl {

Simulation::Simulation(const TestCase& tc, const Grid& g, const SchemeConfig& cfg)
    : grid_(g), cfg_(cfg) {
  scheme_ = std::make_unique<Scheme>(grid_, cfg_);
  stepper_ = std::make_unique<TimeStepper>(*scheme_);
  u_ = init_case(tc, grid_);
}

double Simulation::stable_dt() const { return compute_dt(u_, grid_, cfg_.cfl, cfg_.eps_b); }

StepRecord Simulation::step(double dt) {
  StepRecord r;
  r.dt = dt;
  const Field old = u_;
  const double flux0 = scheme_->entropy_flux_div(old);
  r.tolerance = 1e-10 * static_cast<double>(grid_.cells()) * max_abs_entropy(old, grid_);

  double src0 = 0.0;
  if (cfg_.source) {
    for (int j = 0; j < grid_.ny; ++j)
      for (int i = 0; i < grid_.nx; ++i) {
        const Vec9 w = cons_to_prim(old[grid_.index(i, j)], cfg_.eps_b);
        src0 += (w[0] / w[5] - w[0] / w[4]) * (w[5] - w[4]) / cfg_.tau;
      }
  }

  StepAudit audit;
  stepper_->step(u_, dt, &audit);
  t_ += dt;
  ++steps_;

  const double de = entropy_change(old, u_, grid_);
  r.step = steps_;
  r.t = t_;
  r.total_entropy = total_entropy(u_, grid_);
  r.residual = de + dt * flux0 - dt * src0;
  r.residual_stage = de + dt * audit.flux_div - dt * audit.source;
  r.max_production = audit.max_production;
  r.region_violations = count_region_violations(u_, grid_);
  return r;
}

double dt_refinement(int k, int q, int n_ref, int n) {
  if (q >= k || n_ref <= 0) return 1.0;
  return std::pow(static_cast<double>(n_ref) / n, static_cast<double>(k) / q - 1.0);
}

RunResult run_case(const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  res.tc = find_case(opt.case_id);
  res.scheme = opt.scheme;
  const int n = opt.n > 0 ? opt.n : res.tc.default_n;
  const int ghost = ghost_width(opt.scheme.k);
  res.grid = case_grid(res.tc, n, ghost);
  const double t_end = opt.t_final >= 0.0 ? opt.t_final : res.tc.t_final;

  Simulation sim(res.tc, res.grid, opt.scheme);
  res.time_order = sim.time_order();
  while (sim.time() < t_end && sim.steps() < opt.max_steps) {
    double dt = sim.stable_dt() * opt.dt_factor;
    // land on t_end without a sliver step
    const double rest = t_end - sim.time();
    if (dt >= rest) {
      dt = rest;
    } else if (dt > 0.5 * rest) {
      dt = 0.5 * rest;
    }
    if (!(dt > 0.0)) break;
    StepRecord r;
    try {
      r = sim.step(dt);
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " (step " + std::to_string(sim.steps() + 1) +
                  ", t = " + std::to_string(sim.time()) + ")");
    }
    if (r.t >= t_end - 1e-14 * std::max(1.0, t_end)) r.t = t_end;
    res.max_region_violations = std::max(res.max_region_violations, r.region_violations);
    res.budget.push_back(r);
    if (opt.on_step) opt.on_step(r, sim);
    if (r.t == t_end) break;
  }
  res.t = sim.time();
  res.steps = sim.steps();
  res.u = sim.state();
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace cgl
