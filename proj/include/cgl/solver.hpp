// Case runner: time loop with per-step entropy audit.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cgl/cases.hpp"
#include "cgl/scheme.hpp"
#include "cgl/timeint.hpp"

namespace cgl {

struct StepRecord {
  long step = 0;
  double t = 0.0;   // time after the step
  double dt = 0.0;
  double total_entropy = 0.0;
  // sum dE + dt * flux divergence at U^n (- dt sum V.S(U^n) with source)
  double residual = 0.0;
  // same with stage fluxes and sources combined by the final RK weights
  double residual_stage = 0.0;
  double tolerance = 0.0;        // 1e-10 * N * max|E| at U^n
  double max_production = 0.0;   // largest interface production over the stages
  long region_violations = 0;
};

class Simulation {
 public:
  Simulation(const TestCase& tc, const Grid& g, const SchemeConfig& cfg);

  double stable_dt() const;
  StepRecord step(double dt);

  const Field& state() const { return u_; }
  Field& state() { return u_; }
  double time() const { return t_; }
  long steps() const { return steps_; }
  const Grid& grid() const { return grid_; }
  const SchemeConfig& config() const { return cfg_; }
  int time_order() const { return stepper_->order(); }

 private:
  Grid grid_;
  SchemeConfig cfg_;
  std::unique_ptr<Scheme> scheme_;
  std::unique_ptr<TimeStepper> stepper_;
  Field u_;
  double t_ = 0.0;
  long steps_ = 0;
};

struct RunOptions {
  std::string case_id;
  SchemeConfig scheme;
  int n = 0;              // 0: case default
  double t_final = -1.0;  // < 0: case default
  double dt_factor = 1.0; // multiplies the CFL step
  long max_steps = 100000000;
  std::function<void(const StepRecord&, const Simulation&)> on_step;
};

struct RunResult {
  TestCase tc;
  Grid grid;
  SchemeConfig scheme;
  Field u;
  double t = 0.0;
  long steps = 0;
  int time_order = 0;
  std::vector<StepRecord> budget;
  long max_region_violations = 0;
  double wall_seconds = 0.0;
};

RunResult run_case(const RunOptions& opt);

// dt multiplier that keeps the temporal error of an order-q integrator
// below the spatial error of order k when n is refined from n_ref:
// (n_ref/n)^(k/q - 1) for q < k, 1 otherwise.
double dt_refinement(int k, int q, int n_ref, int n);

}  // namespace cgl
