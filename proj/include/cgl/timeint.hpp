// Time step control and Runge-Kutta integrators.
#pragma once

#include <string>
#include <vector>

#include "cgl/scheme.hpp"

namespace cgl {

// dt = cfl / max(|lambda_x|/dx + |lambda_y|/dy) with lambda_d from
// signal_speed_bound.  Interior cells only.
double compute_dt(const Field& u, const Grid& g, double cfl, double eps_b = kEpsB);

// Shu-Osher form: U(s) = sum_j alpha[s][j] U(j) + dt beta[s][j] L(U(j)),
// s = 1..S, j < s, U(0) = U^n and U^{n+1} = U(S).
struct ShuOsher {
  int stages = 0;
  std::vector<std::vector<double>> alpha;  // alpha[s-1][j]
  std::vector<std::vector<double>> beta;
};

const ShuOsher& ssp_tableau(Integrator i);

// Butcher weights b_j of L(U(j)) in U^{n+1} = U^n + dt sum_j b_j L(U(j)).
std::vector<double> final_weights(const ShuOsher& t);

// Additive RK with explicit transport and diagonally implicit source:
//   U(s) = U^n + dt sum_{j<s} (ae[s][j] L_j + ai[s][j] S_j) + dt ai[s][s] S(U(s))
//   U^{n+1} = U^n + dt sum_j (be[j] L_j + bi[j] S_j)
struct ArkTableau {
  int order = 0;
  int stages = 0;
  std::vector<std::vector<double>> ae, ai;
  std::vector<double> be, bi;
};

const ArkTableau& ark2_tableau();

// Plain-text tableau:
//   order <q>
//   stages <s>
//   AE        followed by s rows of s numbers
//   AI        followed by s rows of s numbers
//   bE <s numbers>
//   bI <s numbers>
// '#' starts a comment.
ArkTableau load_ark_tableau(const std::string& path);
ArkTableau parse_ark_tableau(const std::string& text);

// Solve U = X + dt_beta S(U) for one cell.  Only p_par changes; with
// E = 2e - rho|u|^2 - |B|^2 fixed the equation is linear in p_par.
Vec9 implicit_source_solve(const Vec9& x, double dt_beta, double tau);
// Same equation by Newton iteration with backtracking.
Vec9 implicit_source_solve_newton(const Vec9& x, double dt_beta, double tau, int* iterations = nullptr);

// Per-step entropy bookkeeping accumulated with the final-combination
// weights of each stage.
struct StepAudit {
  double flux_div = 0.0;    // sum_s b_s * entropy flux divergence of stage s
  double source = 0.0;      // sum_s b_s * sum_i V_i . S(U_i) of stage s
  double max_production = -1e300;
};

class TimeStepper {
 public:
  explicit TimeStepper(Scheme& scheme);

  // Advances u (interior cells; ghosts refreshed) by dt.
  void step(Field& u, double dt, StepAudit* audit = nullptr);

  void set_tableau(const ArkTableau& t);
  int order() const;

 private:
  void eval(Field& u, Field& du, int stage, StepAudit* audit, double weight, bool add_source);
  void ssp_step(Field& u, double dt, StepAudit* audit);
  void ark_step(Field& u, double dt, StepAudit* audit);
  double source_dot(const Field& u) const;
  void solve_source(Field& u, double dt_beta) const;

  Scheme& scheme_;
  ArkTableau ark_;
  std::vector<Field> stage_u_, stage_l_, stage_s_;
};

}  // namespace cgl
