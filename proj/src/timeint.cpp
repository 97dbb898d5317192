#include "cgl/timeint.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cgl/physics.hpp"

namespace cgl {

double compute_dt(const Field& u, const Grid& g, double cfl, double eps_b) {
  double m = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const Vec9 w = cons_to_prim(u[g.index(i, j)], eps_b);
      double rate = signal_speed_bound(w, Axis::x) / g.dx;
      if (g.dim == 2) rate += signal_speed_bound(w, Axis::y) / g.dy;
      m = std::max(m, rate);
    }
  }
  if (!(m > 0.0)) throw ConfigError("zero wave speed everywhere; dt undefined");
  return cfl / m;
}

namespace {

ShuOsher close_rows(ShuOsher t) {
  for (auto& row : t.alpha) {
    int last = 0;
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      if (row[j] != 0.0) last = j;
    double rest = 0.0;
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
      if (j != last) rest += row[j];
    row[last] = 1.0 - rest;
  }
  return t;
}

}  // namespace

const ShuOsher& ssp_tableau(Integrator i) {
  static const ShuOsher rk2{2, {{1.0}, {0.5, 0.5}}, {{1.0}, {0.0, 0.5}}};
  static const ShuOsher rk3{3,
                            {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}},
                            {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}}};
  // the published 14-digit alpha rows miss 1 by up to 1e-14; closing them
  // keeps uniform states fixed and stops a per-step drift of the entropy
  static const ShuOsher rk4 = close_rows({
      5,
      {{1.0},
       {0.44437049406734, 0.55562950593266},
       {0.62010185138540, 0.0, 0.37989814861460},
       {0.17807995410773, 0.0, 0.0, 0.82192004589227},
       {0.00683325884039, 0.0, 0.51723167208978, 0.12759831133288, 0.34833675773694}},
      {{0.39175222700392},
       {0.0, 0.36841059262959},
       {0.0, 0.0, 0.25189177424738},
       {0.0, 0.0, 0.0, 0.54497475021237},
       {0.0, 0.0, 0.0, 0.08460416338212, 0.22600748319395}}});
  switch (i) {
    case Integrator::ssprk2: return rk2;
    case Integrator::ssprk3: return rk3;
    case Integrator::ssprk4: return rk4;
    default: throw ConfigError(std::string(integrator_name(i)) + " is not an SSP integrator");
  }
}

std::vector<double> final_weights(const ShuOsher& t) {
  // c[s][j]: coefficient of dt L(U(j)) in U(s) - U^n
  std::vector<std::vector<double>> c(t.stages + 1, std::vector<double>(t.stages, 0.0));
  for (int s = 1; s <= t.stages; ++s) {
    for (int j = 0; j < s; ++j) {
      for (int m = 0; m < t.stages; ++m) c[s][m] += t.alpha[s - 1][j] * c[j][m];
      c[s][j] += t.beta[s - 1][j];
    }
  }
  return c[t.stages];
}

const ArkTableau& ark2_tableau() {
  static const ArkTableau t = [] {
    const double b = 1.0 - 1.0 / std::sqrt(2.0);
    ArkTableau a;
    a.order = 2;
    a.stages = 2;
    a.ae = {{0.0, 0.0}, {1.0, 0.0}};
    a.ai = {{b, 0.0}, {1.0 - 2.0 * b, b}};
    a.be = {0.5, 0.5};
    a.bi = {0.5, 0.5};
    return a;
  }();
  return t;
}

ArkTableau parse_ark_tableau(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> tokens;
  while (std::getline(in, line)) {
    const auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  ArkTableau t;
  std::size_t p = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (p >= tokens.size()) throw ConfigError(std::string("tableau: expected ") + what);
    return tokens[p++];
  };
  auto number = [&](const char* what) {
    const std::string& s = next(what);
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("tableau: bad number '" + s + "' in " + what);
    }
  };
  auto matrix = [&](std::vector<std::vector<double>>& m, const char* what) {
    m.assign(t.stages, std::vector<double>(t.stages));
    for (auto& row : m)
      for (auto& x : row) x = number(what);
  };
  auto vec = [&](std::vector<double>& v, const char* what) {
    v.resize(t.stages);
    for (auto& x : v) x = number(what);
  };
  while (p < tokens.size()) {
    const std::string key = next("key");
    if (key == "order") {
      t.order = static_cast<int>(number("order"));
    } else if (key == "stages") {
      t.stages = static_cast<int>(number("stages"));
      if (t.stages < 1 || t.stages > 16) throw ConfigError("tableau: stages must be 1..16");
    } else if (key == "AE" || key == "AI" || key == "bE" || key == "bI") {
      if (t.stages == 0) throw ConfigError("tableau: 'stages' must precede " + key);
      if (key == "AE") matrix(t.ae, "AE");
      if (key == "AI") matrix(t.ai, "AI");
      if (key == "bE") vec(t.be, "bE");
      if (key == "bI") vec(t.bi, "bI");
    } else {
      throw ConfigError("tableau: unknown key '" + key + "'");
    }
  }
  if (t.order < 1 || t.ae.empty() || t.ai.empty() || t.be.empty() || t.bi.empty()) {
    throw ConfigError("tableau: order, stages, AE, AI, bE and bI are all required");
  }
  for (int s = 0; s < t.stages; ++s) {
    for (int j = s; j < t.stages; ++j) {
      if (t.ae[s][j] != 0.0) throw ConfigError("tableau: AE must be strictly lower triangular");
      if (j > s && t.ai[s][j] != 0.0) throw ConfigError("tableau: AI must be lower triangular");
    }
    if (t.ai[s][s] < 0.0) throw ConfigError("tableau: negative AI diagonal");
  }
  return t;
}

ArkTableau load_ark_tableau(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open tableau file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_ark_tableau(ss.str());
}

namespace {

// E = 2e - rho|u|^2 - |B|^2 = 2 p_perp + p_par
double pressure_sum(const Vec9& x) {
  const double m2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  const double b2 = x[6] * x[6] + x[7] * x[7] + x[8] * x[8];
  return 2.0 * x[5] - m2 / x[0] - b2;
}

void check_solution(const Vec9& out, double e_sum) {
  if (!(out[4] > 0.0) || !(e_sum - out[4] > 0.0)) {
    throw NonPositiveResult("implicit solve gives p_par = " + std::to_string(out[4]) +
                            ", p_perp = " + std::to_string(0.5 * (e_sum - out[4])));
  }
}

}  // namespace

Vec9 implicit_source_solve(const Vec9& x, double dt_beta, double tau) {
  if (!(tau > 0.0)) throw ConfigError("tau must be > 0");
  if (!(x[0] > 0.0)) throw NonPositiveDensity("rho = " + std::to_string(x[0]));
  const double e_sum = pressure_sum(x);
  const double r = dt_beta / tau;
  Vec9 out = x;
  out[4] = (x[4] + 0.5 * r * e_sum) / (1.0 + 1.5 * r);
  check_solution(out, e_sum);
  return out;
}

Vec9 implicit_source_solve_newton(const Vec9& x, double dt_beta, double tau, int* iterations) {
  if (!(tau > 0.0)) throw ConfigError("tau must be > 0");
  if (!(x[0] > 0.0)) throw NonPositiveDensity("rho = " + std::to_string(x[0]));
  const double e_sum = pressure_sum(x);
  const double r = dt_beta / tau;
  auto residual = [&](double p) { return p - x[4] - r * (0.5 * (e_sum - p) - p); };
  const double jac = 1.0 + 1.5 * r;
  double p = x[4];
  double f = residual(p);
  // size of the terms in the residual; below a few ulps of it there is
  // nothing left to gain
  auto scale = [&](double q) {
    return std::abs(q) + std::abs(x[4]) + r * (0.5 * std::abs(e_sum) + 1.5 * std::abs(q));
  };
  int it = 0;
  for (; it < 50 && std::abs(f) > 8e-16 * scale(p); ++it) {
    const double step = -f / jac;
    double lam = 1.0;
    double pn = p + step, fn = residual(pn);
    // Armijo backtracking on 1/2 f^2
    while (0.5 * fn * fn > (1.0 - 2e-4 * lam) * 0.5 * f * f && lam > 1e-10) {
      lam *= 0.5;
      pn = p + lam * step;
      fn = residual(pn);
    }
    if (lam <= 1e-10) {
      if (std::abs(f) <= 1e-12 * scale(p)) break;
      throw ImplicitSolveFailure("line search stalled at residual " + std::to_string(f));
    }
    p = pn;
    f = fn;
  }
  if (std::abs(f) > 1e-12 * scale(p)) {
    throw ImplicitSolveFailure("Newton did not converge, residual " + std::to_string(f));
  }
  if (iterations) *iterations = it;
  Vec9 out = x;
  out[4] = p;
  check_solution(out, e_sum);
  return out;
}

TimeStepper::TimeStepper(Scheme& scheme) : scheme_(scheme) {
  const SchemeConfig& c = scheme_.config();
  if (is_imex(c.integrator)) {
    ark_ = c.tableau_file.empty() ? ark2_tableau() : load_ark_tableau(c.tableau_file);
  }
}

void TimeStepper::set_tableau(const ArkTableau& t) { ark_ = t; }

int TimeStepper::order() const {
  const SchemeConfig& c = scheme_.config();
  return is_imex(c.integrator) ? ark_.order : integrator_order(c.integrator);
}

double TimeStepper::source_dot(const Field& u) const {
  const Grid& g = scheme_.grid();
  const double tau = scheme_.config().tau;
  double s = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const Vec9 w = cons_to_prim(u[g.index(i, j)], scheme_.config().eps_b);
      // V5 S5 = (beta_perp - beta_par)(p_perp - p_par)/tau
      s += (w[0] / w[5] - w[0] / w[4]) * (w[5] - w[4]) / tau;
    }
  }
  return s;
}

void TimeStepper::solve_source(Field& u, double dt_beta) const {
  const Grid& g = scheme_.grid();
  const SchemeConfig& c = scheme_.config();
  parallel_for(g.ny, c.workers, [&](int b, int e) {
    for (int j = b; j < e; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        Vec9& x = u[g.index(i, j)];
        try {
          x = c.newton ? implicit_source_solve_newton(x, dt_beta, c.tau)
                       : implicit_source_solve(x, dt_beta, c.tau);
        } catch (const NonPositiveResult& e) {
          throw NonPositiveResult("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                  "): " + e.what());
        }
      }
    }
  });
}

void TimeStepper::eval(Field& u, Field& du, int stage, StepAudit* audit, double weight,
                       bool add_source) {
  const Grid& g = scheme_.grid();
  apply_boundary(u, g);
  RhsStats st;
  try {
    scheme_.rhs(u, du, &st);
  } catch (const InadmissibleState& e) {
    throw InadmissibleState("stage " + std::to_string(stage) + ", " + e.what());
  }
  if (add_source) {
    const double tau = scheme_.config().tau;
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t k = g.index(i, j);
        du[k] += relaxation_source(cons_to_prim(u[k], scheme_.config().eps_b), tau);
      }
    }
  }
  if (audit) {
    audit->flux_div += weight * st.entropy_flux_div;
    if (add_source && weight != 0.0) audit->source += weight * source_dot(u);
    audit->max_production = std::max(audit->max_production, st.max_production);
  }
}

void TimeStepper::ssp_step(Field& u, double dt, StepAudit* audit) {
  const Grid& g = scheme_.grid();
  const ShuOsher& t = ssp_tableau(scheme_.config().integrator);
  const std::vector<double> b = final_weights(t);
  const bool src = scheme_.config().source;
  stage_u_.resize(t.stages + 1);
  stage_l_.resize(t.stages);
  stage_u_[0] = u;
  for (int s = 1; s <= t.stages; ++s) {
    eval(stage_u_[s - 1], stage_l_[s - 1], s, audit, b[s - 1], src);
    Field& next = stage_u_[s];
    next.assign(g.size(), Vec9::Zero());
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t k = g.index(i, j);
        Vec9 acc = Vec9::Zero();
        for (int m = 0; m < s; ++m) {
          const double a = t.alpha[s - 1][m], bb = t.beta[s - 1][m];
          if (a != 0.0) acc += a * stage_u_[m][k];
          if (bb != 0.0) acc += (bb * dt) * stage_l_[m][k];
        }
        next[k] = acc;
      }
    }
  }
  u.swap(stage_u_[t.stages]);
  apply_boundary(u, g);
}

void TimeStepper::ark_step(Field& u, double dt, StepAudit* audit) {
  const Grid& g = scheme_.grid();
  const SchemeConfig& c = scheme_.config();
  const int S = ark_.stages;
  stage_u_.resize(S);
  stage_l_.resize(S);
  stage_s_.resize(S);
  for (int s = 0; s < S; ++s) {
    Field& x = stage_u_[s];
    x = u;
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t k = g.index(i, j);
        Vec9 acc = Vec9::Zero();
        for (int m = 0; m < s; ++m) {
          if (ark_.ae[s][m] != 0.0) acc += ark_.ae[s][m] * stage_l_[m][k];
          if (ark_.ai[s][m] != 0.0) acc += ark_.ai[s][m] * stage_s_[m][k];
        }
        x[k] += dt * acc;
      }
    }
    if (ark_.ai[s][s] != 0.0) solve_source(x, dt * ark_.ai[s][s]);
    eval(x, stage_l_[s], s + 1, audit, ark_.be[s], false);
    Field& src = stage_s_[s];
    src.assign(g.size(), Vec9::Zero());
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t k = g.index(i, j);
        src[k] = relaxation_source(cons_to_prim(x[k], c.eps_b), c.tau);
      }
    if (audit && ark_.bi[s] != 0.0) audit->source += ark_.bi[s] * source_dot(x);
  }
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      Vec9 acc = Vec9::Zero();
      for (int s = 0; s < S; ++s) {
        if (ark_.be[s] != 0.0) acc += ark_.be[s] * stage_l_[s][k];
        if (ark_.bi[s] != 0.0) acc += ark_.bi[s] * stage_s_[s][k];
      }
      u[k] += dt * acc;
    }
  }
  apply_boundary(u, g);
}

void TimeStepper::step(Field& u, double dt, StepAudit* audit) {
  if (!(dt > 0.0)) throw ConfigError("dt must be > 0");
  if (audit) *audit = StepAudit{};
  if (is_imex(scheme_.config().integrator)) {
    ark_step(u, dt, audit);
  } else {
    ssp_step(u, dt, audit);
  }
}

}  // namespace cgl
