// Command line front end: run, list-cases, verify.
#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cgl/cases.hpp"
#include "cgl/config.hpp"
#include "cgl/diagnostics.hpp"
#include "cgl/io.hpp"
#include "cgl/solver.hpp"
#include "cgl/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cgl::ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string stem(const cgl::RunConfig& c, int n) {
  return c.case_id + "_" + c.scheme + "_n" + std::to_string(n);
}

int do_run(const cgl::RunConfig& cfg) {
  // validate everything before touching the file system
  if (cfg.case_id.empty()) throw cgl::ConfigError("no case given (--case or 'case =')");
  const cgl::TestCase& tc = cgl::find_case(cfg.case_id);
  const cgl::SchemeConfig scheme = cgl::build_scheme(cfg);
  std::vector<int> ns = cfg.ns;
  if (ns.empty()) ns.push_back(tc.default_n);
  const bool study = ns.size() > 1;
  if (study && tc.id != "accuracy") {
    throw cgl::ConfigError("resolution lists are only supported for the accuracy case");
  }
  fs::create_directories(cfg.out_dir);

  std::vector<cgl::ConvergenceRow> rows;
  for (int n : ns) {
    cgl::RunOptions opt;
    opt.case_id = tc.id;
    opt.scheme = scheme;
    opt.n = n;
    opt.t_final = cfg.t_final;
    double factor = 1.0;
    int q = 0;
    {
      cgl::Scheme probe(cgl::case_grid(tc, std::max(n, 8), cgl::ghost_width(scheme.k)), scheme);
      q = cgl::TimeStepper(probe).order();
    }
    if (study && cfg.dt_refine == "auto") factor = cgl::dt_refinement(scheme.k, q, ns.front(), n);
    opt.dt_factor = factor;
    const std::string base = (fs::path(cfg.out_dir) / stem(cfg, n)).string();
    if (cfg.cadence > 0) {
      opt.on_step = [&](const cgl::StepRecord& r, const cgl::Simulation& sim) {
        if (r.step % cfg.cadence == 0) {
          cgl::write_snapshot_csv(base + "_step" + std::to_string(r.step) + ".csv", sim.grid(),
                                  sim.state());
        }
      };
    }
    const cgl::RunResult res = cgl::run_case(opt);
    cgl::write_snapshot_csv(base + "_final.csv", res.grid, res.u);
    cgl::write_budget_csv(base + "_budget.csv", res.budget);
    std::ostringstream extra;
    extra << "{\"dt_factor\": " << factor;
    double max_res = -1e300;
    for (const auto& r : res.budget) max_res = std::max(max_res, r.residual - r.tolerance);
    extra << ", \"max_residual_minus_tolerance\": " << (res.budget.empty() ? 0.0 : max_res);
    if (tc.id == "accuracy") {
      std::vector<double> exact;
      for (int i = 0; i < res.grid.nx; ++i) {
        exact.push_back(cgl::exact_accuracy_solution(res.grid.xc(i), res.t)[0]);
      }
      const double err = cgl::l1_error(cgl::density(res.u, res.grid), exact, res.grid.dx);
      rows.push_back({n, err});
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", err);
      extra << ", \"l1_error_rho\": " << buf;
    }
    extra << "}";
    std::ofstream(base + "_manifest.json") << cgl::manifest_json(res, extra.str());
    std::printf("%s: %ld steps to t = %.6g in %.2f s\n", stem(cfg, n).c_str(), res.steps, res.t,
                res.wall_seconds);
  }
  if (!rows.empty()) {
    const std::string table = cgl::convergence_table(cfg.scheme, rows);
    std::ofstream(fs::path(cfg.out_dir) / (cfg.case_id + "_" + cfg.scheme + "_convergence.txt"))
        << table;
    std::cout << table;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-stable finite difference solver for the CGL equations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a test case");
  std::string config_path, case_id, scheme, ns, out, integrator, tableau;
  double cfl = 0.0, t_final = -1.0, tau = 0.0;
  long cadence = -1;
  int workers = 0;
  bool newton = false;
  std::vector<std::string> sets;
  run->add_option("-c,--config", config_path, "key = value config file");
  run->add_option("--case", case_id, "case id (see list-cases)");
  run->add_option("--scheme", scheme, "O2ES-EXP, O3ES-EXP, O4ES-EXP, O2ES-IMEX, O3ES-IMEX, O4ES-IMEX, EC-only");
  run->add_option("--n", ns, "resolution or comma list, e.g. 40,80,160,320");
  run->add_option("--cfl", cfl, "CFL number");
  run->add_option("--t-final", t_final, "final time override");
  run->add_option("--tau", tau, "relaxation time");
  run->add_option("--out", out, "output directory");
  run->add_option("--cadence", cadence, "extra snapshot every N steps");
  run->add_option("--workers", workers, "threads for the right-hand side");
  run->add_option("--integrator", integrator, "SSPRK2, SSPRK3, SSPRK4 or ARK2");
  run->add_option("--tableau", tableau, "ARK tableau file for the implicit path");
  run->add_flag("--newton", newton, "solve the implicit source by Newton iteration");
  run->add_option("--set", sets, "extra key=value overrides");

  app.add_subcommand("list-cases", "list the built-in test cases");

  auto* verify = app.add_subcommand("verify", "run the randomised property checks");
  long samples = 10000;
  std::uint64_t seed = 20240601;
  verify->add_option("--samples", samples, "samples per property");
  verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-cases")) {
      std::printf("%-12s %3s  %-16s %8s %8s  %s\n", "id", "dim", "domain", "t_final", "N",
                  "title");
      for (const auto& id : cgl::case_ids()) {
        const cgl::TestCase& c = cgl::find_case(id);
        char dom[64];
        if (c.dim == 1) {
          std::snprintf(dom, sizeof dom, "[%g, %g]", c.x0, c.x1);
        } else {
          std::snprintf(dom, sizeof dom, "[%g, %g]^2", c.x0, c.x1);
        }
        std::printf("%-12s %3d  %-16s %8g %8d  %s (%s)\n", c.id.c_str(), c.dim, dom, c.t_final,
                    c.default_n, c.title.c_str(), cgl::boundary_name(c.bc));
      }
      return 0;
    }
    if (app.got_subcommand("verify")) {
      bool ok = true;
      for (const auto& r : cgl::run_verify_suite(samples, seed)) {
        std::printf("%s %-28s worst %.3e  tol %.1e  (%ld samples)\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst, r.tolerance, r.samples);
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
    cgl::RunConfig cfg;
    if (!config_path.empty()) cfg = cgl::parse_run_config(read_file(config_path));
    if (!case_id.empty()) cfg.case_id = case_id;
    if (!scheme.empty()) cfg.scheme = scheme;
    if (!ns.empty()) cfg.ns = cgl::parse_int_list(ns);
    if (t_final >= 0.0) cfg.t_final = t_final;
    if (!out.empty()) cfg.out_dir = out;
    if (cadence >= 0) cfg.cadence = cadence;
    if (cfl > 0.0) cfg.scheme_overrides["cfl"] = num(cfl);
    if (tau > 0.0) cfg.scheme_overrides["tau"] = num(tau);
    if (workers > 0) cfg.scheme_overrides["workers"] = std::to_string(workers);
    if (!integrator.empty()) cfg.scheme_overrides["integrator"] = integrator;
    if (!tableau.empty()) cfg.scheme_overrides["tableau"] = tableau;
    if (newton) cfg.scheme_overrides["newton"] = "true";
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw cgl::ConfigError("--set expects key=value, got " + kv);
      cgl::set_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1), "--set: ");
    }
    return do_run(cfg);
  } catch (const cgl::ConfigError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
