#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgl/cases.hpp"
#include "cgl/diagnostics.hpp"
#include "cgl/flux.hpp"
#include "cgl/physics.hpp"
#include "cgl/solver.hpp"
#include "cgl/verify.hpp"

namespace py = pybind11;
using namespace cgl;

namespace {

Axis to_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  throw ConfigError("axis must be 'x' or 'y'");
}

py::dict run(const std::string& case_id, const std::string& scheme, int n, double t_final,
             double cfl) {
  RunOptions o;
  o.case_id = case_id;
  o.scheme = scheme_from_name(scheme);
  if (cfl > 0.0) o.scheme.cfl = cfl;
  o.n = n;
  o.t_final = t_final;
  RunResult r;
  {
    py::gil_scoped_release release;
    r = run_case(o);
  }
  const Grid& g = r.grid;
  py::array_t<double> w({static_cast<py::ssize_t>(g.ny), static_cast<py::ssize_t>(g.nx),
                         static_cast<py::ssize_t>(9)});
  auto a = w.mutable_unchecked<3>();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Vec9 p = cons_to_prim(r.u[g.index(i, j)]);
      for (int k = 0; k < 9; ++k) a(j, i, k) = p[k];
    }
  std::vector<double> x, y, ent, res, res_stage, tol;
  for (int i = 0; i < g.nx; ++i) x.push_back(g.xc(i));
  for (int j = 0; j < g.ny; ++j) y.push_back(g.yc(j));
  for (const auto& s : r.budget) {
    ent.push_back(s.total_entropy);
    res.push_back(s.residual);
    res_stage.push_back(s.residual_stage);
    tol.push_back(s.tolerance);
  }
  py::dict d;
  d["x"] = x;
  if (g.dim == 2) d["y"] = y;
  d["w"] = g.dim == 2 ? py::object(w) : py::object(w[py::int_(0)]);
  d["t"] = r.t;
  d["steps"] = r.steps;
  d["total_entropy"] = ent;
  d["residual"] = res;
  d["residual_stage"] = res_stage;
  d["tolerance"] = tol;
  d["max_region_violations"] = r.max_region_violations;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cgl, m) {
  m.doc() = "Entropy-stable finite difference solver for the CGL equations";

  py::register_exception<Error>(m, "CglError", PyExc_RuntimeError);

  m.def("prim_to_cons", [](const Vec9& w) { return prim_to_cons(w); }, py::arg("w"));
  m.def("cons_to_prim", [](const Vec9& u) { return cons_to_prim(u); }, py::arg("u"));
  m.def("entropy_vars", &entropy_vars, py::arg("w"));
  m.def("physical_flux", [](const Vec9& w, const std::string& d) { return physical_flux(w, to_axis(d)); },
        py::arg("w"), py::arg("axis") = "x");
  m.def("ec_flux",
        [](const Vec9& wl, const Vec9& wr, const std::string& d) { return ec_flux(wl, wr, to_axis(d)); },
        py::arg("wl"), py::arg("wr"), py::arg("axis") = "x");
  m.def("log_mean", &log_mean, py::arg("a"), py::arg("b"));
  m.def("case_ids", &case_ids);
  m.def("scheme_names", &scheme_names);
  m.def("run", &run, py::arg("case_id"), py::arg("scheme") = "O2ES-EXP", py::arg("n") = 0,
        py::arg("t_final") = -1.0, py::arg("cfl") = -1.0,
        "Run a case; returns the primitive field w[..., 9] and the entropy budget.");
  m.def(
      "verify",
      [](long samples, std::uint64_t seed) {
        py::list out;
        for (const auto& r : run_verify_suite(samples, seed)) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["worst"] = r.worst;
          d["tolerance"] = r.tolerance;
          d["samples"] = r.samples;
          out.append(d);
        }
        return out;
      },
      py::arg("samples") = 1000, py::arg("seed") = 20240601);
}
