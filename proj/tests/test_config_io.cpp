#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cgl/config.hpp"
#include "cgl/io.hpp"
#include "helpers.hpp"

using namespace cgl;

TEST_CASE("run configuration text") {
  const RunConfig c = parse_run_config(R"(# study
case = accuracy
scheme = O3ES-EXP
n = 40, 80,160
cfl = 0.2
dt_refine = off
)");
  CHECK(c.case_id == "accuracy");
  CHECK(c.scheme == "O3ES-EXP");
  CHECK(c.ns == std::vector<int>{40, 80, 160});
  CHECK(c.dt_refine == "off");
  const SchemeConfig s = build_scheme(c);
  CHECK(s.cfl == 0.2);
  CHECK(s.k == 3);
}

TEST_CASE("configuration errors name the line") {
  try {
    parse_run_config("case = brio_wu\n\nbogus = 1\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("config:3:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_run_config("case brio_wu\n"), ConfigError);
  CHECK_THROWS_AS(parse_run_config("n = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_run_config("dt_refine = sometimes\n"), ConfigError);
  CHECK_THROWS_AS(parse_run_config("t_final = abc\n"), ConfigError);
}

TEST_CASE("snapshot CSV") {
  const Grid g = make_grid_1d(3, 0, 1, 2, Boundary::periodic);
  const Field u(g.size(), prim_to_cons(testutil::prim(1, 0, 0, 0, 1, 1, 1, 0, 0)));
  std::istringstream in(snapshot_csv(g, u));
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,rho,ux,uy,uz,p_par,p_perp,Bx,By,Bz");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  const Grid g2 = make_grid_2d(4, 4, 0, 1, 0, 1, 2, Boundary::periodic);
  const Field u2(g2.size(), u[0]);
  CHECK(snapshot_csv(g2, u2).rfind("x,y,rho", 0) == 0);
}

TEST_CASE("convergence table") {
  const std::string t = convergence_table("O2ES-EXP", {{40, 1e-2}, {80, 2.5e-3}});
  CHECK(t.find("O2ES-EXP") == 0);
  CHECK(t.find("--") != std::string::npos);
  CHECK(t.find("2.0000") != std::string::npos);
  CHECK(convergence_table("x", {}).empty());
}

TEST_CASE("manifest") {
  RunResult r;
  r.tc = find_case("brio_wu");
  r.grid = case_grid(r.tc, 16, 2);
  r.scheme = scheme_from_name("O2ES-IMEX");
  r.t = 0.2;
  r.steps = 10;
  r.time_order = 2;
  const auto j = nlohmann::json::parse(manifest_json(r, R"({"dt_factor": 1.0})"));
  CHECK(j["case"] == "brio_wu");
  CHECK(j["scheme"]["name"] == "O2ES-IMEX");
  CHECK(j["scheme"]["reconstruction"] == "minmod");
  CHECK(j["scheme"]["source"] == true);
  CHECK(j["nx"] == 16);
}
