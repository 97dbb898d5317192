// Initial data for the 1D and 2D test problems.
#pragma once

#include <string>
#include <vector>

#include "cgl/scheme.hpp"

namespace cgl {

struct TestCase {
  std::string id;
  std::string title;
  int dim = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  Boundary bc = Boundary::outflow;
  double t_final = 0.0;
  int default_n = 2000;
  // 1D Riemann data: primitive states, jump at x_jump (cell centres at
  // x <= x_jump take the left state)
  bool riemann = false;
  double x_jump = 0.0;
  Vec9 left = Vec9::Zero();
  Vec9 right = Vec9::Zero();
};

// accuracy, brio_wu, ryu_jones, superfast, rp4, rp5, rp6, rp7, orszag_tang;
// rp1..rp3 are accepted as aliases.
const std::vector<std::string>& case_ids();
const TestCase& find_case(const std::string& id);

Grid case_grid(const TestCase& c, int n, int ghost);

// Conserved field with ghosts filled.
Field init_case(const TestCase& c, const Grid& g);

// Primitive state of the smooth advection problem.
Vec9 exact_accuracy_solution(double x, double t);

}  // namespace cgl
