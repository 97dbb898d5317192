// Randomised property checks of the discrete kernels.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cgl/core.hpp"

namespace cgl {

struct CheckResult {
  std::string name;
  bool passed;
  double worst;      // worst observed error measure
  double tolerance;
  long samples;
};

// Random primitive state inside the admissible region.
Vec9 random_admissible_state(std::mt19937_64& rng);

std::vector<CheckResult> run_verify_suite(long samples = 10000, std::uint64_t seed = 20240601);

}  // namespace cgl
