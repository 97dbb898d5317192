// Key-value run configuration.
//
//   # comment
//   case = brio_wu
//   scheme = O2ES-EXP
//   n = 2000            (comma list for refinement studies)
//
// Recognised keys are listed by config_keys().
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgl/scheme.hpp"

namespace cgl {

struct RunConfig {
  std::string case_id;
  std::string scheme = "O2ES-EXP";
  std::vector<int> ns;       // empty: case default
  double t_final = -1.0;
  std::string out_dir = ".";
  long cadence = 0;          // extra snapshots every `cadence` steps (0: final only)
  std::string dt_refine = "auto";
  std::map<std::string, std::string> scheme_overrides;
};

const std::vector<std::string>& config_keys();

// Throws ConfigError("config:<line>: ...") on malformed lines or unknown keys.
RunConfig parse_run_config(const std::string& text, RunConfig base = {});

// Sets one key; `where` prefixes error messages.
void set_config_key(RunConfig& c, const std::string& key, const std::string& value,
                    const std::string& where = "");

std::vector<int> parse_int_list(const std::string& s);

// Scheme from c.scheme with overrides (cfl, tau, k, integrator, ...) applied.
SchemeConfig build_scheme(const RunConfig& c);

}  // namespace cgl
