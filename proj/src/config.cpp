#include "cgl/config.hpp"

#include <algorithm>
#include <sstream>

namespace cgl {

namespace {

const std::vector<std::string> kSchemeKeys = {"cfl",        "tau",     "eps_b",  "k",
                                              "flux_order", "diffusion", "source", "integrator",
                                              "newton",     "tableau", "workers"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(where + "'" + key + "' expects a number, got '" + v + "'");
}

long to_long(const std::string& v, const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const long d = std::stol(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ConfigError(where + "'" + key + "' expects an integer, got '" + v + "'");
}

bool to_bool(const std::string& v, const std::string& key, const std::string& where) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw ConfigError(where + "'" + key + "' expects true/false, got '" + v + "'");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {"case", "scheme", "n", "t_final", "out", "cadence", "dt_refine"};
    k.insert(k.end(), kSchemeKeys.begin(), kSchemeKeys.end());
    return k;
  }();
  return keys;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const long v = to_long(item, "n", "");
    if (v < 1 || v > 1000000) throw ConfigError("resolution out of range: " + item);
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ConfigError("empty resolution list");
  return out;
}

void set_config_key(RunConfig& c, const std::string& key, const std::string& value,
                    const std::string& where) {
  if (key == "case") {
    c.case_id = value;
  } else if (key == "scheme") {
    c.scheme = value;
  } else if (key == "n") {
    c.ns = parse_int_list(value);
  } else if (key == "t_final") {
    c.t_final = to_double(value, key, where);
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "cadence") {
    c.cadence = to_long(value, key, where);
  } else if (key == "dt_refine") {
    if (value != "auto" && value != "off") {
      throw ConfigError(where + "'dt_refine' expects auto or off, got '" + value + "'");
    }
    c.dt_refine = value;
  } else if (std::find(kSchemeKeys.begin(), kSchemeKeys.end(), key) != kSchemeKeys.end()) {
    c.scheme_overrides[key] = value;
  } else {
    throw ConfigError(where + "unknown key '" + key + "'");
  }
}

RunConfig parse_run_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "config:" + std::to_string(no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where + "expected key = value");
    set_config_key(base, key, value, where);
  }
  return base;
}

SchemeConfig build_scheme(const RunConfig& c) {
  SchemeConfig s = scheme_from_name(c.scheme);
  for (const auto& [key, v] : c.scheme_overrides) {
    if (key == "cfl") s.cfl = to_double(v, key, "");
    if (key == "tau") s.tau = to_double(v, key, "");
    if (key == "eps_b") s.eps_b = to_double(v, key, "");
    if (key == "k") s.k = static_cast<int>(to_long(v, key, ""));
    if (key == "flux_order") s.flux_order = static_cast<int>(to_long(v, key, ""));
    if (key == "diffusion") s.diffusion = to_bool(v, key, "");
    if (key == "source") s.source = to_bool(v, key, "");
    if (key == "integrator") s.integrator = integrator_from_name(v);
    if (key == "newton") s.newton = to_bool(v, key, "");
    if (key == "tableau") s.tableau_file = v;
    if (key == "workers") s.workers = static_cast<int>(to_long(v, key, ""));
  }
  if (!s.tableau_file.empty() && !is_imex(s.integrator)) {
    throw ConfigError("a tableau file needs the ARK2 (IMEX) integrator");
  }
  if (s.k < 1 || s.k > 4) throw ConfigError("k must be 1..4");
  if (s.flux_order != 2 && s.flux_order != 4) throw ConfigError("flux_order must be 2 or 4");
  if (!(s.cfl > 0.0)) throw ConfigError("cfl must be > 0");
  if (!(s.tau > 0.0)) throw ConfigError("tau must be > 0");
  if (s.workers < 1) throw ConfigError("workers must be >= 1");
  return s;
}

}  // namespace cgl
