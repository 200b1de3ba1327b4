// Copyright 2026 The pcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsim/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pcsim {

namespace {

using nlohmann::json;

std::vector<int> int_list(const json& v, const std::string& key) {
  std::vector<int> out;
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
  } else if (v.is_array()) {
    for (const json& e : v) out.push_back(e.get<int>());
  } else {
    throw ConfigError("config: " + key + " must be an integer or a list");
  }
  return out;
}

std::vector<double> double_list(const json& v, const std::string& key) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const json& e : v) out.push_back(e.get<double>());
  } else {
    throw ConfigError("config: " + key + " must be a number or a list");
  }
  return out;
}

RhoMode parse_rho_mode(const std::string& s) {
  if (s == "optimal") return RhoMode::kOptimal;
  if (s == "fixed") return RhoMode::kFixed;
  throw ConfigError("config: rho_mode must be 'optimal' or 'fixed'");
}

Constellation parse_constellation(const std::string& s) {
  if (s == "qam4") return Constellation::kQam4;
  if (s == "gaussian") return Constellation::kGaussian;
  throw ConfigError("config: constellation must be 'qam4' or 'gaussian'");
}

Scenario parse_scenario(const std::string& s) {
  if (s == "uniform") return Scenario::kUniform;
  if (s == "circle") return Scenario::kCircle;
  throw ConfigError("config: scenario must be 'uniform' or 'circle'");
}

HybridAssignment parse_assignment(const std::string& s) {
  if (s == "greedy") return HybridAssignment::kGreedy;
  if (s == "all_tp") return HybridAssignment::kAllTp;
  if (s == "all_sp") return HybridAssignment::kAllSp;
  throw ConfigError(
      "config: hybrid_assignment must be 'greedy', 'all_tp' or 'all_sp'");
}

void apply_json(SystemConfig& c, const json& j) {
  int declared_cells = 0;
  int declared_tau = -1;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "tiers") {
        c.tiers = value.get<int>();
      } else if (key == "L") {
        declared_cells = value.get<int>();
      } else if (key == "K") {
        c.users_per_cell = value.get<int>();
      } else if (key == "M") {
        c.antennas_sweep = int_list(value, key);
      } else if (key == "c_u") {
        c.c_u = value.get<int>();
      } else if (key == "c_d") {
        c.c_d = value.get<int>();
      } else if (key == "reuse_r") {
        c.reuse_r = value.get<int>();
      } else if (key == "tau") {
        declared_tau = value.get<int>();
      } else if (key == "snr_db") {
        c.snr_db = value.get<double>();
      } else if (key == "omega") {
        c.omega = value.get<double>();
      } else if (key == "omega_sp") {
        c.omega_sp = value.get<double>();
      } else if (key == "lambda_tp") {
        c.lambda_tp = value.get<double>();
      } else if (key == "rho_mode") {
        c.rho_mode = parse_rho_mode(value.get<std::string>());
      } else if (key == "rho_d_sq") {
        c.rho_d_sq = value.get<double>();
      } else if (key == "xi_ul") {
        c.xi_ul = value.get<double>();
      } else if (key == "constellation") {
        c.constellation = parse_constellation(value.get<std::string>());
      } else if (key == "scenario") {
        c.scenario = parse_scenario(value.get<std::string>());
      } else if (key == "circle_radius") {
        c.circle_radius = value.get<double>();
      } else if (key == "radius_sweep") {
        c.radius_sweep = double_list(value, key);
      } else if (key == "users_sweep") {
        c.users_sweep = int_list(value, key);
      } else if (key == "min_dist") {
        c.min_dist = value.get<double>();
      } else if (key == "cell_radius") {
        c.cell_radius = value.get<double>();
      } else if (key == "path_loss_exponent") {
        c.path_loss_exponent = value.get<double>();
      } else if (key == "hybrid_assignment") {
        c.hybrid_assignment = parse_assignment(value.get<std::string>());
      } else if (key == "trials") {
        c.trials = value.get<long>();
      } else if (key == "draws_per_placement") {
        c.draws_per_placement = value.get<long>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else {
        throw ConfigError("config: unknown key '" + key + "'");
      }
    } catch (const json::exception& e) {
      throw ConfigError("config: bad value for '" + key + "': " + e.what());
    }
  }
  if (declared_cells != 0 && declared_cells != c.cells()) {
    throw ConfigError("config: L must match tiers (7 or 19 cells)");
  }
  if (declared_tau >= 0 && declared_tau != c.tau()) {
    throw ConfigError("config: tau must equal reuse_r * K");
  }
}

}  // namespace

void SystemConfig::validate() const {
  if (tiers != 1 && tiers != 2) {
    throw ConfigError("config: tiers must be 1 or 2");
  }
  if (users_per_cell < 1) throw ConfigError("config: K must be >= 1");
  if (antennas_sweep.empty()) throw ConfigError("config: M must be set");
  for (int m : antennas_sweep) {
    if (m < 1) throw ConfigError("config: M entries must be >= 1");
  }
  if (c_u < 1 || c_d < 1) throw ConfigError("config: c_u, c_d must be >= 1");
  if (reuse_r != 1 && reuse_r != 3 && reuse_r != 4 && reuse_r != 7) {
    throw ConfigError("config: reuse_r must be one of 1, 3, 4, 7");
  }
  if (tau() > c_u) throw ConfigError("config: tau = reuse_r*K must be <= c_u");
  if (!(omega > 0.0) || !(omega_sp > 0.0)) {
    throw ConfigError("config: omega values must be > 0");
  }
  if (lambda_tp < 0.0) throw ConfigError("config: lambda_tp must be >= 0");
  if (rho_mode == RhoMode::kFixed &&
      (!(rho_d_sq > 0.0) || !(rho_d_sq < 1.0))) {
    throw ConfigError("config: rho_d_sq must be in (0, 1)");
  }
  if (!(xi_ul >= 0.0) || !(xi_ul <= 1.0)) {
    throw ConfigError("config: xi_ul must be in [0, 1]");
  }
  if (!(cell_radius > 0.0)) throw ConfigError("config: cell_radius <= 0");
  if (scenario == Scenario::kCircle &&
      (!(circle_radius > 0.0) || circle_radius > cell_radius)) {
    throw ConfigError("config: circle_radius must be in (0, cell_radius]");
  }
  for (double r : radius_sweep) {
    if (!(r > 0.0) || r > cell_radius) {
      throw ConfigError("config: radius_sweep entries must be in (0, cell_radius]");
    }
  }
  for (int k : users_sweep) {
    if (k < 1) throw ConfigError("config: users_sweep entries must be >= 1");
  }
  if (scenario == Scenario::kUniform &&
      (!(min_dist > 0.0) || min_dist >= cell_radius)) {
    throw ConfigError("config: min_dist must be in (0, cell_radius)");
  }
  if (!(path_loss_exponent > 0.0)) {
    throw ConfigError("config: path_loss_exponent must be > 0");
  }
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (draws_per_placement < 1) {
    throw ConfigError("config: draws_per_placement must be >= 1");
  }
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  SystemConfig config;
  merge_config_json(config, text.str());
  return config;
}

void merge_config_json(SystemConfig& config, const std::string& json_text) {
  json parsed;
  try {
    parsed = json::parse(json_text, nullptr, true, true);  // allow comments
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!parsed.is_object()) {
    throw ConfigError("config: top level must be a JSON object");
  }
  apply_json(config, parsed);
}

void apply_override(SystemConfig& config, const std::string& key,
                    const std::string& value) {
  // Reuse the JSON path: wrap the value, quoting it when it is not a number
  // or list so enum strings work without explicit quotes.
  std::string literal = value;
  const bool looks_structured =
      !value.empty() &&
      (value.find_first_not_of("0123456789+-.eE,") == std::string::npos ||
       value.front() == '[');
  if (looks_structured && value.front() != '[' &&
      value.find(',') != std::string::npos) {
    literal = "[" + value + "]";  // bare comma list
  } else if (!looks_structured) {
    literal = "\"" + value + "\"";
  }
  merge_config_json(config, "{\"" + key + "\":" + literal + "}");
}

}  // namespace pcsim
