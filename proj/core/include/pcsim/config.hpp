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

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcsim/geometry.hpp"

namespace pcsim {

// Bad user input (config file, override, CLI). Mapped to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RhoMode { kOptimal, kFixed };
enum class Constellation { kQam4, kGaussian };
enum class HybridAssignment { kGreedy, kAllTp, kAllSp };

// All scenario and scheme knobs of one experiment. Loadable from flat JSON
// (keys match the field names below); every key can also be overridden on
// the command line with --set key=value.
struct SystemConfig {
  int tiers = 1;           // 1 -> 7 cells, 2 -> 19 cells
  int users_per_cell = 5;  // K
  std::vector<int> antennas_sweep = {300};  // M; single value or sweep
  int c_u = 100;
  int c_d = 100;
  int reuse_r = 1;  // pilot reuse factor; tau = reuse_r * K
  double snr_db = 10.0;
  double omega = 1.0;      // power-control target gain
  double omega_sp = 10.0;  // target gain of superimposed users in hybrid runs
  double lambda_tp = 1.0;  // uplink data power of training users in hybrid
  RhoMode rho_mode = RhoMode::kOptimal;
  double rho_d_sq = 0.5;  // used when rho_mode = fixed
  double xi_ul = 0.5;
  Constellation constellation = Constellation::kQam4;
  Scenario scenario = Scenario::kCircle;
  double circle_radius = 0.8;                  // km
  std::vector<double> radius_sweep;            // radius-axis figures
  std::vector<int> users_sweep;                // K-axis figures
  double min_dist = 0.1;                       // km
  double cell_radius = 1.0;                    // km
  double path_loss_exponent = 3.0;
  HybridAssignment hybrid_assignment = HybridAssignment::kGreedy;
  long trials = 2000;
  long draws_per_placement = 1;  // channel draws per user placement
  std::uint64_t seed = 42;

  int cells() const { return tiers == 1 ? 7 : 19; }
  int tau() const { return reuse_r * users_per_cell; }
  int antennas() const { return antennas_sweep.front(); }
  double sigma_sq() const {
    return omega / std::pow(10.0, snr_db / 10.0);
  }

  void validate() const;  // throws ConfigError
};

SystemConfig load_config_file(const std::string& path);
void merge_config_json(SystemConfig& config, const std::string& json_text);
void apply_override(SystemConfig& config, const std::string& key,
                    const std::string& value);

}  // namespace pcsim
