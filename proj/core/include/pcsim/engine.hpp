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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcsim/channel.hpp"
#include "pcsim/config.hpp"
#include "pcsim/metrics.hpp"
#include "pcsim/partition.hpp"
#include "pcsim/pilots.hpp"

namespace pcsim {

enum class Experiment {
  kMseValidation,    // empirical estimation error per scheme
  kDlDecomposition,  // downlink interference term accounting
  kDlLink,           // downlink bit errors and interference power
  kUlLink,           // uplink bit errors
  kHybridLink,       // partitioned system: analytic rates plus bit errors
};

struct SeriesStat {
  double mean = 0.0;
  double ci95 = 0.0;  // normal-approximation 95% half width
  double min = 0.0;
  double max = 0.0;
};

struct AggregateReport {
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> names;
  std::vector<SeriesStat> stats;

  int index_of(const std::string& name) const;
  const SeriesStat& stat(const std::string& name) const;
  double mean(const std::string& name) const;
};

// Order-independent reduction: every trial writes its own slot, slots are
// combined in trial order, so the result is bit-identical for any thread
// count.
AggregateReport reduce_trials(
    std::vector<std::string> names, long trials, std::uint64_t seed,
    const std::function<void(long, std::vector<double>&)>& trial_fn);

// Runs `trials` independent trials of the experiment. Per-trial substreams
// are derived from (config.seed, trial index), so results do not depend on
// scheduling. For uniform placements, trial t uses placement
// t / draws_per_placement.
AggregateReport run_trials(const SystemConfig& config, Experiment experiment,
                           long trials);

std::vector<std::string> trial_metric_names(const SystemConfig& config,
                                            Experiment experiment);
std::vector<double> run_single_trial(const SystemConfig& config,
                                     Experiment experiment, long trial);

// Geometry, gains and reuse groups for one placement realization.
struct Scene {
  CellGrid grid;
  UserLayout layout;
  GainTensor beta;  // effective gains at the base power-control target
  std::vector<int> color;
};

Scene make_scene(const SystemConfig& config, long placement);

// Cells whose users the partition may reassign and over which hybrid
// metrics are accumulated: the center cell and its first tier.
int measured_cells(const SystemConfig& config);

// Partitioned-system context: the user split, per-user effective gains with
// the superimposed users' power-control target applied, the frame plan, and
// the analytic rate sums over the measured cells.
struct HybridContext {
  PartitionResult partition;
  GainTensor beta_eff;
  FramePlan plan;
  PilotSet pilots;
  PowerSplit split;
  double rate_ul_sum = 0.0;
  double rate_dl_sum = 0.0;
};

HybridContext make_hybrid_context(const SystemConfig& config,
                                  const Scene& scene, int antennas);

}  // namespace pcsim
