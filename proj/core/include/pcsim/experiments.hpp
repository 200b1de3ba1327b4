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

#include <ostream>
#include <vector>

#include "pcsim/config.hpp"

namespace pcsim {

struct RunSummary {
  long rows = 0;
  double wall_seconds = 0.0;
};

// Per-user closed-form metrics for the configured layout, one row per user
// and antenna count.
RunSummary cmd_analytic(const SystemConfig& config, std::ostream& os);

// Reproduces one figure protocol as CSV. Unknown ids are rejected with the
// valid list in the message.
RunSummary cmd_figure(int id, const SystemConfig& config, std::ostream& os);

// Scheme comparison table: rates and bit error rates for the partitioned,
// training-only and superimposed-only systems.
RunSummary cmd_table1(const SystemConfig& config, std::ostream& os);

// Runs the greedy partition once and dumps assignment plus cost trace.
RunSummary cmd_partition(const SystemConfig& config, std::ostream& os);

const std::vector<int>& figure_ids();

// Built-in protocol defaults. CLI layering: defaults, then config file, then
// --set overrides.
SystemConfig figure_defaults(int id);
SystemConfig analytic_defaults();
SystemConfig table1_defaults();
SystemConfig partition_defaults();

}  // namespace pcsim
