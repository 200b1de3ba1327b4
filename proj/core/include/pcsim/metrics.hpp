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

#include <vector>

#include "pcsim/channel.hpp"
#include "pcsim/partition.hpp"
#include "pcsim/pilots.hpp"

namespace pcsim {

// Everything the closed-form metrics need. Estimation-error metrics are
// normalized per antenna; SINRs are linear.
struct MetricInputs {
  const GainTensor& beta;
  int antennas = 1;
  int c_u = 1;
  int c_d = 1;
  int tau = 1;
  double sigma_sq = 0.0;
  PowerSplit split;
  std::vector<int> cell_color;  // pilot reuse groups

  bool same_group(int a, int b) const { return cell_color[a] == cell_color[b]; }
};

// Training-pilot estimation error: co-pilot gains plus sigma^2 / tau.
// Independent of the antenna count.
double mse_tp(const MetricInputs& in, int j, int m);

// Superimposed-pilot estimation error:
// (rho_d^2 / (c_u rho_p^2)) sum of all gains at site j + sigma^2/(rho_p^2 c_u).
double mse_sp(const MetricInputs& in, int j, int m);

// Same quantity with the optimal power split substituted in closed form;
// used as the algebraic cross-check of mse_sp composed with
// optimal_power_split.
double mse_sp_optimal_form(const MetricInputs& in, int j, int m);

// Bayesian lower bound on the per-antenna estimation error of a serving
// channel, 1 / (c_u / sigma^2 + 1 / beta). Approaches sigma^2 / c_u once
// sigma^2 / c_u is small against the serving gain (noise_floor).
double crlb_sp(const MetricInputs& in, int j, int m);
double crlb_sp_noise_floor(const MetricInputs& in);

// Large-antenna-limit downlink SINR under training pilots. Returns +inf when
// the user has no co-pilot interferer.
double dl_sinr_tp(const MetricInputs& in, int j, int m);

// Downlink SINR under superimposed pilots at finite antenna count, and its
// large-antenna limit.
double dl_sinr_sp_exact(const MetricInputs& in, int j, int m);
double dl_sinr_sp_asymptotic(const MetricInputs& in, int j, int m);

// Asymptotic SP downlink SINR with the optimal split substituted in closed
// form: sqrt(c_u (M + L K)) beta^2 / (K sum of squared cross gains).
double dl_sinr_sp_asymptotic_optimal_form(const MetricInputs& in, int j,
                                          int m);

// Downlink rate: the downlink fraction of the coherence interval times
// log2(1 + sinr).
double rate_dl(double sinr, int c_u, int c_d);

// Uplink rate with the data fraction (c_u - tau) / (c_u + c_d) as prefactor.
double rate_ul(double sinr, int c_u, int c_d, int tau);

struct LinkSinr {
  double ul = 0.0;
  double dl = 0.0;
};

// Uplink/downlink SINR pair for one user of a partitioned system, using the
// formula matching the user's pilot set. Empty interference sums give +inf.
LinkSinr hybrid_sinrs(const MetricInputs& in, const PartitionResult& part,
                      int j, int m);

}  // namespace pcsim
