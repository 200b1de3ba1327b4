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

#include <armadillo>
#include <vector>

#include "pcsim/channel.hpp"
#include "pcsim/pilots.hpp"
#include "pcsim/rng.hpp"

namespace pcsim {

// One site's received uplink block: the superposition of every user's frame
// through its channel plus i.i.d. CN(0, sigma_sq) noise.
struct UplinkObservation {
  arma::cx_mat y;  // antennas x c_u
  double sigma_sq = 0.0;
};

// sigma_sq = 0 gives the noiseless observation used by the test oracles.
std::vector<UplinkObservation> receive_uplink(const ChannelRealization& chan,
                                              const arma::cx_mat& frames,
                                              double sigma_sq, RngStream& rng);

// Least-squares estimate from a training pilot: correlate the first tau
// received symbols against the pilot and divide by tau. With shared pilots
// the result is the contaminated sum of the co-pilot users' channels.
arma::cx_vec estimate_tp(const UplinkObservation& obs, const PilotBook& book,
                         int pilot_index, int tau);

// Least-squares estimate from a superimposed pilot: correlate the whole
// frame against the pilot column and divide by c_u * rho_p. Unbiased; the
// data riding on top of the pilots leaks into the error term.
arma::cx_vec estimate_sp(const UplinkObservation& obs, const SpPilotMatrix& sp,
                         int column, double rho_p);

// Hybrid variants. The TP correlator is zero-padded past tau, so it reduces
// to estimate_tp; the SP correlator is zero for the training phase and
// normalizes by (c_u - tau) * rho_p.
arma::cx_vec estimate_hybrid_tp(const UplinkObservation& obs,
                                const PilotBook& book, int pilot_index,
                                int tau);
arma::cx_vec estimate_hybrid_sp(const UplinkObservation& obs,
                                const SpPilotMatrix& sp, int column, int c_u,
                                int tau, double rho_p);

enum class EstimatorKind { kTp, kSp, kHybridTp, kHybridSp, kMixed };

// Serving-link estimates: serving[j].col(k) is site j's estimate of its own
// user k, produced by the estimator matching that user's frame role.
struct ChannelEstimateSet {
  EstimatorKind method = EstimatorKind::kMixed;
  std::vector<arma::cx_mat> serving;  // per site: antennas x users_per_cell
};

ChannelEstimateSet estimate_serving(const std::vector<UplinkObservation>& obs,
                                    const FramePlan& plan,
                                    const PilotSet& pilots);

}  // namespace pcsim
