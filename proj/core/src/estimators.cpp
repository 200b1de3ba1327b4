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

#include "pcsim/estimators.hpp"

#include <stdexcept>

namespace pcsim {

std::vector<UplinkObservation> receive_uplink(const ChannelRealization& chan,
                                              const arma::cx_mat& frames,
                                              double sigma_sq,
                                              RngStream& rng) {
  const int users = chan.cells * chan.users_per_cell;
  if (static_cast<int>(frames.n_rows) != users) {
    throw std::invalid_argument("receive_uplink: frame/user count mismatch");
  }
  if (sigma_sq < 0.0) {
    throw std::invalid_argument("receive_uplink: sigma_sq must be >= 0");
  }
  std::vector<UplinkObservation> obs(chan.cells);
  for (int j = 0; j < chan.cells; ++j) {
    obs[j].sigma_sq = sigma_sq;
    obs[j].y = chan.per_site[j] * frames;
    if (sigma_sq > 0.0) {
      arma::cx_double* ptr = obs[j].y.memptr();
      const arma::uword n = obs[j].y.n_elem;
      for (arma::uword i = 0; i < n; ++i) {
        ptr[i] += rng.cnormal(sigma_sq);
      }
    }
  }
  return obs;
}

arma::cx_vec estimate_tp(const UplinkObservation& obs, const PilotBook& book,
                         int pilot_index, int tau) {
  if (pilot_index < 0 || pilot_index >= book.tau()) {
    throw std::invalid_argument("estimate_tp: pilot not in the book");
  }
  if (tau != book.tau() || tau > static_cast<int>(obs.y.n_cols)) {
    throw std::invalid_argument("estimate_tp: tau/observation mismatch");
  }
  return obs.y.cols(0, tau - 1) * arma::conj(book.seq.col(pilot_index)) /
         static_cast<double>(tau);
}

arma::cx_vec estimate_sp(const UplinkObservation& obs, const SpPilotMatrix& sp,
                         int column, double rho_p) {
  if (!(rho_p > 0.0)) {
    throw std::invalid_argument("estimate_sp: rho_p must be > 0");
  }
  if (column < 0 || column >= sp.length()) {
    throw std::invalid_argument("estimate_sp: pilot column out of range");
  }
  const int c_u = sp.length();
  if (static_cast<int>(obs.y.n_cols) != c_u) {
    throw std::invalid_argument("estimate_sp: frame length mismatch");
  }
  return obs.y * arma::conj(sp.p.col(column)) / (c_u * rho_p);
}

arma::cx_vec estimate_hybrid_tp(const UplinkObservation& obs,
                                const PilotBook& book, int pilot_index,
                                int tau) {
  return estimate_tp(obs, book, pilot_index, tau);
}

arma::cx_vec estimate_hybrid_sp(const UplinkObservation& obs,
                                const SpPilotMatrix& sp, int column, int c_u,
                                int tau, double rho_p) {
  if (tau >= c_u) {
    throw std::invalid_argument("estimate_hybrid_sp: tau must be < c_u");
  }
  if (!(rho_p > 0.0)) {
    throw std::invalid_argument("estimate_hybrid_sp: rho_p must be > 0");
  }
  if (column < 0 || column >= sp.length() || sp.length() != c_u - tau) {
    throw std::invalid_argument("estimate_hybrid_sp: pilot column mismatch");
  }
  if (static_cast<int>(obs.y.n_cols) != c_u) {
    throw std::invalid_argument("estimate_hybrid_sp: frame length mismatch");
  }
  return obs.y.cols(tau, c_u - 1) * arma::conj(sp.p.col(column)) /
         (static_cast<double>(c_u - tau) * rho_p);
}

ChannelEstimateSet estimate_serving(const std::vector<UplinkObservation>& obs,
                                    const FramePlan& plan,
                                    const PilotSet& pilots) {
  if (static_cast<int>(obs.size()) != plan.cells) {
    throw std::invalid_argument("estimate_serving: observation count");
  }
  ChannelEstimateSet set;
  bool any_tp = false, any_sp = false;
  set.serving.resize(plan.cells);
  for (int j = 0; j < plan.cells; ++j) {
    const int antennas = static_cast<int>(obs[j].y.n_rows);
    set.serving[j].set_size(antennas, plan.users_per_cell);
    for (int k = 0; k < plan.users_per_cell; ++k) {
      const UserFrameRole& role = plan.role(j, k);
      switch (role.scheme) {
        case PilotScheme::kPureTp:
          any_tp = true;
          set.serving[j].col(k) =
              estimate_tp(obs[j], pilots.book, role.pilot_index, plan.tau);
          break;
        case PilotScheme::kHybridTp:
          any_tp = true;
          set.serving[j].col(k) = estimate_hybrid_tp(
              obs[j], pilots.book, role.pilot_index, plan.tau);
          break;
        case PilotScheme::kPureSp:
          any_sp = true;
          set.serving[j].col(k) = estimate_sp(
              obs[j], pilots.sp, role.pilot_index, plan.split.rho_p());
          break;
        case PilotScheme::kHybridSp:
          any_sp = true;
          set.serving[j].col(k) =
              estimate_hybrid_sp(obs[j], pilots.sp, role.pilot_index,
                                 plan.c_u, plan.tau, plan.split.rho_p());
          break;
      }
    }
  }
  if (any_tp && any_sp) {
    set.method = EstimatorKind::kMixed;
  } else if (any_sp) {
    set.method = plan.roles[0].scheme == PilotScheme::kPureSp
                     ? EstimatorKind::kSp
                     : EstimatorKind::kHybridSp;
  } else {
    set.method = plan.roles[0].scheme == PilotScheme::kPureTp
                     ? EstimatorKind::kTp
                     : EstimatorKind::kHybridTp;
  }
  return set;
}

}  // namespace pcsim
