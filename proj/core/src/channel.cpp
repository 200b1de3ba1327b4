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

#include "pcsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pcsim {

double raw_path_loss(double distance_km, double exponent) {
  if (!(distance_km > 0.0)) {
    throw std::invalid_argument("raw_path_loss: distance must be > 0");
  }
  return std::pow(distance_km, -exponent);
}

GainTensor raw_gain_tensor(const CellGrid& grid, const UserLayout& layout,
                           double exponent) {
  const int L = grid.size();
  if (layout.cells() != L) {
    throw std::invalid_argument("raw_gain_tensor: layout/grid cell mismatch");
  }
  const int K = layout.users_per_cell();
  GainTensor raw(L, K);
  for (int j = 0; j < L; ++j) {
    for (int l = 0; l < L; ++l) {
      for (int k = 0; k < K; ++k) {
        raw(j, l, k) = raw_path_loss(
            distance(layout.positions[l][k], grid.centers[j]), exponent);
      }
    }
  }
  return raw;
}

GainTensor apply_power_control(const GainTensor& raw, double omega) {
  const int L = raw.cells();
  const int K = raw.users_per_cell();
  GainTensor out(L, K);
  out.omega = omega;
  for (int l = 0; l < L; ++l) {
    for (int k = 0; k < K; ++k) {
      const double serving = raw(l, l, k);
      if (!(serving > 0.0)) {
        throw std::invalid_argument(
            "apply_power_control: serving gain must be > 0");
      }
      for (int j = 0; j < L; ++j) {
        out(j, l, k) = omega * raw(j, l, k) / serving;
      }
    }
  }
  return out;
}

void scale_user_gain(GainTensor& beta, int cell, int user, double factor) {
  for (int j = 0; j < beta.cells(); ++j) {
    beta(j, cell, user) *= factor;
  }
}

ChannelRealization draw_channels(const GainTensor& beta, int antennas,
                                 RngStream& rng) {
  if (antennas < 1) {
    throw std::invalid_argument("draw_channels: antennas must be >= 1");
  }
  const int L = beta.cells();
  const int K = beta.users_per_cell();
  ChannelRealization chan;
  chan.antennas = antennas;
  chan.cells = L;
  chan.users_per_cell = K;
  chan.per_site.resize(L);
  for (int j = 0; j < L; ++j) {
    arma::cx_mat& h = chan.per_site[j];
    h.set_size(antennas, L * K);
    for (int l = 0; l < L; ++l) {
      for (int k = 0; k < K; ++k) {
        const double var = beta(j, l, k);
        arma::cx_double* column = h.colptr(chan.col(l, k));
        for (int i = 0; i < antennas; ++i) {
          column[i] = rng.cnormal(var);
        }
      }
    }
  }
  return chan;
}

}  // namespace pcsim
