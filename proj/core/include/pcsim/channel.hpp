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

#include "pcsim/geometry.hpp"
#include "pcsim/rng.hpp"

namespace pcsim {

// Distance-based path gain (d / 1 km)^(-exponent). The absolute reference
// scale cancels under power control, it is fixed only for reproducibility.
double raw_path_loss(double distance_km, double exponent);

// Large-scale gains indexed (site j, cell l, user k): the gain of user
// (l, k)'s channel seen at site j. After apply_power_control these are the
// effective gains with the serving entry equal to omega.
class GainTensor {
 public:
  GainTensor() : GainTensor(0, 0) {}
  GainTensor(int cells, int users_per_cell, double initial = 0.0)
      : cells_(cells),
        users_per_cell_(users_per_cell),
        v_(static_cast<std::size_t>(cells) * cells * users_per_cell,
           initial) {}

  int cells() const { return cells_; }
  int users_per_cell() const { return users_per_cell_; }
  int user_count() const { return cells_ * users_per_cell_; }

  double& operator()(int j, int l, int k) {
    return v_[(static_cast<std::size_t>(j) * cells_ + l) * users_per_cell_ +
              k];
  }
  double operator()(int j, int l, int k) const {
    return v_[(static_cast<std::size_t>(j) * cells_ + l) * users_per_cell_ +
              k];
  }

  const std::vector<double>& raw() const { return v_; }

  double omega = 1.0;

 private:
  int cells_;
  int users_per_cell_;
  std::vector<double> v_;
};

GainTensor raw_gain_tensor(const CellGrid& grid, const UserLayout& layout,
                           double exponent);

// Statistics-aware power control: every user transmits at omega over its
// serving gain, so the effective serving entry is exactly omega and cross
// entries become omega * raw(j,l,k) / raw(l,l,k).
GainTensor apply_power_control(const GainTensor& raw, double omega);

// Rescales one user's gains toward every site (its own transmit power knob).
void scale_user_gain(GainTensor& beta, int cell, int user, double factor);

// Small-scale Rayleigh block fading realization. per_site[j] is an
// M x (cells * users_per_cell) matrix whose column l*K+k is the channel of
// user (l, k) at site j, drawn i.i.d. CN(0, beta(j,l,k) I).
struct ChannelRealization {
  int antennas = 0;
  int cells = 0;
  int users_per_cell = 0;
  std::vector<arma::cx_mat> per_site;

  int col(int l, int k) const { return l * users_per_cell + k; }
  arma::cx_vec vec(int j, int l, int k) const {
    return per_site[j].col(col(l, k));
  }
};

ChannelRealization draw_channels(const GainTensor& beta, int antennas,
                                 RngStream& rng);

}  // namespace pcsim
