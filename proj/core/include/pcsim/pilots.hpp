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

namespace pcsim {

// Unit-modulus orthogonal matrix with G^H G = n I: Sylvester-Hadamard when n
// is a power of two (integer exact), DFT otherwise.
arma::cx_mat orthogonal_pilot_matrix(int n);

// Training pilot book: column b is the length-tau sequence phi_b, with
// phi_n^H phi_p = tau * delta(n, p).
struct PilotBook {
  arma::cx_mat seq;

  int tau() const { return static_cast<int>(seq.n_rows); }
  bool empty() const { return seq.n_elem == 0; }
};

PilotBook make_pilot_book(int tau);

// Pilot matrix for superimposed transmission; column u is the pilot of user
// u over the superimposed window, with P^H P = length * I.
struct SpPilotMatrix {
  arma::cx_mat p;

  int length() const { return static_cast<int>(p.n_rows); }
  bool empty() const { return p.n_elem == 0; }
};

SpPilotMatrix make_sp_pilot_matrix(int length);

// Fractions of uplink power assigned to data and pilots; they sum to one.
struct PowerSplit {
  double rho_d_sq = 0.5;
  double rho_p_sq = 0.5;

  double rho_d() const { return std::sqrt(rho_d_sq); }
  double rho_p() const { return std::sqrt(rho_p_sq); }
};

// Split maximizing the uplink sum-rate lower bound:
// rho_d^2 = 1 / (1 + sqrt((M + L K) / c_u)).
PowerSplit optimal_power_split(int antennas, int cells, int users_per_cell,
                               int c_u);
PowerSplit fixed_power_split(double rho_d_sq);

enum class PilotScheme { kPureTp, kPureSp, kHybridTp, kHybridSp };

struct UserFrameRole {
  PilotScheme scheme = PilotScheme::kPureTp;
  int pilot_index = 0;      // TP: pilot book column; SP: pilot matrix column
  double data_power = 1.0;  // uplink data power of a TP user in hybrid mode
};

// Per-user transmit schedule over one coherence interval: c_u uplink symbols
// followed by c_d downlink symbols.
//
//   pure/hybrid TP:  pilot phi for tau symbols, then sqrt(data_power) * data
//   pure SP:         rho_d * data + rho_p * pilot over all c_u symbols
//   hybrid SP:       silent for tau symbols, then rho_d * data + rho_p * pilot
struct FramePlan {
  int cells = 0;
  int users_per_cell = 0;
  int c_u = 0;
  int c_d = 0;
  int tau = 0;
  int reuse_factor = 1;
  PowerSplit split;
  std::vector<UserFrameRole> roles;  // [l * users_per_cell + k]
  std::vector<int> cell_color;      // pilot reuse group per cell

  int user_count() const { return cells * users_per_cell; }
  int user_index(int l, int k) const { return l * users_per_cell + k; }
  const UserFrameRole& role(int l, int k) const {
    return roles[user_index(l, k)];
  }
  bool same_reuse_group(int a, int b) const {
    return cell_color[a] == cell_color[b];
  }

  // First uplink symbol carrying data for this user's role.
  int data_start(int l, int k) const {
    return role(l, k).scheme == PilotScheme::kPureSp ? 0 : tau;
  }
  // Length in symbols of the superimposed-pilot window.
  int sp_window() const;
  bool has_tp_users() const;
  bool has_sp_users() const;
};

// Builds the per-user roles for one scheme assignment. TP users in the same
// reuse group and with the same in-cell index share a pilot sequence; SP
// users get the distinct pilot-matrix column l * users_per_cell + k.
FramePlan make_frame_plan(int cells, int users_per_cell, int c_u, int c_d,
                          int reuse_factor, std::vector<int> cell_color,
                          PowerSplit split, double tp_data_power,
                          const std::vector<PilotScheme>& schemes);

void validate_plan(const FramePlan& plan);

struct PilotSet {
  PilotBook book;
  SpPilotMatrix sp;
};

// Fails if some SP user's column index does not fit the pilot matrix (more
// superimposed users than window symbols).
PilotSet make_pilots(const FramePlan& plan);

// Assembles every user's c_u-length transmit vector into a
// (cells * users_per_cell) x c_u matrix. data holds unit-power symbols; only
// the entries inside each user's data window are used.
arma::cx_mat assemble_frames(const FramePlan& plan, const PilotSet& pilots,
                             const arma::cx_mat& data);

}  // namespace pcsim
