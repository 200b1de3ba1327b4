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

#include "pcsim/pilots.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

namespace pcsim {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

arma::cx_mat hadamard(int n) {
  arma::cx_mat h(1, 1, arma::fill::ones);
  while (static_cast<int>(h.n_rows) < n) {
    const arma::cx_mat prev = h;
    const int m = static_cast<int>(prev.n_rows);
    h.set_size(2 * m, 2 * m);
    h.submat(0, 0, m - 1, m - 1) = prev;
    h.submat(0, m, m - 1, 2 * m - 1) = prev;
    h.submat(m, 0, 2 * m - 1, m - 1) = prev;
    h.submat(m, m, 2 * m - 1, 2 * m - 1) = -prev;
  }
  return h;
}

arma::cx_mat dft(int n) {
  arma::cx_mat f(n, n);
  for (int t = 0; t < n; ++t) {
    for (int c = 0; c < n; ++c) {
      // Reduce the exponent mod n before evaluating to keep phases accurate.
      const long long e = (static_cast<long long>(t) * c) % n;
      f(t, c) = std::polar(
          1.0, -2.0 * std::numbers::pi * static_cast<double>(e) / n);
    }
  }
  return f;
}

}  // namespace

arma::cx_mat orthogonal_pilot_matrix(int n) {
  if (n < 1) {
    throw std::invalid_argument("orthogonal_pilot_matrix: n must be >= 1");
  }
  return is_power_of_two(n) ? hadamard(n) : dft(n);
}

PilotBook make_pilot_book(int tau) {
  return PilotBook{orthogonal_pilot_matrix(tau)};
}

SpPilotMatrix make_sp_pilot_matrix(int length) {
  return SpPilotMatrix{orthogonal_pilot_matrix(length)};
}

PowerSplit optimal_power_split(int antennas, int cells, int users_per_cell,
                               int c_u) {
  if (antennas < 1 || cells < 1 || users_per_cell < 1 || c_u < 1) {
    throw std::invalid_argument("optimal_power_split: counts must be >= 1");
  }
  const double arg = static_cast<double>(antennas + cells * users_per_cell) /
                     static_cast<double>(c_u);
  const double rho_d_sq = 1.0 / (1.0 + std::sqrt(arg));
  return PowerSplit{rho_d_sq, 1.0 - rho_d_sq};
}

PowerSplit fixed_power_split(double rho_d_sq) {
  if (!(rho_d_sq > 0.0) || !(rho_d_sq < 1.0)) {
    throw std::invalid_argument(
        "fixed_power_split: rho_d_sq must be in (0, 1)");
  }
  return PowerSplit{rho_d_sq, 1.0 - rho_d_sq};
}

int FramePlan::sp_window() const {
  for (const UserFrameRole& r : roles) {
    if (r.scheme == PilotScheme::kPureSp) return c_u;
  }
  return c_u - tau;
}

bool FramePlan::has_tp_users() const {
  for (const UserFrameRole& r : roles) {
    if (r.scheme == PilotScheme::kPureTp ||
        r.scheme == PilotScheme::kHybridTp) {
      return true;
    }
  }
  return false;
}

bool FramePlan::has_sp_users() const {
  for (const UserFrameRole& r : roles) {
    if (r.scheme == PilotScheme::kPureSp ||
        r.scheme == PilotScheme::kHybridSp) {
      return true;
    }
  }
  return false;
}

FramePlan make_frame_plan(int cells, int users_per_cell, int c_u, int c_d,
                          int reuse_factor, std::vector<int> cell_color,
                          PowerSplit split, double tp_data_power,
                          const std::vector<PilotScheme>& schemes) {
  FramePlan plan;
  plan.cells = cells;
  plan.users_per_cell = users_per_cell;
  plan.c_u = c_u;
  plan.c_d = c_d;
  plan.reuse_factor = reuse_factor;
  plan.tau = reuse_factor * users_per_cell;
  plan.split = split;
  plan.cell_color = std::move(cell_color);
  if (static_cast<int>(schemes.size()) != cells * users_per_cell) {
    throw std::invalid_argument("make_frame_plan: schemes size mismatch");
  }
  plan.roles.resize(schemes.size());
  for (int l = 0; l < cells; ++l) {
    for (int k = 0; k < users_per_cell; ++k) {
      UserFrameRole& role = plan.roles[plan.user_index(l, k)];
      role.scheme = schemes[plan.user_index(l, k)];
      switch (role.scheme) {
        case PilotScheme::kPureTp:
        case PilotScheme::kHybridTp:
          role.pilot_index = plan.cell_color[l] * users_per_cell + k;
          role.data_power = tp_data_power;
          break;
        case PilotScheme::kPureSp:
        case PilotScheme::kHybridSp:
          role.pilot_index = plan.user_index(l, k);
          role.data_power = 1.0;
          break;
      }
    }
  }
  validate_plan(plan);
  return plan;
}

void validate_plan(const FramePlan& plan) {
  if (plan.cells < 1 || plan.users_per_cell < 1) {
    throw std::invalid_argument("frame plan: counts must be >= 1");
  }
  if (plan.c_u < 1 || plan.c_d < 0) {
    throw std::invalid_argument("frame plan: bad frame lengths");
  }
  if (static_cast<int>(plan.cell_color.size()) != plan.cells) {
    throw std::invalid_argument("frame plan: cell_color size mismatch");
  }
  if (static_cast<int>(plan.roles.size()) != plan.user_count()) {
    throw std::invalid_argument("frame plan: roles size mismatch");
  }
  bool pure_sp = false, other = false;
  for (const UserFrameRole& r : plan.roles) {
    (r.scheme == PilotScheme::kPureSp ? pure_sp : other) = true;
  }
  if (pure_sp && other) {
    throw std::invalid_argument(
        "frame plan: pure SP roles cannot mix with framed schemes");
  }
  if (plan.has_tp_users()) {
    if (plan.tau != plan.reuse_factor * plan.users_per_cell) {
      throw std::invalid_argument("frame plan: tau must equal reuse * K");
    }
    if (plan.tau > plan.c_u) {
      throw std::invalid_argument("frame plan: tau must be <= c_u");
    }
  }
  if (plan.has_sp_users() && !pure_sp && plan.tau >= plan.c_u) {
    throw std::invalid_argument(
        "frame plan: hybrid SP needs tau < c_u");
  }
  // A TP pilot collision inside one cell would make two users inseparable.
  for (int l = 0; l < plan.cells; ++l) {
    std::set<int> used;
    for (int k = 0; k < plan.users_per_cell; ++k) {
      const UserFrameRole& r = plan.role(l, k);
      if (r.scheme == PilotScheme::kPureTp ||
          r.scheme == PilotScheme::kHybridTp) {
        if (r.pilot_index < 0 || r.pilot_index >= plan.tau) {
          throw std::invalid_argument("frame plan: pilot index out of book");
        }
        if (!used.insert(r.pilot_index).second) {
          throw std::invalid_argument(
              "frame plan: pilot index collision within a cell");
        }
      }
    }
  }
}

PilotSet make_pilots(const FramePlan& plan) {
  validate_plan(plan);
  PilotSet set;
  if (plan.has_tp_users()) {
    set.book = make_pilot_book(plan.tau);
  }
  if (plan.has_sp_users()) {
    const int window = plan.sp_window();
    for (const UserFrameRole& r : plan.roles) {
      if ((r.scheme == PilotScheme::kPureSp ||
           r.scheme == PilotScheme::kHybridSp) &&
          r.pilot_index >= window) {
        throw std::invalid_argument(
            "make_pilots: more SP users than pilot columns in the window");
      }
    }
    set.sp = make_sp_pilot_matrix(window);
  }
  return set;
}

arma::cx_mat assemble_frames(const FramePlan& plan, const PilotSet& pilots,
                             const arma::cx_mat& data) {
  validate_plan(plan);
  const int n = plan.user_count();
  if (static_cast<int>(data.n_rows) != n ||
      static_cast<int>(data.n_cols) != plan.c_u) {
    throw std::invalid_argument("assemble_frames: data must be users x c_u");
  }
  const double rho_d = plan.split.rho_d();
  const double rho_p = plan.split.rho_p();

  arma::cx_mat frames(n, plan.c_u, arma::fill::zeros);
  for (int l = 0; l < plan.cells; ++l) {
    for (int k = 0; k < plan.users_per_cell; ++k) {
      const int u = plan.user_index(l, k);
      const UserFrameRole& role = plan.roles[u];
      switch (role.scheme) {
        case PilotScheme::kPureTp:
        case PilotScheme::kHybridTp: {
          frames.row(u).cols(0, plan.tau - 1) =
              pilots.book.seq.col(role.pilot_index).st();
          if (plan.tau < plan.c_u) {
            frames.row(u).cols(plan.tau, plan.c_u - 1) =
                std::sqrt(role.data_power) *
                data.row(u).cols(plan.tau, plan.c_u - 1);
          }
          break;
        }
        case PilotScheme::kPureSp: {
          frames.row(u) = rho_d * data.row(u) +
                          rho_p * pilots.sp.p.col(role.pilot_index).st();
          break;
        }
        case PilotScheme::kHybridSp: {
          frames.row(u).cols(plan.tau, plan.c_u - 1) =
              rho_d * data.row(u).cols(plan.tau, plan.c_u - 1) +
              rho_p * pilots.sp.p.col(role.pilot_index).st();
          break;
        }
      }
    }
  }
  return frames;
}

}  // namespace pcsim
