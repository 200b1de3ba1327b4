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

#include "pcsim/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace pcsim {

CostWeights make_cost_weights(double xi_ul) {
  if (!(xi_ul >= 0.0) || !(xi_ul <= 1.0)) {
    throw std::invalid_argument("make_cost_weights: xi_ul must be in [0, 1]");
  }
  return CostWeights{xi_ul, 1.0 - xi_ul};
}

PartitionProblem::PartitionProblem(const GainTensor& beta,
                                   std::vector<int> cell_color, int c_u,
                                   int tau, PowerSplit split,
                                   CostWeights weights)
    : beta_(&beta),
      color_(std::move(cell_color)),
      c_u_(c_u),
      tau_(tau),
      split_(split),
      weights_(weights) {
  if (static_cast<int>(color_.size()) != beta.cells()) {
    throw std::invalid_argument("PartitionProblem: cell_color size mismatch");
  }
  if (tau_ >= c_u_) {
    throw std::invalid_argument("PartitionProblem: tau must be < c_u");
  }
  if (!(split_.rho_p_sq > 0.0)) {
    throw std::invalid_argument("PartitionProblem: rho_p_sq must be > 0");
  }
  const int L = beta.cells();
  const int K = beta.users_per_cell();
  universe_.reserve(static_cast<std::size_t>(L) * K);
  for (int l = 0; l < L; ++l) {
    for (int k = 0; k < K; ++k) {
      universe_.push_back({l, k});
    }
  }
}

void PartitionProblem::set_universe(std::vector<UserRef> universe) {
  for (const UserRef& u : universe) {
    if (u.cell < 0 || u.cell >= beta_->cells() || u.user < 0 ||
        u.user >= beta_->users_per_cell()) {
      throw std::invalid_argument("set_universe: user out of range");
    }
  }
  universe_ = std::move(universe);
}

double PartitionProblem::cost_tp(
    int j, int m, const std::vector<std::uint8_t>& sp_mask) const {
  const int K = beta_->users_per_cell();
  // Co-pilot leakage: same reuse group, same in-cell pilot index, still in
  // the training set. The uplink and downlink sums coincide for this model.
  double interference = 0.0;
  for (int l = 0; l < beta_->cells(); ++l) {
    if (l == j || color_[l] != color_[j]) continue;
    if (sp_mask[static_cast<std::size_t>(l) * K + m] != 0) continue;
    const double b = (*beta_)(l, j, m);
    interference += b * b;
  }
  return weights_.xi_ul * interference + weights_.xi_dl * interference;
}

double PartitionProblem::cost_sp(
    int j, int m, const std::vector<std::uint8_t>& sp_mask) const {
  const int L = beta_->cells();
  const int K = beta_->users_per_cell();
  double sum = 0.0;
  for (int l = 0; l < L; ++l) {
    const double b = (*beta_)(l, j, m);
    int count = 0;
    for (int k = 0; k < K; ++k) {
      if (sp_mask[static_cast<std::size_t>(l) * K + k] != 0) ++count;
    }
    sum += count * b * b;
  }
  const double i_ul =
      sum / (static_cast<double>(c_u_ - tau_) * split_.rho_p_sq);
  return weights_.xi_ul * i_ul + weights_.xi_dl * split_.rho_d_sq * i_ul;
}

double PartitionProblem::total_cost(
    const std::vector<std::uint8_t>& sp_mask) const {
  const int L = beta_->cells();
  const int K = beta_->users_per_cell();
  double total = 0.0;
  for (int j = 0; j < L; ++j) {
    for (int m = 0; m < K; ++m) {
      total += sp_mask[static_cast<std::size_t>(j) * K + m] != 0
                   ? cost_sp(j, m, sp_mask)
                   : cost_tp(j, m, sp_mask);
    }
  }
  return total;
}

PartitionResult PartitionProblem::finish(
    std::vector<std::uint8_t> sp_mask,
    std::vector<std::pair<int, double>> trace) const {
  PartitionResult result;
  result.sp_mask = std::move(sp_mask);
  result.cost_trace = std::move(trace);
  const int K = beta_->users_per_cell();
  for (int l = 0; l < beta_->cells(); ++l) {
    for (int k = 0; k < K; ++k) {
      (result.sp_mask[static_cast<std::size_t>(l) * K + k] != 0
           ? result.u_sp
           : result.u_tp)
          .push_back({l, k});
    }
  }
  result.final_cost = result.cost_trace.back().second;
  return result;
}

PartitionResult PartitionProblem::greedy() const {
  const int K = beta_->users_per_cell();
  std::vector<std::uint8_t> mask(
      static_cast<std::size_t>(beta_->cells()) * K, 0);
  double current = total_cost(mask);
  std::vector<std::pair<int, double>> trace{{0, current}};

  for (int step = 1; step <= static_cast<int>(universe_.size()); ++step) {
    // Worst remaining training user; ties go to the lowest (cell, user).
    const UserRef* worst = nullptr;
    double worst_cost = 0.0;
    for (const UserRef& u : universe_) {
      if (mask[static_cast<std::size_t>(u.cell) * K + u.user] != 0) continue;
      const double c = cost_tp(u.cell, u.user, mask);
      if (worst == nullptr || c > worst_cost) {
        worst = &u;
        worst_cost = c;
      }
    }
    if (worst == nullptr) break;  // training set exhausted

    mask[static_cast<std::size_t>(worst->cell) * K + worst->user] = 1;
    const double moved = total_cost(mask);
    if (moved <= current) {
      current = moved;
      trace.emplace_back(step, moved);
    } else {
      mask[static_cast<std::size_t>(worst->cell) * K + worst->user] = 0;
      break;
    }
  }
  return finish(std::move(mask), std::move(trace));
}

PartitionResult PartitionProblem::brute_force() const {
  const int n = static_cast<int>(universe_.size());
  if (n > 20) {
    throw std::invalid_argument(
        "brute_force: universe too large (limit 20 users)");
  }
  const int K = beta_->users_per_cell();
  std::vector<std::uint8_t> mask(
      static_cast<std::size_t>(beta_->cells()) * K, 0);

  auto sp_list = [&](const std::vector<std::uint8_t>& m) {
    std::vector<UserRef> list;
    for (const UserRef& u : universe_) {
      if (m[static_cast<std::size_t>(u.cell) * K + u.user] != 0) {
        list.push_back(u);
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  };

  std::vector<std::uint8_t> best_mask = mask;
  double best = total_cost(mask);
  std::vector<UserRef> best_list;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    for (int i = 0; i < n; ++i) {
      const UserRef& u = universe_[i];
      mask[static_cast<std::size_t>(u.cell) * K + u.user] =
          (bits >> i) & 1u ? 1 : 0;
    }
    const double cost = total_cost(mask);
    if (cost < best) {
      best = cost;
      best_mask = mask;
      best_list.clear();
    } else if (cost == best) {
      if (best_list.empty()) best_list = sp_list(best_mask);
      std::vector<UserRef> cand = sp_list(mask);
      if (cand < best_list) {
        best_mask = mask;
        best_list = std::move(cand);
      }
    }
  }
  return finish(std::move(best_mask), {{0, best}});
}

}  // namespace pcsim
