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
#include <utility>
#include <vector>

#include "pcsim/channel.hpp"
#include "pcsim/pilots.hpp"

namespace pcsim {

// Relative weighting of uplink vs downlink interference in the partition
// objective; the two weights sum to one.
struct CostWeights {
  double xi_ul = 0.5;
  double xi_dl = 0.5;
};

CostWeights make_cost_weights(double xi_ul);

struct UserRef {
  int cell = 0;
  int user = 0;

  friend bool operator==(const UserRef&, const UserRef&) = default;
  friend auto operator<=>(const UserRef&, const UserRef&) = default;
};

// Disjoint cover of the users by training-pilot and superimposed-pilot sets,
// plus the accepted-step cost trace of the run that produced it.
struct PartitionResult {
  std::vector<UserRef> u_tp;
  std::vector<UserRef> u_sp;
  std::vector<std::uint8_t> sp_mask;  // [cell * users_per_cell + user]
  std::vector<std::pair<int, double>> cost_trace;  // (step, total cost)
  double final_cost = 0.0;

  bool is_sp(int cell, int user, int users_per_cell) const {
    return sp_mask[static_cast<std::size_t>(cell) * users_per_cell + user] !=
           0;
  }
};

// Interference cost model over a gain tensor. A user assigned to the
// training set costs the weighted co-pilot leakage it injects; one assigned
// to the superimposed set costs its share of the data-on-pilot leakage over
// the c_u - tau window. total_cost sums the per-user cost of the assignment.
//
// The greedy run starts from everything in the training set and repeatedly
// moves the worst training user to the superimposed set while that does not
// increase the total cost. The universe restricts which users may move;
// users outside it are pinned to the training set but still enter the cost
// sums.
class PartitionProblem {
 public:
  PartitionProblem(const GainTensor& beta, std::vector<int> cell_color,
                   int c_u, int tau, PowerSplit split, CostWeights weights);

  void set_universe(std::vector<UserRef> universe);
  const std::vector<UserRef>& universe() const { return universe_; }

  double cost_tp(int j, int m, const std::vector<std::uint8_t>& sp_mask) const;
  double cost_sp(int j, int m, const std::vector<std::uint8_t>& sp_mask) const;
  double total_cost(const std::vector<std::uint8_t>& sp_mask) const;

  PartitionResult greedy() const;

  // Exhaustive minimum over all assignments of the universe; ties resolved
  // toward the lexicographically smallest superimposed set. Guarded to at
  // most 20 movable users.
  PartitionResult brute_force() const;

 private:
  PartitionResult finish(std::vector<std::uint8_t> sp_mask,
                         std::vector<std::pair<int, double>> trace) const;

  const GainTensor* beta_;
  std::vector<int> color_;
  int c_u_;
  int tau_;
  PowerSplit split_;
  CostWeights weights_;
  std::vector<UserRef> universe_;
};

}  // namespace pcsim
