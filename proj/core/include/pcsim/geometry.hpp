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

#include <cmath>
#include <vector>

#include "pcsim/rng.hpp"

namespace pcsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Hexagonal cell layout with flat-top cells. The center cell comes first,
// followed by the surrounding rings in counterclockwise order. Adjacent
// cell centers are sqrt(3) * cell_radius apart.
struct CellGrid {
  std::vector<Vec2> centers;  // km
  std::vector<int> axial_q;   // axial lattice coordinate per cell
  std::vector<int> axial_r;
  double cell_radius = 1.0;  // km, center to vertex
  int tiers = 1;

  int size() const { return static_cast<int>(centers.size()); }
};

// tiers = 1 gives 7 cells, tiers = 2 gives 19.
CellGrid build_hex_grid(int tiers, double cell_radius);

// Point-in-cell test for a flat-top hexagon of the given circumradius.
bool point_in_hexagon(const Vec2& p, const Vec2& center, double circumradius);

enum class Scenario { kUniform, kCircle };

struct UserLayout {
  std::vector<std::vector<Vec2>> positions;  // [cell][user], km
  Scenario scenario = Scenario::kUniform;

  int cells() const { return static_cast<int>(positions.size()); }
  int users_per_cell() const {
    return positions.empty() ? 0 : static_cast<int>(positions[0].size());
  }
};

// Uniform: rejection sampling inside each hexagon, at least min_dist_km from
// the serving site. Circle: users equally spaced on a circle around the
// serving site; deterministic, the rng stream is not consumed.
UserLayout place_users(const CellGrid& grid, int users_per_cell,
                       Scenario scenario, double min_dist_km,
                       double circle_radius_km, RngStream& rng);

// Pilot-reuse coloring of the grid: cells sharing a color share the pilot
// book. Supported reuse factors: 1, 3, 4, 7. Adjacent cells always get
// distinct colors for reuse > 1.
std::vector<int> reuse_coloring(const CellGrid& grid, int reuse_factor);

}  // namespace pcsim
