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

#include "pcsim/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace pcsim {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

int hex_ring(int q, int r) {
  return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2;
}

int positive_mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

CellGrid build_hex_grid(int tiers, double cell_radius) {
  if (tiers != 1 && tiers != 2) {
    throw std::invalid_argument("build_hex_grid: tiers must be 1 or 2");
  }
  if (!(cell_radius > 0.0)) {
    throw std::invalid_argument("build_hex_grid: cell_radius must be > 0");
  }

  // Lattice basis for flat-top cells: neighbors sit at angles 30 + 60k
  // degrees, spacing sqrt(3) * radius.
  const double s = kSqrt3 * cell_radius;
  const Vec2 e1{s * kSqrt3 / 2.0, s * 0.5};
  const Vec2 e2{0.0, s};

  struct Axial {
    int q, r;
    Vec2 p;
  };
  std::vector<Axial> cells;
  for (int q = -tiers; q <= tiers; ++q) {
    for (int r = -tiers; r <= tiers; ++r) {
      if (hex_ring(q, r) <= tiers) {
        cells.push_back({q, r, {q * e1.x + r * e2.x, q * e1.y + r * e2.y}});
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Axial& a, const Axial& b) {
    const int ra = hex_ring(a.q, a.r), rb = hex_ring(b.q, b.r);
    if (ra != rb) return ra < rb;
    const double two_pi = 2.0 * std::numbers::pi;
    double aa = std::fmod(std::atan2(a.p.y, a.p.x) + two_pi, two_pi);
    double ab = std::fmod(std::atan2(b.p.y, b.p.x) + two_pi, two_pi);
    return aa < ab;
  });

  CellGrid grid;
  grid.cell_radius = cell_radius;
  grid.tiers = tiers;
  for (const Axial& c : cells) {
    grid.centers.push_back(c.p);
    grid.axial_q.push_back(c.q);
    grid.axial_r.push_back(c.r);
  }
  return grid;
}

bool point_in_hexagon(const Vec2& p, const Vec2& center, double circumradius) {
  // Flat-top hexagon: vertices at angles 0, 60, ..., 300 degrees; the three
  // edge-normal directions are 90, 150 and 210 degrees.
  const double a = kSqrt3 / 2.0 * circumradius;  // inradius
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  return std::abs(dy) <= a && std::abs(kSqrt3 / 2.0 * dx + 0.5 * dy) <= a &&
         std::abs(kSqrt3 / 2.0 * dx - 0.5 * dy) <= a;
}

UserLayout place_users(const CellGrid& grid, int users_per_cell,
                       Scenario scenario, double min_dist_km,
                       double circle_radius_km, RngStream& rng) {
  if (users_per_cell < 1) {
    throw std::invalid_argument("place_users: users_per_cell must be >= 1");
  }

  UserLayout layout;
  layout.scenario = scenario;
  layout.positions.resize(grid.size());

  if (scenario == Scenario::kCircle) {
    if (!(circle_radius_km > 0.0) || circle_radius_km > grid.cell_radius) {
      throw std::invalid_argument(
          "place_users: circle radius must be in (0, cell_radius]");
    }
    for (int l = 0; l < grid.size(); ++l) {
      layout.positions[l].resize(users_per_cell);
      for (int k = 0; k < users_per_cell; ++k) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k) / users_per_cell;
        layout.positions[l][k] = {
            grid.centers[l].x + circle_radius_km * std::cos(angle),
            grid.centers[l].y + circle_radius_km * std::sin(angle)};
      }
    }
    return layout;
  }

  if (!(min_dist_km > 0.0) || min_dist_km >= grid.cell_radius) {
    throw std::invalid_argument(
        "place_users: min_dist must be in (0, cell_radius)");
  }
  const double R = grid.cell_radius;
  const double a = kSqrt3 / 2.0 * R;
  for (int l = 0; l < grid.size(); ++l) {
    layout.positions[l].resize(users_per_cell);
    for (int k = 0; k < users_per_cell; ++k) {
      Vec2 local;
      do {
        local.x = (2.0 * rng.uniform() - 1.0) * R;
        local.y = (2.0 * rng.uniform() - 1.0) * a;
      } while (!point_in_hexagon(local, {0.0, 0.0}, R) ||
               std::hypot(local.x, local.y) < min_dist_km);
      layout.positions[l][k] = {grid.centers[l].x + local.x,
                                grid.centers[l].y + local.y};
    }
  }
  return layout;
}

std::vector<int> reuse_coloring(const CellGrid& grid, int reuse_factor) {
  std::vector<int> color(grid.size(), 0);
  switch (reuse_factor) {
    case 1:
      return color;
    case 3:
      for (int i = 0; i < grid.size(); ++i) {
        color[i] = positive_mod(grid.axial_q[i] + 2 * grid.axial_r[i], 3);
      }
      return color;
    case 4:
      for (int i = 0; i < grid.size(); ++i) {
        color[i] = 2 * positive_mod(grid.axial_q[i], 2) +
                   positive_mod(grid.axial_r[i], 2);
      }
      return color;
    case 7:
      for (int i = 0; i < grid.size(); ++i) {
        color[i] = positive_mod(grid.axial_q[i] + 3 * grid.axial_r[i], 7);
      }
      return color;
    default:
      throw std::invalid_argument(
          "reuse_coloring: reuse factor must be one of 1, 3, 4, 7");
  }
}

}  // namespace pcsim
