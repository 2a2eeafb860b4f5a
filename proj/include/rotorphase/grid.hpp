// Copyright 2026 The rotorphase Authors
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

#ifndef ROTORPHASE_GRID_HPP
#define ROTORPHASE_GRID_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "rotorphase/errors.hpp"

namespace rotorphase {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2 * std::numbers::pi;

/// An angle reduced into [-pi, pi) together with the number of whole turns
/// removed: original = angle + 2*pi*turns.
struct WrappedAngle {
  double angle;
  int turns;
};

inline WrappedAngle wrap_angle(double theta) {
  const double turns = std::floor((theta + kPi) / kTwoPi);
  double angle = theta - kTwoPi * turns;
  int t = static_cast<int>(turns);
  // Guard the upper edge against rounding.
  if (angle >= kPi) {
    angle -= kTwoPi;
    ++t;
  }
  if (angle < -kPi) {
    angle += kTwoPi;
    --t;
  }
  return {angle, t};
}

/// theta_j = -pi + 2 pi j / n, j = 0..n-1.
inline double theta_node(int j, int n) { return -kPi + kTwoPi * j / n; }

/// alpha_j = -pi + 2 pi (j + 1/2) / n. Never hits +-pi; symmetric under
/// alpha -> -alpha (j -> n-1-j).
inline double alpha_node(int j, int n) { return -kPi + kTwoPi * (j + 0.5) / n; }

inline std::vector<double> uniform_theta_grid(int n) {
  if (n <= 0) throw DomainError("theta grid size must be positive");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) grid[static_cast<std::size_t>(j)] = theta_node(j, n);
  return grid;
}

inline std::vector<double> half_offset_grid(int n) {
  if (n <= 0) throw DomainError("alpha grid size must be positive");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) grid[static_cast<std::size_t>(j)] = alpha_node(j, n);
  return grid;
}

}  // namespace rotorphase

#endif  // ROTORPHASE_GRID_HPP
