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

#ifndef ROTORPHASE_DISPLACEMENT_HPP
#define ROTORPHASE_DISPLACEMENT_HPP

// Displacement operators D(m, theta) = exp(-i m theta / 2) exp(i m Theta) exp(-i theta J).

#include <cmath>
#include <complex>
#include <string>

#include "rotorphase/grid.hpp"
#include "rotorphase/rotor_basis.hpp"

namespace rotorphase {

/// Phase-space label (m, theta) with theta held in [-pi, pi).
class DisplacementLabel {
 public:
  DisplacementLabel(int m, double theta) : m_(m), theta_(wrap_angle(theta).angle) {}

  int m() const noexcept { return m_; }
  double theta() const noexcept { return theta_; }

  DisplacementLabel inverse() const { return {-m_, -theta_}; }

 private:
  int m_;
  double theta_;
};

/// <m1|D|m2> = exp(-i m theta/2) exp(-i theta m2) delta_{m1, m2+m}.
inline OperatorMatrix displacement_matrix(const RotorSpace& space, const DisplacementLabel& label) {
  if (std::abs(label.m()) > 2 * space.M()) {
    throw DomainError("displacement_matrix: |m| = " + std::to_string(std::abs(label.m())) +
                      " exceeds 2M");
  }
  const Index d = space.dim();
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  const cplx ordering = std::exp(-0.5 * kI * static_cast<double>(label.m()) * label.theta());
  for (Index col = 0; col < d; ++col) {
    const Index row = col + label.m();
    if (row < 0 || row >= d) continue;
    e(row, col) = ordering * std::exp(-kI * label.theta() * space.label(col));
  }
  return {space, e};
}

struct Composition {
  cplx phase;
  DisplacementLabel label;
};

/// D(a) D(b) = phase * D(c) in the boson sector, c carrying the wrapped angle.
inline Composition compose_labels(const DisplacementLabel& a, const DisplacementLabel& b) {
  const int mc = a.m() + b.m();
  const WrappedAngle w = wrap_angle(a.theta() + b.theta());
  const double law = 0.5 * (a.m() * b.theta() - b.m() * a.theta());
  // D(m, theta + 2 pi k) = (-1)^{m k} D(m, theta) for integer labels.
  const double wrap = -kPi * static_cast<double>(mc) * w.turns;
  return {std::exp(kI * (law + wrap)), DisplacementLabel(mc, w.angle)};
}

/// Tr[D^dagger(a) D(b)] with the periodic delta in theta mollified by the
/// Dirichlet kernel over |n| <= M.
inline cplx hs_inner(const DisplacementLabel& a, const DisplacementLabel& b, int M) {
  if (a.m() != b.m()) return {0.0, 0.0};
  const double x = b.theta() - a.theta();
  double dirichlet = 0;
  for (int n = -M; n <= M; ++n) dirichlet += std::cos(n * x);
  return std::exp(-0.5 * kI * static_cast<double>(a.m()) * x) * dirichlet;
}

}  // namespace rotorphase

#endif  // ROTORPHASE_DISPLACEMENT_HPP
