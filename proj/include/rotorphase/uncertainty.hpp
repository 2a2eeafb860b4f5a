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

#ifndef ROTORPHASE_UNCERTAINTY_HPP
#define ROTORPHASE_UNCERTAINTY_HPP

// Angle / angular-momentum uncertainty of coherent states:
//   <dJ^2> <d sin^2> >= <cos>^2 / 4,   dU = (lhs - rhs) / lhs.

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "rotorphase/coherent.hpp"
#include "rotorphase/parallel.hpp"

namespace rotorphase {

struct MomentSet {
  double mean_J;
  double mean_J2;
  double mean_sin;
  double mean_sin2;
  double mean_cos;
};

namespace detail {

struct MomentOps {
  OperatorMatrix J, J2, sin, sin2, cos;

  explicit MomentOps(const RotorSpace& space)
      : J(angular_momentum_op(space)),
        J2(J * J),
        sin(trig_theta_ops(space).sin),
        sin2(sin * sin),
        cos(trig_theta_ops(space).cos) {}

  MomentSet on(const PureState& state) const {
    return {J.expectation(state).real(), J2.expectation(state).real(), sin.expectation(state).real(),
            sin2.expectation(state).real(), cos.expectation(state).real()};
  }
};

}  // namespace detail

/// Truncated-basis expectations of J, J^2, sin, sin^2, cos.
inline MomentSet moments(const PureState& state) {
  if (!state.space().is_boson()) throw DomainError("moments: boson sector only");
  return detail::MomentOps(state.space()).on(state);
}

struct UncertaintySides {
  double lhs;  // <dJ^2> <d sin^2>
  double rhs;  // <cos>^2 / 4
};

inline UncertaintySides uncertainty_sides(const MomentSet& mo) {
  const double var_j = mo.mean_J2 - mo.mean_J * mo.mean_J;
  const double var_sin = mo.mean_sin2 - mo.mean_sin * mo.mean_sin;
  return {var_j * var_sin, 0.25 * mo.mean_cos * mo.mean_cos};
}

/// Basis size for coherent-state moments at width a, centred on m0.
inline int uncertainty_truncation(WidthParam a, int m0 = 0) {
  return default_truncation(a, 1e-12) + std::abs(m0) + 2;
}

inline UncertaintySides uncertainty_U(const CoherentLabel& label) {
  const RotorSpace space(uncertainty_truncation(label.a, label.m0));
  return uncertainty_sides(moments(coherent_state(space, label, 1e-6)));
}

inline double delta_from_sides(const UncertaintySides& u) {
  if (!(u.lhs > 0)) throw DegenerateError("delta_U: the product of variances vanishes");
  return (u.lhs - u.rhs) / u.lhs;
}

inline double delta_U(WidthParam a, double theta) {
  return delta_from_sides(uncertainty_U(CoherentLabel(0, theta, a)));
}

struct UncertaintyScan {
  WidthParam a;
  int M;
  std::vector<double> theta;
  std::vector<double> delta_U;
};

/// dU on theta_k = -pi + 2 pi k/n, k = 0..n-1.
inline UncertaintyScan scan_delta_U(WidthParam a, int n) {
  if (n < 1) throw DomainError("scan_delta_U: need at least one point");
  const RotorSpace space(uncertainty_truncation(a));
  const detail::MomentOps ops(space);
  UncertaintyScan out{a, space.M(), std::vector<double>(static_cast<std::size_t>(n)),
                      std::vector<double>(static_cast<std::size_t>(n))};
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
    const double theta = theta_node(static_cast<int>(k), n);
    const PureState state = coherent_state(space, CoherentLabel(0, theta, a), 1e-6);
    out.theta[k] = theta;
    out.delta_U[k] = delta_from_sides(uncertainty_sides(ops.on(state)));
  });
  return out;
}

}  // namespace rotorphase

#endif  // ROTORPHASE_UNCERTAINTY_HPP
