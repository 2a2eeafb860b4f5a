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

#include <gtest/gtest.h>

#include <cmath>

#include "rotorphase/displacement.hpp"
#include "support.hpp"

namespace {

using namespace rotorphase;
using rotorphase::testing::max_abs;

// D(m, theta) = exp(-i m theta/2) exp(i m Theta) exp(-i theta J), built from the factors.
Eigen::MatrixXcd factored(const RotorSpace& space, int m, double theta) {
  return std::exp(-0.5 * kI * (m * theta)) * (shift_op(space, m) * rotation_op(space, theta)).entries;
}

TEST(Displacement, MatrixElements) {
  const RotorSpace space(6);
  for (int m : {-4, 0, 3}) {
    for (double th : {-2.9, 0.0, 1.3}) {
      EXPECT_LE(max_abs(displacement_matrix(space, {m, th}).entries - factored(space, m, th)), 1e-15);
    }
  }
  EXPECT_THROW(displacement_matrix(space, {13, 0.0}), DomainError);
}

TEST(Displacement, LabelWrapsAngle) {
  const DisplacementLabel d(2, 7.0);
  EXPECT_NEAR(d.theta(), 7.0 - 2 * kPi, 1e-15);
  EXPECT_EQ(d.inverse().m(), -2);
}

// D(m, theta + 2 pi) = (-1)^m D(m, theta): the label wrap costs a sign for odd m.
TEST(Displacement, AngleWrapSign) {
  const RotorSpace space(5);
  for (int m : {1, 2, -3}) {
    const double th = 2.5;
    const Eigen::MatrixXcd unwrapped = factored(space, m, th + 2 * kPi);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    EXPECT_LE(max_abs(unwrapped - sign * displacement_matrix(space, {m, th}).entries), 1e-13);
  }
}

TEST(Displacement, UnitaryOnTheInterior) {
  const RotorSpace space(8);
  const int m = 3;
  const Eigen::MatrixXcd d = displacement_matrix(space, {m, 0.7}).entries;
  const Eigen::MatrixXcd g = d.adjoint() * d;
  const Index keep = space.dim() - m;  // columns whose image stays in the basis
  EXPECT_LE(max_abs(g.topLeftCorner(keep, keep) - Eigen::MatrixXcd::Identity(keep, keep)), 1e-15);
}

// D(a) D(b) = phase D(c), checked on the block both sides keep.
TEST(Composition, MatchesMatrixProduct) {
  const RotorSpace space(12);
  const std::pair<int, double> cases[][2] = {{{1, 0.4}, {2, -1.1}},
                                            {{-3, 2.8}, {1, 2.9}},
                                            {{2, -3.0}, {-1, -2.5}},
                                            {{0, 1.0}, {4, 3.1}}};
  for (const auto& [pa, pb] : cases) {
    const DisplacementLabel a(pa.first, pa.second), b(pb.first, pb.second);
    const Composition c = compose_labels(a, b);
    const Eigen::MatrixXcd lhs = (displacement_matrix(space, a) * displacement_matrix(space, b)).entries;
    const Eigen::MatrixXcd rhs = c.phase * displacement_matrix(space, c.label).entries;
    const Index margin = 6;
    const Index n = space.dim() - 2 * margin;
    EXPECT_LE(max_abs(lhs.block(margin, margin, n, n) - rhs.block(margin, margin, n, n)), 1e-13);
    EXPECT_GE(c.label.theta(), -kPi);
    EXPECT_LT(c.label.theta(), kPi);
  }
}

TEST(HilbertSchmidt, MatchesTruncatedTraceAtZeroShift) {
  const int M = 7;
  const RotorSpace space(M);
  const DisplacementLabel a(0, 0.4), b(0, -1.3);
  const cplx trace = (displacement_matrix(space, a).adjoint() * displacement_matrix(space, b)).trace();
  EXPECT_LE(std::abs(hs_inner(a, b, M) - trace), 1e-13);
  EXPECT_EQ(hs_inner({1, 0.4}, {2, 0.4}, M), cplx(0.0));
  EXPECT_NEAR(hs_inner(a, a, M).real(), 2 * M + 1, 1e-13);
}

}  // namespace
