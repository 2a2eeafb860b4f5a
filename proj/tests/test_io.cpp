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

#include <algorithm>
#include <cmath>

#include "rotorphase/io.hpp"
#include "support.hpp"

namespace {

using namespace rotorphase;
namespace rio = rotorphase::io;
using rotorphase::testing::max_abs;

TEST(StateJson, RoundTripIsExact) {
  const PureState psi = coherent_state(RotorSpace(10), CoherentLabel(1, 0.3, default_width()));
  const std::string text = rio::state_to_json(psi);
  const auto back = std::get<PureState>(rio::build_state(rio::parse_json(text)));
  // Renormalizing an already normalized vector may move the last bit.
  EXPECT_LE((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 4e-16);
}

TEST(StateJson, DensityRoundTrip) {
  const auto rho = DensityOperator::mixture(
      {{0.3, PureState::eigenstate(RotorSpace(2), 1)}, {0.7, PureState::eigenstate(RotorSpace(2), -2)}});
  const auto back = rio::as_density(rio::build_state(rio::parse_json(rio::density_to_json(rho))));
  EXPECT_EQ(max_abs(back.matrix() - rho.matrix()), 0.0);
}

TEST(StateSpec, Kinds) {
  const auto coh = rio::build_state(rio::parse_json(R"({"kind":"coherent","m0":2,"theta0":0.5})"));
  EXPECT_EQ(std::get<PureState>(coh).space().M(), default_truncation(default_width()) + 2);

  const auto eig = rio::build_state(rio::parse_json(R"({"kind":"eigenstate","m":1.5,"M":3,"sector":"fermion"})"));
  EXPECT_EQ(std::get<PureState>(eig).space().sector(), Sector::fermion);

  const auto sup = rio::build_state(
      rio::parse_json(R"({"kind":"superposition","M":3,"terms":[{"m":0,"amp":1},{"m":2,"amp":[0,1]}]})"));
  EXPECT_NEAR(std::abs(std::get<PureState>(sup).amplitude(2) - cplx(0, 1) / std::sqrt(2.0)), 0.0, 1e-15);

  const auto mix = rio::build_state(rio::parse_json(
      R"({"kind":"mixture","M":3,"components":[{"weight":1,"state":{"kind":"eigenstate","m":1}},
                                             {"weight":1,"state":{"kind":"eigenstate","m":-1}}]})"));
  EXPECT_NEAR(std::get<DensityOperator>(mix).matrix()(4, 4).real(), 0.5, 1e-15);
}

TEST(StateSpec, Errors) {
  EXPECT_THROW(rio::parse_json("{not json"), DomainError);
  EXPECT_THROW(rio::build_state(rio::parse_json(R"({"kind":"banana"})")), DomainError);
  EXPECT_THROW(rio::build_state(rio::parse_json(R"({"kind":"eigenstate","m":9,"M":3})")), DomainError);
  EXPECT_THROW(rio::build_state(rio::parse_json(R"({"kind":"eigenstate","m":"x","M":3})")), DomainError);
  EXPECT_THROW(rio::build_state(rio::parse_json(R"({"kind":"coherent","m0":0,"theta0":0,"M":2})")), TruncationError);
  EXPECT_THROW(rio::build_state(rio::parse_json(R"({"sector":"boson","M":1,"amplitudes":[1,0]})")), DomainError);
}

TEST(DistributionCsv, RoundTripIsExact) {
  const PhaseGrid grid(34);
  const KernelTable table(default_width(), grid.max_l(), grid.n);
  const auto rho = DensityOperator::from_pure(coherent_state(RotorSpace(8), CoherentLabel(0, 1.0, default_width())));
  const Distribution f = distribution(rho, cplx(0.3, 0.4), grid, table);
  const std::string csv = rio::distribution_to_csv(f);
  EXPECT_EQ(csv.rfind("# s_re=0.29999999999999999 s_im=0.40000000000000002 a=", 0), 0u);
  const Distribution back = rio::distribution_from_csv(csv);
  EXPECT_EQ(max_abs(back.values - f.values), 0.0);
  EXPECT_EQ(back.grid, f.grid);
  EXPECT_EQ(back.M, f.M);
  EXPECT_EQ(rio::distribution_to_csv(back), csv);

  const Distribution from_json = rio::distribution_from_json(rio::parse_json(rio::distribution_to_json(f)));
  EXPECT_EQ(max_abs(from_json.values - f.values), 0.0);
}

TEST(DistributionCsv, Malformed) {
  EXPECT_THROW(rio::distribution_from_csv("# s_re=0 s_im=0 a=0.1 M=2 N=4\n0,0,1,0\n"), DomainError);
  EXPECT_THROW(rio::distribution_from_csv("0,0,1,0\n"), DomainError);
}

TEST(ScanCsv, Header) {
  const UncertaintyScan s = scan_delta_U(default_width(), 4);
  const std::string csv = rio::scan_to_csv(s);
  EXPECT_EQ(csv.rfind("# a=0.15915494309189535  M=", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
