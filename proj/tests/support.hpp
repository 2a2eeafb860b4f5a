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

#ifndef ROTORPHASE_TESTS_SUPPORT_HPP
#define ROTORPHASE_TESTS_SUPPORT_HPP

#include <complex>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace rotorphase::testing {

struct FixtureEntry {
  nlohmann::json inputs;
  std::complex<double> value;
};

/// Entries of fixtures/<module>.json whose inputs.quantity matches.
inline std::vector<FixtureEntry> fixtures(const std::string& module, const std::string& quantity) {
  const std::string path = std::string(ROTORPHASE_FIXTURE_DIR) + "/" + module + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture file " + path);
  const nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<FixtureEntry> out;
  for (const auto& e : doc) {
    if (e.at("inputs").at("quantity") != quantity) continue;
    const auto& v = e.at("value");
    out.push_back({e.at("inputs"), {std::stod(v[0].get<std::string>()), std::stod(v[1].get<std::string>())}});
  }
  if (out.empty()) throw std::runtime_error("no '" + quantity + "' entries in " + path);
  return out;
}

inline double num(const nlohmann::json& v) { return std::stod(v.get<std::string>()); }

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace rotorphase::testing

#endif  // ROTORPHASE_TESTS_SUPPORT_HPP
