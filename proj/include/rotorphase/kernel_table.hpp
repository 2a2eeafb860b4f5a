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

#ifndef ROTORPHASE_KERNEL_TABLE_HPP
#define ROTORPHASE_KERNEL_TABLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "rotorphase/coherent.hpp"

namespace rotorphase {

/// K(l, alpha_j) and its continuously unwrapped logarithm on the half-offset
/// alpha grid, for |l| <= l_max. Immutable once built.
class KernelTable {
 public:
  KernelTable(WidthParam a, int l_max, int n_alpha) : a_(a), l_max_(l_max), n_alpha_(n_alpha) {
    if (l_max < 0) throw DomainError("KernelTable: l_max must be non-negative");
    if (n_alpha < 2) throw DomainError("KernelTable: need at least two alpha nodes");
    const std::size_t rows = static_cast<std::size_t>(2 * l_max + 1);
    values_.resize(rows * static_cast<std::size_t>(n_alpha));
    logs_.resize(values_.size());

    const double t = 2 * a.value();
    const double log_norm = std::log(theta3<double>(0.0, t, 1e-17).real());
    // Rows depend on l only through parity and the Gaussian prefactor.
    std::vector<cplx> body_log[2];
    std::vector<double> body[2];
    for (int parity = 0; parity < 2; ++parity) {
      body[parity].resize(static_cast<std::size_t>(n_alpha));
      body_log[parity].resize(static_cast<std::size_t>(n_alpha));
      for (int j = 0; j < n_alpha; ++j) {
        const double half = 0.5 * alpha(j);
        const cplx b = parity == 0 ? theta3<double>(half, t, 1e-17) : theta2<double>(half, t, 1e-17);
        body[parity][static_cast<std::size_t>(j)] = b.real();
        body_log[parity][static_cast<std::size_t>(j)] = std::log(b);
      }
      unwrap(body_log[parity]);
    }
    const double norm = std::exp(log_norm);
    for (int l = -l_max; l <= l_max; ++l) {
      const int parity = (l % 2 == 0) ? 0 : 1;
      const double gauss_log = -0.5 * kPi * a.value() * static_cast<double>(l) * l;
      for (int j = 0; j < n_alpha; ++j) {
        const std::size_t at = offset(l, j);
        values_[at] = std::exp(gauss_log) * body[parity][static_cast<std::size_t>(j)] / norm;
        logs_[at] = gauss_log + body_log[parity][static_cast<std::size_t>(j)] - log_norm;
      }
    }
  }

  WidthParam width() const noexcept { return a_; }
  int l_max() const noexcept { return l_max_; }
  int n_alpha() const noexcept { return n_alpha_; }
  bool covers(int l) const noexcept { return std::abs(l) <= l_max_; }
  double alpha(int j) const noexcept { return alpha_node(j, n_alpha_); }

  double value(int l, int j) const { return values_[checked(l, j)]; }
  cplx log_value(int l, int j) const { return logs_[checked(l, j)]; }

  /// [K(l, alpha_j)]^exponent = exp(exponent * log K).
  cplx power(int l, int j, cplx exponent) const { return std::exp(exponent * logs_[checked(l, j)]); }

  /// max_j Re(exponent * log K(l, alpha_j)): log of the largest |K^exponent| on row l.
  double row_log_magnitude(int l, cplx exponent) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_alpha_; ++j) worst = std::max(worst, (exponent * log_value(l, j)).real());
    return worst;
  }

 private:
  std::size_t offset(int l, int j) const noexcept {
    return static_cast<std::size_t>(l + l_max_) * static_cast<std::size_t>(n_alpha_) +
           static_cast<std::size_t>(j);
  }

  std::size_t checked(int l, int j) const {
    if (!covers(l)) {
      throw DomainError("KernelTable: row l = " + std::to_string(l) + " outside |l| <= " +
                        std::to_string(l_max_));
    }
    return offset(l, j);
  }

  // Continuity from the node nearest alpha = 0, where K is real positive.
  static void unwrap(std::vector<cplx>& logs) {
    const int n = static_cast<int>(logs.size());
    const int start = n / 2;
    auto fix = [&](int from, int to) {
      const double jump = logs[static_cast<std::size_t>(to)].imag() - logs[static_cast<std::size_t>(from)].imag();
      const double turns = std::round(jump / kTwoPi);
      logs[static_cast<std::size_t>(to)] -= cplx(0.0, kTwoPi * turns);
    };
    logs[static_cast<std::size_t>(start)] = cplx(logs[static_cast<std::size_t>(start)].real(), 0.0);
    for (int j = start + 1; j < n; ++j) fix(j - 1, j);
    for (int j = start - 1; j >= 0; --j) fix(j + 1, j);
  }

  WidthParam a_;
  int l_max_;
  int n_alpha_;
  std::vector<double> values_;
  std::vector<cplx> logs_;
};

}  // namespace rotorphase

#endif  // ROTORPHASE_KERNEL_TABLE_HPP
