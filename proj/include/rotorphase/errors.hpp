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

#ifndef ROTORPHASE_ERRORS_HPP
#define ROTORPHASE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rotorphase {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag (the CLI reports it in its stderr JSON).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Series terms would overflow before cancelling.
class OverflowRiskError : public Error {
 public:
  explicit OverflowRiskError(const std::string& what)
      : Error("overflow_risk", what) {}
};

/// Probability mass pushed past the edge of the truncated basis.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double leaked_mass)
      : Error("truncation", what), leaked_mass_(leaked_mass) {}

  double leaked_mass() const noexcept { return leaked_mass_; }

 private:
  double leaked_mass_;
};

/// Sampling grid too coarse for the requested band limit.
class AliasingError : public Error {
 public:
  explicit AliasingError(const std::string& what) : Error("aliasing", what) {}
};

/// A lattice sum over l whose terms do not decay.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error("convergence", what) {}
};

/// [K(l,alpha)]^{-s} is not representable on some row of the table.
class SingularKernelError : public Error {
 public:
  SingularKernelError(const std::string& what, int row, double log_magnitude)
      : Error("singular_kernel", what), row_(row), log_magnitude_(log_magnitude) {}

  int row() const noexcept { return row_; }
  double log_magnitude() const noexcept { return log_magnitude_; }

 private:
  int row_;
  double log_magnitude_;
};

/// Smoothing requested against the hierarchy (Re(u) < 0).
class HierarchyDirectionError : public Error {
 public:
  explicit HierarchyDirectionError(const std::string& what)
      : Error("hierarchy_direction", what) {}
};

/// Characteristic function does not decay fast enough for a pointwise P.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double tail_ratio)
      : Error("divergence", what), tail_ratio_(tail_ratio) {}

  double tail_ratio() const noexcept { return tail_ratio_; }

 private:
  double tail_ratio_;
};

/// Quantity with a vanishing denominator.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error("degenerate", what) {}
};

}  // namespace rotorphase

#endif  // ROTORPHASE_ERRORS_HPP
