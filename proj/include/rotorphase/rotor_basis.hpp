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

#ifndef ROTORPHASE_ROTOR_BASIS_HPP
#define ROTORPHASE_ROTOR_BASIS_HPP

// Truncated angular-momentum basis {|m>}, |m| <= M, and the operators of the
// angle / angular-momentum pair acting on it. Angle states follow
//   |theta> = (2 pi)^{-1/2} sum_m exp(i m theta) |m>,
// so wavefunctions are psi(theta) = (2 pi)^{-1/2} sum_m c_m exp(-i m theta)
// and J acts as +i d/dtheta.

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rotorphase/errors.hpp"
#include "rotorphase/grid.hpp"

namespace rotorphase {

using cplx = std::complex<double>;
using Index = Eigen::Index;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kDefaultLeakThreshold = 1e-10;

enum class Sector { boson, fermion };

inline const char* to_string(Sector sector) {
  return sector == Sector::boson ? "boson" : "fermion";
}

/// Basis labels m = -M..M (boson, 2M+1 states) or m = -M+1/2..M-1/2
/// (fermion, 2M states).
class RotorSpace {
 public:
  explicit RotorSpace(int M, Sector sector = Sector::boson) : M_(M), sector_(sector) {
    if (M < 1) throw DomainError("RotorSpace: truncation M must be >= 1");
  }

  int M() const noexcept { return M_; }
  Sector sector() const noexcept { return sector_; }
  bool is_boson() const noexcept { return sector_ == Sector::boson; }
  Index dim() const noexcept { return is_boson() ? 2 * M_ + 1 : 2 * M_; }
  double label_offset() const noexcept { return is_boson() ? 0.0 : 0.5; }

  double label(Index i) const noexcept {
    return static_cast<double>(i) - M_ + label_offset();
  }

  std::optional<Index> index_of(double label) const {
    const double raw = label + M_ - label_offset();
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-9 || rounded < 0 || rounded >= static_cast<double>(dim())) {
      return std::nullopt;
    }
    return static_cast<Index>(rounded);
  }

  friend bool operator==(const RotorSpace&, const RotorSpace&) = default;

 private:
  int M_;
  Sector sector_;
};

/// Normalized amplitude vector over the labels of a RotorSpace.
class PureState {
 public:
  /// Normalizes `amplitudes`; rejects states whose edge amplitudes exceed
  /// `leak_threshold` (pass infinity to accept edge support).
  PureState(RotorSpace space, Eigen::VectorXcd amplitudes,
            double leak_threshold = kDefaultLeakThreshold)
      : space_(space), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != space_.dim()) {
      throw DomainError("PureState: amplitude count " + std::to_string(amplitudes_.size()) +
                        " does not match basis dimension " + std::to_string(space_.dim()));
    }
    const double norm = amplitudes_.norm();
    if (!(norm > 0) || !std::isfinite(norm)) throw DomainError("PureState: zero or non-finite vector");
    amplitudes_ /= norm;
    const double edge = std::max(std::abs(amplitudes_(0)), std::abs(amplitudes_(amplitudes_.size() - 1)));
    if (edge > leak_threshold) {
      throw TruncationError("PureState: edge amplitude " + std::to_string(edge) +
                                " exceeds leak threshold; enlarge M",
                            edge_mass());
    }
  }

  static PureState eigenstate(RotorSpace space, double label) {
    const auto idx = space.index_of(label);
    if (!idx) throw DomainError("eigenstate: label " + std::to_string(label) + " not in basis");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.dim());
    amps(*idx) = 1.0;
    return PureState(space, std::move(amps), std::numeric_limits<double>::infinity());
  }

  const RotorSpace& space() const noexcept { return space_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }

  cplx amplitude(double label) const {
    const auto idx = space_.index_of(label);
    return idx ? amplitudes_(*idx) : cplx{};
  }

  /// Probability on the two outermost labels.
  double edge_mass() const {
    return std::norm(amplitudes_(0)) + std::norm(amplitudes_(amplitudes_.size() - 1));
  }

 private:
  RotorSpace space_;
  Eigen::VectorXcd amplitudes_;
};

/// Dense operator on a RotorSpace, entries indexed (row m', column m).
struct OperatorMatrix {
  RotorSpace space;
  Eigen::MatrixXcd entries;

  OperatorMatrix(RotorSpace s, Eigen::MatrixXcd e) : space(s), entries(std::move(e)) {
    if (entries.rows() != space.dim() || entries.cols() != space.dim()) {
      throw DomainError("OperatorMatrix: shape does not match basis dimension");
    }
  }

  static OperatorMatrix identity(RotorSpace s) {
    return {s, Eigen::MatrixXcd::Identity(s.dim(), s.dim())};
  }

  bool is_hermitian(double tol = 1e-12) const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  OperatorMatrix adjoint() const { return {space, entries.adjoint()}; }

  cplx expectation(const PureState& state) const {
    return state.amplitudes().dot(entries * state.amplitudes());
  }

  cplx trace() const { return entries.trace(); }
};

inline OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (!(lhs.space == rhs.space)) throw DomainError("operator product across different spaces");
  return {lhs.space, lhs.entries * rhs.entries};
}

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
 public:
  explicit DensityOperator(OperatorMatrix op) : op_(std::move(op)) {
    const auto& e = op_.entries;
    if (!op_.is_hermitian(1e-12)) throw DomainError("DensityOperator: not Hermitian");
    if (std::abs(e.trace() - cplx{1.0}) > 1e-12) throw DomainError("DensityOperator: trace != 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
      throw DomainError("DensityOperator: negative eigenvalue " +
                        std::to_string(solver.eigenvalues().minCoeff()));
    }
  }

  static DensityOperator from_pure(const PureState& state) {
    const auto& v = state.amplitudes();
    return DensityOperator(OperatorMatrix(state.space(), v * v.adjoint()));
  }

  /// sum_k w_k |psi_k><psi_k| with weights renormalized to sum 1.
  static DensityOperator mixture(const std::vector<std::pair<double, PureState>>& parts) {
    if (parts.empty()) throw DomainError("mixture: no components");
    const RotorSpace space = parts.front().second.space();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
    double total = 0;
    for (const auto& [w, psi] : parts) {
      if (!(psi.space() == space)) throw DomainError("mixture: components on different spaces");
      if (w < 0) throw DomainError("mixture: negative weight");
      rho += w * psi.amplitudes() * psi.amplitudes().adjoint();
      total += w;
    }
    if (!(total > 0)) throw DomainError("mixture: weights sum to zero");
    rho /= total;
    return DensityOperator(OperatorMatrix(space, rho));
  }

  const OperatorMatrix& op() const noexcept { return op_; }
  const RotorSpace& space() const noexcept { return op_.space; }
  const Eigen::MatrixXcd& matrix() const noexcept { return op_.entries; }

 private:
  OperatorMatrix op_;
};

/// J|m> = m|m>.
inline OperatorMatrix angular_momentum_op(const RotorSpace& space) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (Index i = 0; i < space.dim(); ++i) j(i, i) = space.label(i);
  return {space, j};
}

struct TrigOps {
  OperatorMatrix cos;
  OperatorMatrix sin;
};

/// cos(Theta), sin(Theta) with <m+1|sin|m> = 1/(2i), <m-1|sin|m> = -1/(2i).
inline TrigOps trig_theta_ops(const RotorSpace& space) {
  const Index d = space.dim();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  const cplx up = 1.0 / (2.0 * kI);
  for (Index i = 0; i + 1 < d; ++i) {
    c(i + 1, i) = 0.5;
    c(i, i + 1) = 0.5;
    s(i + 1, i) = up;
    s(i, i + 1) = -up;
  }
  return {{space, c}, {space, s}};
}

/// exp(i k Theta): |m> -> |m+k>, dropping what leaves the basis.
inline OperatorMatrix shift_op(const RotorSpace& space, int k) {
  const Index d = space.dim();
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const Index target = i + k;
    if (target >= 0 && target < d) e(target, i) = 1.0;
  }
  return {space, e};
}

/// exp(-i theta J).
inline OperatorMatrix rotation_op(const RotorSpace& space, double theta) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (Index i = 0; i < space.dim(); ++i) e(i, i) = std::exp(-kI * theta * space.label(i));
  return {space, e};
}

/// psi(theta_j) = <theta_j|psi> on the uniform grid of n points.
inline std::vector<cplx> angle_synthesize(const RotorSpace& space, const Eigen::VectorXcd& amplitudes,
                                          int n) {
  if (n < space.dim()) {
    throw AliasingError("angle_synthesize: grid of " + std::to_string(n) + " points cannot resolve " +
                        std::to_string(space.dim()) + " basis states");
  }
  const double inv_sqrt = 1.0 / std::sqrt(kTwoPi);
  std::vector<cplx> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = theta_node(j, n);
    cplx acc{};
    for (Index i = 0; i < space.dim(); ++i) acc += amplitudes(i) * std::exp(-kI * space.label(i) * theta);
    samples[static_cast<std::size_t>(j)] = inv_sqrt * acc;
  }
  return samples;
}

inline std::vector<cplx> angle_synthesize(const PureState& state, int n) {
  return angle_synthesize(state.space(), state.amplitudes(), n);
}

/// Inverse of angle_synthesize: c_m = (sqrt(2 pi)/n) sum_j psi(theta_j) exp(i m theta_j).
inline Eigen::VectorXcd angle_analyze(const RotorSpace& space, const std::vector<cplx>& samples) {
  const int n = static_cast<int>(samples.size());
  if (n < space.dim()) throw AliasingError("angle_analyze: too few samples");
  const double scale = std::sqrt(kTwoPi) / n;
  Eigen::VectorXcd amps(space.dim());
  for (Index i = 0; i < space.dim(); ++i) {
    cplx acc{};
    for (int j = 0; j < n; ++j) {
      acc += samples[static_cast<std::size_t>(j)] * std::exp(kI * space.label(i) * theta_node(j, n));
    }
    amps(i) = scale * acc;
  }
  return amps;
}

/// exp(-i theta J)|psi>.
inline PureState apply_exp_J(const PureState& state, double theta) {
  Eigen::VectorXcd amps = state.amplitudes();
  for (Index i = 0; i < amps.size(); ++i) amps(i) *= std::exp(-kI * theta * state.space().label(i));
  return PureState(state.space(), std::move(amps), std::numeric_limits<double>::infinity());
}

/// exp(i m_shift Theta)|psi>; throws TruncationError when the mass pushed
/// out of the basis exceeds leak_threshold^2.
inline PureState apply_exp_Theta(const PureState& state, int m_shift,
                                 double leak_threshold = kDefaultLeakThreshold) {
  const Index d = state.space().dim();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d);
  double leaked = 0;
  for (Index i = 0; i < d; ++i) {
    const Index target = i + m_shift;
    if (target >= 0 && target < d) {
      amps(target) = state.amplitudes()(i);
    } else {
      leaked += std::norm(state.amplitudes()(i));
    }
  }
  if (std::sqrt(leaked) > leak_threshold || leaked >= 1.0 - 1e-15) {
    throw TruncationError("apply_exp_Theta: shift " + std::to_string(m_shift) + " leaks mass " +
                              std::to_string(leaked) + " out of the basis",
                          leaked);
  }
  return PureState(state.space(), std::move(amps), std::numeric_limits<double>::infinity());
}

/// max_j |(J psi)(theta_j) - i psi'(theta_j)| with psi' obtained by
/// spectral differentiation of the sampled wavefunction.
inline double derivative_check(const PureState& state, int n) {
  const RotorSpace& space = state.space();
  const auto samples = angle_synthesize(state, n);
  const Eigen::VectorXcd j_amps = angular_momentum_op(space).entries * state.amplitudes();
  const auto j_samples = angle_synthesize(space, j_amps, n);

  // Sample frequencies live on Z + offset (half-integers in the fermion sector).
  const double offset = space.label_offset();
  std::vector<double> freqs;
  for (int k = -n; k <= n; ++k) {
    const double f = k + offset;
    if (std::abs(f) < 0.5 * n) freqs.push_back(f);
  }
  std::vector<cplx> coeffs(freqs.size());
  for (std::size_t q = 0; q < freqs.size(); ++q) {
    cplx acc{};
    for (int j = 0; j < n; ++j) acc += samples[static_cast<std::size_t>(j)] * std::exp(-kI * freqs[q] * theta_node(j, n));
    coeffs[q] = acc / static_cast<double>(n);
  }
  double residual = 0;
  for (int j = 0; j < n; ++j) {
    cplx derivative{};
    for (std::size_t q = 0; q < freqs.size(); ++q) {
      derivative += kI * freqs[q] * coeffs[q] * std::exp(kI * freqs[q] * theta_node(j, n));
    }
    residual = std::max(residual, std::abs(j_samples[static_cast<std::size_t>(j)] - kI * derivative));
  }
  return residual;
}

/// max |sum_j (2 pi / n) <m|theta_j><theta_j|m'> - delta_{m m'}|.
inline double angle_completeness_residual(const RotorSpace& space, int n) {
  const Index d = space.dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd ket(d);  // components <m|theta_j>
    for (Index i = 0; i < d; ++i) ket(i) = std::exp(kI * space.label(i) * theta_node(j, n)) / std::sqrt(kTwoPi);
    acc += (kTwoPi / n) * ket * ket.adjoint();
  }
  return (acc - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
}

}  // namespace rotorphase

#endif  // ROTORPHASE_ROTOR_BASIS_HPP
