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

#ifndef ROTORPHASE_MAPPING_HPP
#define ROTORPHASE_MAPPING_HPP

// s-parametrized mapping kernel
//
//   T^(s)(m,theta) = sum_l int dalpha/2pi exp[-i l (theta - Theta)] exp[i alpha (m - J)]
//                    exp(-i l alpha/2) [K(l,alpha)]^(-s)
//
// discretized on the (l, alpha_j) lattice, and the operator <-> phase-space
// maps built on it. Phase-space functions are sampled on m in a window of n
// consecutive integers and theta on n uniform nodes; with the n-point alpha
// rule this makes the lattice transform exactly invertible.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "rotorphase/kernel_table.hpp"
#include "rotorphase/parallel.hpp"

namespace rotorphase {

/// Ordering parameter s, |s| <= 1 (-1 Husimi, 0 Wigner, +1 Glauber-Sudarshan).
class SParameter {
 public:
  SParameter(cplx s) : s_(s) {  // NOLINT(google-explicit-constructor)
    if (!(std::abs(s) <= 1.0 + 1e-12)) {
      throw DomainError("s-parameter must satisfy |s| <= 1, got |s| = " + std::to_string(std::abs(s)));
    }
  }
  SParameter(double s) : SParameter(cplx(s, 0.0)) {}  // NOLINT(google-explicit-constructor)

  cplx value() const noexcept { return s_; }
  bool is_real() const noexcept { return s_.imag() == 0.0; }

 private:
  cplx s_;
};

/// Phase-space sampling: m in [m_min, m_min + n), theta_k = -pi + 2 pi k/n,
/// alpha_j on the half-offset grid of the same size.
struct PhaseGrid {
  int n;
  int m_min;

  explicit PhaseGrid(int n_points, std::optional<int> m_lo = std::nullopt)
      : n(n_points), m_min(m_lo ? *m_lo : -n_points / 2) {
    if (n_points < 3) throw DomainError("PhaseGrid: need at least 3 points");
  }

  int m_of(Index row) const noexcept { return m_min + static_cast<int>(row); }
  std::optional<Index> row_of(int m) const {
    if (m < m_min || m >= m_min + n) return std::nullopt;
    return static_cast<Index>(m - m_min);
  }
  double theta(int k) const noexcept { return theta_node(k, n); }
  double alpha(int j) const noexcept { return alpha_node(j, n); }
  /// Largest |l| resolved by the theta grid.
  int max_l() const noexcept { return (n - 1) / 2; }

  friend bool operator==(const PhaseGrid&, const PhaseGrid&) = default;
};

/// max(64, 4M+2), rounded up to even.
inline int default_grid_size(int M) {
  int n = std::max(64, 4 * M + 2);
  return n + (n % 2);
}

struct DistributionDiagnostics {
  double tail_ratio = 0.0;  // outer-shell |G(l,.)| relative to l = 0
  int l_extent = 0;         // largest |l| kept
  bool mollified = false;   // P accepted despite a non-decaying spectrum
};

/// F(m, theta_k) on a PhaseGrid; rows index m - m_min, columns index k.
struct Distribution {
  SParameter s;
  PhaseGrid grid;
  WidthParam a;
  int M;
  Eigen::MatrixXcd values;
  DistributionDiagnostics diagnostics{};

  cplx at(int m, int k) const {
    const auto row = grid.row_of(m);
    return row ? values(*row, k) : cplx{};
  }
};

namespace detail {

inline void require_boson(const RotorSpace& space, const char* who) {
  if (!space.is_boson()) throw DomainError(std::string(who) + ": phase-space maps need the boson sector");
}

inline void require_table(const PhaseGrid& grid, const KernelTable& table, int l_needed, const char* who) {
  if (table.n_alpha() != grid.n) {
    throw DomainError(std::string(who) + ": kernel table has " + std::to_string(table.n_alpha()) +
                      " alpha nodes, grid has " + std::to_string(grid.n));
  }
  if (2 * l_needed + 1 > grid.n) {
    throw AliasingError(std::string(who) + ": grid of " + std::to_string(grid.n) +
                        " nodes cannot resolve |l| <= " + std::to_string(l_needed));
  }
  if (!table.covers(l_needed)) {
    throw DomainError(std::string(who) + ": kernel table does not cover |l| <= " + std::to_string(l_needed));
  }
}

// E(m_row, j) = exp(i alpha_j m).
inline Eigen::MatrixXcd m_alpha_phases(const PhaseGrid& g) {
  Eigen::MatrixXcd e(g.n, g.n);
  for (Index r = 0; r < g.n; ++r) {
    for (int j = 0; j < g.n; ++j) e(r, j) = std::exp(kI * g.alpha(j) * static_cast<double>(g.m_of(r)));
  }
  return e;
}

// P(l + L, k) = exp(-i l theta_k).
inline Eigen::MatrixXcd l_theta_phases(const PhaseGrid& g, int L) {
  Eigen::MatrixXcd p(2 * L + 1, g.n);
  for (int l = -L; l <= L; ++l) {
    for (int k = 0; k < g.n; ++k) p(l + L, k) = std::exp(-kI * static_cast<double>(l) * g.theta(k));
  }
  return p;
}

// F(m, theta_k) = sum_l exp(-i l theta_k) (1/n) sum_j exp(i alpha_j m) G(l, j).
inline Eigen::MatrixXcd synthesize(const Eigen::MatrixXcd& spectrum, const PhaseGrid& g, int L) {
  const Eigen::MatrixXcd h = m_alpha_phases(g) * spectrum.transpose() / static_cast<double>(g.n);
  return h * l_theta_phases(g, L);
}

// Inverse of synthesize for spectra supported on |l| <= L.
inline Eigen::MatrixXcd analyze(const Eigen::MatrixXcd& values, const PhaseGrid& g, int L) {
  const Eigen::MatrixXcd a = values * l_theta_phases(g, L).adjoint() / static_cast<double>(g.n);
  return (m_alpha_phases(g).adjoint() * a).transpose();
}

// chi(l, alpha_j) = sum_n exp(-i alpha_j n) O_{n, n+l}, |l| <= L.
inline Eigen::MatrixXcd characteristic_table(const OperatorMatrix& op, int L, const PhaseGrid& g) {
  const RotorSpace& space = op.space;
  const Index d = space.dim();
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(2 * L + 1, g.n);
  for (int l = -L; l <= L; ++l) {
    for (Index i = 0; i < d; ++i) {
      const Index col = i + l;
      if (col < 0 || col >= d) continue;
      const cplx entry = op.entries(i, col);
      if (entry == cplx{}) continue;
      const double label = space.label(i);
      for (int j = 0; j < g.n; ++j) chi(l + L, j) += std::exp(-kI * g.alpha(j) * label) * entry;
    }
  }
  return chi;
}

inline double spectrum_tail_ratio(const Eigen::MatrixXcd& spectrum, int L) {
  int extent = 0;
  for (int l = -L; l <= L; ++l) {
    if (spectrum.row(l + L).cwiseAbs().maxCoeff() > 0) extent = std::max(extent, std::abs(l));
  }
  if (extent == 0) return 0.0;
  const double centre = spectrum.row(L).cwiseAbs().maxCoeff();
  double outer = 0;
  for (int l = -L; l <= L; ++l) {
    if (2 * std::abs(l) > extent) outer = std::max(outer, spectrum.row(l + L).cwiseAbs().maxCoeff());
  }
  return centre > 0 ? outer / centre : std::numeric_limits<double>::infinity();
}

inline constexpr double kMaxLogMagnitude = 700.0;

}  // namespace detail

/// Tr[exp(i l Theta) exp(-i alpha J) O] = sum_n exp(-i alpha n) O_{n, n+l}.
inline cplx characteristic_function(const OperatorMatrix& op, int l, double alpha) {
  const RotorSpace& space = op.space;
  if (std::abs(l) > 2 * space.M()) throw DomainError("characteristic_function: |l| exceeds 2M");
  cplx acc{};
  for (Index i = 0; i < space.dim(); ++i) {
    const Index col = i + l;
    if (col < 0 || col >= space.dim()) continue;
    acc += std::exp(-kI * alpha * space.label(i)) * op.entries(i, col);
  }
  return acc;
}

inline cplx characteristic_function(const DensityOperator& rho, int l, double alpha) {
  return characteristic_function(rho.op(), l, alpha);
}

/// <m1|T^(s)(m,theta)|m2> = exp(-i l theta) (1/n) sum_j exp(i alpha_j (m - (m1+m2)/2)) K(l,alpha_j)^(-s),
/// with l = m1 - m2.
inline cplx kernel_element(const KernelTable& table, SParameter s, int m, double theta, double m1, double m2) {
  const int l = static_cast<int>(std::lround(m1 - m2));
  const cplx exponent = -s.value();
  const double peak = table.row_log_magnitude(l, exponent);
  if (peak > detail::kMaxLogMagnitude) {
    throw SingularKernelError("kernel_T: [K(l,alpha)]^(-s) overflows on row l = " + std::to_string(l) +
                                  " (log magnitude " + std::to_string(peak) + ")",
                              l, peak);
  }
  const double centre = 0.5 * (m1 + m2);
  const int n = table.n_alpha();
  cplx acc{};
  for (int j = 0; j < n; ++j) {
    acc += std::exp(kI * table.alpha(j) * (m - centre)) * table.power(l, j, exponent);
  }
  return std::exp(-kI * static_cast<double>(l) * theta) * acc / static_cast<double>(n);
}

/// Matrix of T^(s)(m, theta) on the truncated basis.
inline OperatorMatrix kernel_T(const RotorSpace& space, SParameter s, int m, double theta,
                               const KernelTable& table) {
  detail::require_boson(space, "kernel_T");
  const Index d = space.dim();
  Eigen::MatrixXcd e(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) e(r, c) = kernel_element(table, s, m, theta, space.label(r), space.label(c));
  }
  return {space, e};
}

/// Tr T^(s)(m, theta) over the truncated basis (diagonal only).
inline cplx kernel_trace(const RotorSpace& space, SParameter s, int m, double theta, const KernelTable& table) {
  detail::require_boson(space, "kernel_trace");
  cplx acc{};
  for (Index i = 0; i < space.dim(); ++i) acc += kernel_element(table, s, m, theta, space.label(i), space.label(i));
  return acc;
}

struct LatticeSum {
  cplx value;
  int l_extent;    // rows summed: |l| <= l_extent
  bool converged;  // summand fell below 1e-14 before the table edge
};

/// sum_l (1/n) sum_j exp(i (l dtheta - alpha_j dm)) [K(l,alpha_j)]^exponent,
/// truncated at the first row whose largest term is below 1e-14.
inline LatticeSum lattice_pair_sum(cplx exponent, int dm, double dtheta, const KernelTable& table) {
  if (exponent.real() < 0) {
    throw ConvergenceError("lattice sum diverges: the exponent of K has real part " +
                           std::to_string(exponent.real()) + " < 0 (needs Re(s1+s2) <= 0)");
  }
  int extent = table.l_max();
  bool converged = false;
  for (int l = 0; l <= table.l_max(); ++l) {
    if (table.row_log_magnitude(l, exponent) < std::log(1e-14)) {
      extent = l - 1;
      converged = true;
      break;
    }
  }
  const int n = table.n_alpha();
  cplx total{};
  for (int l = -extent; l <= extent; ++l) {
    cplx row{};
    for (int j = 0; j < n; ++j) {
      row += std::exp(-kI * table.alpha(j) * static_cast<double>(dm)) * table.power(l, j, exponent);
    }
    total += std::exp(kI * static_cast<double>(l) * dtheta) * row / static_cast<double>(n);
  }
  return {total, extent, converged};
}

/// Tr[T^(s1)(m',theta') T^(s2)(m,theta)] with (dm, dtheta) = (m'-m, theta'-theta).
inline cplx pair_trace(SParameter s1, SParameter s2, int dm, double dtheta, const KernelTable& table) {
  return lattice_pair_sum(-(s1.value() + s2.value()), dm, dtheta, table).value;
}

/// F(m, theta_k) = Tr[T^(kernel_s)(m, theta_k) O] through the characteristic
/// function; spectrum rows kept for |l| <= min(l_cap, 2M).
inline Distribution phase_space_transform(const OperatorMatrix& op, SParameter kernel_s, const PhaseGrid& grid,
                                          const KernelTable& table, int l_cap = -1) {
  detail::require_boson(op.space, "phase_space_transform");
  const int full = 2 * op.space.M();
  const int L = l_cap < 0 ? full : std::min(l_cap, full);
  detail::require_table(grid, table, L, "phase_space_transform");

  const Eigen::MatrixXcd chi = detail::characteristic_table(op, L, grid);
  Eigen::MatrixXcd spectrum = Eigen::MatrixXcd::Zero(2 * L + 1, grid.n);
  const cplx exponent = -kernel_s.value();
  for (int l = -L; l <= L; ++l) {
    for (int j = 0; j < grid.n; ++j) {
      const cplx c = chi(l + L, j);
      if (c == cplx{}) continue;
      const cplx log_term = exponent * table.log_value(l, j) - 0.5 * kI * static_cast<double>(l) * grid.alpha(j);
      const double magnitude = log_term.real() + std::log(std::abs(c));
      if (magnitude > detail::kMaxLogMagnitude) {
        throw SingularKernelError("phase-space transform overflows on row l = " + std::to_string(l), l, magnitude);
      }
      spectrum(l + L, j) = c * std::exp(log_term);
    }
  }
  Distribution out{kernel_s, grid, table.width(), op.space.M(), detail::synthesize(spectrum, grid, L)};
  out.diagnostics.tail_ratio = detail::spectrum_tail_ratio(spectrum, L);
  out.diagnostics.l_extent = L;
  return out;
}

/// F^(s)(m, theta) = Tr[T^(s)(m, theta) rho].
inline Distribution distribution(const DensityOperator& rho, SParameter s, const PhaseGrid& grid,
                                 const KernelTable& table, int l_cap = -1) {
  return phase_space_transform(rho.op(), s, grid, table, l_cap);
}

/// O^(-s)(m, theta) = Tr[T^(-s)(m, theta) O]; the result carries tag -s.
inline Distribution map_operator(const OperatorMatrix& op, SParameter s, const PhaseGrid& grid,
                                 const KernelTable& table) {
  return phase_space_transform(op, SParameter(-s.value()), grid, table);
}

/// Lattice spectrum G(l, alpha_j), |l| <= grid.max_l(), of sampled values.
inline Eigen::MatrixXcd lattice_spectrum(const Distribution& f) {
  return detail::analyze(f.values, f.grid, f.grid.max_l());
}

/// O = sum_m (1/n) sum_k f(m, theta_k) T^(s)(m, theta_k) with s = -f.s.
inline OperatorMatrix reconstruct_operator(const Distribution& f, const RotorSpace& space, const KernelTable& table) {
  detail::require_boson(space, "reconstruct_operator");
  const PhaseGrid& g = f.grid;
  const int L = 2 * space.M();
  detail::require_table(g, table, L, "reconstruct_operator");
  if (f.values.rows() != g.n || f.values.cols() != g.n) throw DomainError("reconstruct_operator: malformed samples");

  const cplx exponent = f.s.value();  // -s with s = -f.s
  for (int l = 0; l <= L; ++l) {
    const double peak = table.row_log_magnitude(l, exponent);
    if (peak > detail::kMaxLogMagnitude) {
      throw SingularKernelError("reconstruct_operator: kernel overflows on row l = " + std::to_string(l), l, peak);
    }
  }
  // B(j, l) = sum_m (1/n) sum_k f(m,k) exp(-i l theta_k) exp(i alpha_j m).
  const Eigen::MatrixXcd partial = f.values * detail::l_theta_phases(g, L).transpose() / static_cast<double>(g.n);
  const Eigen::MatrixXcd b = detail::m_alpha_phases(g).transpose() * partial;

  const Index d = space.dim();
  Eigen::MatrixXcd out(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const int l = static_cast<int>(r - c);
      const double centre = 0.5 * (space.label(r) + space.label(c));
      cplx acc{};
      for (int j = 0; j < g.n; ++j) {
        acc += std::exp(-kI * g.alpha(j) * centre) * table.power(l, j, exponent) * b(j, l + L);
      }
      out(r, c) = acc / static_cast<double>(g.n);
    }
  }
  return {space, out};
}

/// sum_m (1/n) sum_k f(m, theta_k).
inline cplx phase_space_integral(const Distribution& f) {
  return f.values.sum() / static_cast<double>(f.grid.n);
}

/// sum_m (1/n) sum_k f g.
inline cplx phase_space_inner(const Distribution& f, const Distribution& g) {
  if (!(f.grid == g.grid)) throw DomainError("phase_space_inner: grids differ");
  return f.values.cwiseProduct(g.values).sum() / static_cast<double>(f.grid.n);
}

/// Tr(O rho) evaluated as sum_m int dtheta/2pi O^(-s) F^(s).
inline cplx expectation_via_phase_space(const OperatorMatrix& op, const DensityOperator& rho, SParameter s,
                                        const PhaseGrid& grid, const KernelTable& table) {
  return phase_space_inner(map_operator(op, s, grid, table), distribution(rho, s, grid, table));
}

}  // namespace rotorphase

#endif  // ROTORPHASE_MAPPING_HPP
