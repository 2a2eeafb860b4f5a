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

#ifndef ROTORPHASE_QUASIPROB_HPP
#define ROTORPHASE_QUASIPROB_HPP

// Husimi (s = -1), Wigner (s = 0) and Glauber-Sudarshan (s = +1) functions,
// and the smoothing maps P -> W -> H between them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "rotorphase/mapping.hpp"

namespace rotorphase {

/// H(m, theta) = <m,theta|rho|m,theta>, evaluated with explicit coherent vectors.
inline Distribution husimi(const DensityOperator& rho, WidthParam a, const PhaseGrid& grid) {
  detail::require_boson(rho.space(), "husimi");
  Eigen::MatrixXcd values(grid.n, grid.n);
  const Eigen::MatrixXcd& r = rho.matrix();
  parallel_for(static_cast<std::size_t>(grid.n), [&](std::size_t row) {
    const int m = grid.m_of(static_cast<Index>(row));
    for (int k = 0; k < grid.n; ++k) {
      const Eigen::VectorXcd v = coherent_amplitudes(rho.space(), m, grid.theta(k), a);
      values(static_cast<Index>(row), k) = v.dot(r * v);
    }
  });
  Distribution out{SParameter(-1.0), grid, a, rho.space().M(), std::move(values)};
  out.diagnostics.l_extent = 2 * rho.space().M();
  return out;
}

inline Distribution wigner(const DensityOperator& rho, const PhaseGrid& grid, const KernelTable& table) {
  return distribution(rho, SParameter(0.0), grid, table);
}

/// What to do when the P spectrum does not decay within the kept l range.
enum class PPolicy {
  strict,   // throw DivergenceError
  mollify,  // keep the truncated result, flagged in diagnostics
};

inline constexpr double kPTailLimit = 0.1;

inline Distribution glauber_sudarshan(const DensityOperator& rho, const PhaseGrid& grid, const KernelTable& table,
                                      int l_cap = -1, PPolicy policy = PPolicy::strict) {
  Distribution p = distribution(rho, SParameter(1.0), grid, table, l_cap);
  if (p.diagnostics.tail_ratio > kPTailLimit) {
    if (policy == PPolicy::strict) {
      throw DivergenceError("P-function is distributional for this state (l-tail ratio " +
                                std::to_string(p.diagnostics.tail_ratio) + ")",
                            p.diagnostics.tail_ratio);
    }
    p.diagnostics.mollified = true;
  }
  return p;
}

/// z^(u)(dm, dtheta) = sum_l (1/n) sum_j exp(i(l dtheta - alpha_j dm)) K(l,alpha_j)^u.
inline cplx smoothing_kernel(SParameter u, int dm, double dtheta, const KernelTable& table) {
  if (u.value().real() < 0) {
    throw HierarchyDirectionError("smoothing needs Re(u) >= 0, got " + std::to_string(u.value().real()));
  }
  return lattice_pair_sum(u.value(), dm, dtheta, table).value;
}

/// Periodic convolution of f with z^(u), done as multiplication by K^u on the
/// (l, alpha_j) lattice. The result carries tag f.s - u.
inline Distribution smooth(const Distribution& f, SParameter u, const KernelTable& table) {
  if (u.value().real() < 0) {
    throw HierarchyDirectionError("smoothing needs Re(u) >= 0, got " + std::to_string(u.value().real()));
  }
  const PhaseGrid& g = f.grid;
  const int L = g.max_l();
  detail::require_table(g, table, L, "smooth");
  if (table.width().value() != f.a.value()) throw DomainError("smooth: kernel table width differs from the input");
  const SParameter tag(f.s.value() - u.value());

  Eigen::MatrixXcd spectrum = detail::analyze(f.values, g, L);
  for (int l = -L; l <= L; ++l) {
    for (int j = 0; j < g.n; ++j) spectrum(l + L, j) *= table.power(l, j, u.value());
  }
  Distribution out{tag, g, f.a, f.M, detail::synthesize(spectrum, g, L)};
  out.diagnostics.tail_ratio = detail::spectrum_tail_ratio(spectrum, L);
  out.diagnostics.l_extent = L;
  return out;
}

/// |<m',theta'|m,theta>|^2 as a function of (m - m', theta - theta').
inline double coherent_overlap_sq(WidthParam a, int dm, double dtheta) {
  const CoherentLabel origin(0, 0.0, a);
  const CoherentLabel shifted(dm, dtheta, a);
  return std::norm(overlap_closed_form(origin, shifted));
}

/// H(m, theta) = sum_m' (1/n) sum_k' |<m,theta|m',theta_k'>|^2 P(m', theta_k').
/// The weight is circulant in theta, so each m-pair costs one DFT row.
inline Distribution husimi_from_P(const Distribution& p) {
  if (std::abs(p.s.value() - cplx(1.0)) > 1e-12) throw DomainError("husimi_from_P: input must carry s = 1");
  const PhaseGrid& g = p.grid;
  const int n = g.n;
  Eigen::MatrixXcd dft(n, n);
  for (int q = 0; q < n; ++q) {
    for (int k = 0; k < n; ++k) dft(q, k) = std::exp(-kI * (kTwoPi * q * k / n));
  }
  // |dm| limited by where the weight underflows and by the theta-argument cap of the closed form.
  const double a = p.a.value();
  const double arg_cap = std::min(100.0 * a, std::sqrt(1200.0 * kPi * a)) / (kPi * a);
  const int reach = std::min({n - 1, static_cast<int>(std::sqrt(700.0 / (kPi * a))), static_cast<int>(arg_cap)});
  Eigen::MatrixXcd weight_hat(2 * reach + 1, n);
  for (int dm = -reach; dm <= reach; ++dm) {
    Eigen::VectorXcd w(n);
    for (int k = 0; k < n; ++k) w(k) = coherent_overlap_sq(p.a, dm, kTwoPi * k / n);
    weight_hat.row(dm + reach) = (dft * w).transpose();
  }
  const Eigen::MatrixXcd p_hat = p.values * dft.transpose();  // rows m', DFT over theta
  Eigen::MatrixXcd h_hat = Eigen::MatrixXcd::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    const int m = g.m_of(r);
    for (Index rp = 0; rp < n; ++rp) {
      const int dm = m - g.m_of(rp);
      if (std::abs(dm) > reach) continue;
      h_hat.row(r) += weight_hat.row(dm + reach).cwiseProduct(p_hat.row(rp));
    }
  }
  Eigen::MatrixXcd values = h_hat * dft.conjugate().transpose() / static_cast<double>(n) / static_cast<double>(n);
  Distribution out{SParameter(-1.0), g, p.a, p.M, std::move(values)};
  out.diagnostics.l_extent = g.max_l();
  return out;
}

/// D(m0, theta0) rho D(m0, theta0)^dagger.
inline DensityOperator displaced_density(const DensityOperator& rho, const DisplacementLabel& label) {
  const OperatorMatrix d = displacement_matrix(rho.space(), label);
  return DensityOperator(d * rho.op() * d.adjoint());
}

struct DistributionSummary {
  double normalization;
  double min;
  double max;
  double negativity_volume;  // sum_m (1/n) sum_k max(-Re F, 0)
  double tail_ratio;
};

inline DistributionSummary summarize(const Distribution& f) {
  const Eigen::MatrixXd re = f.values.real();
  const double cell = 1.0 / f.grid.n;
  return {phase_space_integral(f).real(), re.minCoeff(), re.maxCoeff(),
          (-re).cwiseMax(0.0).sum() * cell, f.diagnostics.tail_ratio};
}

}  // namespace rotorphase

#endif  // ROTORPHASE_QUASIPROB_HPP
