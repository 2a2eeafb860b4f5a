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

#ifndef ROTORPHASE_COHERENT_HPP
#define ROTORPHASE_COHERENT_HPP

// Theta-function vacuum |0,0> and the displaced coherent states
// |m, theta> = D(m, theta)|0,0>, their closed-form overlap and the overlap
// kernel K(l, alpha) = <0,0|l,alpha>.

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "rotorphase/displacement.hpp"
#include "rotorphase/theta.hpp"

namespace rotorphase {

/// Width of the vacuum: amplitudes decay as exp(-pi a m^2).
class WidthParam {
 public:
  explicit WidthParam(double a) : a_(a) {
    if (!(a > 0) || !std::isfinite(a)) throw DomainError("width a must be positive");
  }
  double value() const noexcept { return a_; }

 private:
  double a_;
};

/// The working width a = 1/(2 pi).
inline WidthParam default_width() { return WidthParam(1.0 / kTwoPi); }

struct CoherentLabel {
  int m0;
  double theta0;
  WidthParam a;

  CoherentLabel(int m, double theta, WidthParam width)
      : m0(m), theta0(wrap_angle(theta).angle), a(width) {}
};

/// Smallest symmetric basis holding the vacuum with Gaussian tails below tol:
/// ceil(sqrt(ln(1/tol)/(pi a))) + 2.
inline int default_truncation(WidthParam a, double tol = 1e-10) {
  return static_cast<int>(std::ceil(std::sqrt(std::log(1.0 / tol) / (kPi * a.value())))) + 2;
}

namespace detail {

inline double vacuum_norm_sq(WidthParam a, Sector sector) {
  const double t = 2 * a.value();
  return sector == Sector::boson ? theta3<double>(0.0, t, 1e-16).real()
                                 : theta2<double>(0.0, t, 1e-16).real();
}

// Vacuum amplitude c_x = exp(-pi a x^2) / sqrt(theta(0|2ia)), any real label x.
inline double vacuum_amplitude(WidthParam a, double x, double norm_sq) {
  return std::exp(-kPi * a.value() * x * x) / std::sqrt(norm_sq);
}

inline void check_leak(const Eigen::VectorXcd& amps, double leak_threshold, const char* who) {
  const double edge = std::max(std::abs(amps(0)), std::abs(amps(amps.size() - 1)));
  if (edge > leak_threshold) {
    throw TruncationError(std::string(who) + ": edge amplitude " + std::to_string(edge) +
                              " exceeds leak threshold; enlarge M",
                          std::norm(amps(0)) + std::norm(amps(amps.size() - 1)));
  }
}

}  // namespace detail

/// |0,0>: c_m = exp(-pi a m^2)/sqrt(theta_3(0|2ia)) (boson) or with theta_2
/// at half-integer m (fermion).
inline PureState vacuum(const RotorSpace& space, WidthParam a,
                        double leak_threshold = kDefaultLeakThreshold) {
  const double norm_sq = detail::vacuum_norm_sq(a, space.sector());
  Eigen::VectorXcd amps(space.dim());
  for (Index i = 0; i < space.dim(); ++i) amps(i) = detail::vacuum_amplitude(a, space.label(i), norm_sq);
  detail::check_leak(amps, leak_threshold, "vacuum");
  return PureState(space, std::move(amps), std::numeric_limits<double>::infinity());
}

/// Amplitudes <m|m0,theta0> = exp(-i m0 theta0/2) exp(-i theta0 (m - m0)) c_{m-m0}
/// without any leak check (used for projector sweeps far from the basis).
inline Eigen::VectorXcd coherent_amplitudes(const RotorSpace& space, int m0, double theta0, WidthParam a) {
  if (!space.is_boson()) throw DomainError("coherent states are defined for the boson sector only");
  const double norm_sq = detail::vacuum_norm_sq(a, Sector::boson);
  const cplx ordering = std::exp(-0.5 * kI * static_cast<double>(m0) * theta0);
  Eigen::VectorXcd amps(space.dim());
  for (Index i = 0; i < space.dim(); ++i) {
    const double k = space.label(i) - m0;
    amps(i) = ordering * std::exp(-kI * theta0 * k) * detail::vacuum_amplitude(a, k, norm_sq);
  }
  return amps;
}

/// |m0, theta0> = D(m0, theta0)|0,0>.
inline PureState coherent_state(const RotorSpace& space, const CoherentLabel& label,
                                double leak_threshold = kDefaultLeakThreshold) {
  Eigen::VectorXcd amps = coherent_amplitudes(space, label.m0, label.theta0, label.a);
  detail::check_leak(amps, leak_threshold, "coherent_state");
  return PureState(space, std::move(amps), std::numeric_limits<double>::infinity());
}

/// <m',theta'|m,theta> = exp{-pi a (m-m')^2 + (i/2)[(m theta' - m' theta) + (m-m')(theta-theta')]}
///   * theta_3((theta-theta')/2 + i pi a (m-m') | 2ia) / theta_3(0|2ia).
inline cplx overlap_closed_form(const CoherentLabel& lhs, const CoherentLabel& rhs) {
  if (lhs.a.value() != rhs.a.value()) throw DomainError("overlap_closed_form: widths differ");
  const double a = lhs.a.value();
  const double m = rhs.m0, th = rhs.theta0;
  const double mp = lhs.m0, thp = lhs.theta0;
  const double dm = m - mp, dth = th - thp;
  const cplx exponent(-kPi * a * dm * dm, 0.5 * ((m * thp - mp * th) + dm * dth));
  const cplx z(0.5 * dth, kPi * a * dm);
  const cplx ratio = theta3<double>(z, 2 * a, 1e-16) / theta3<double>(0.0, 2 * a, 1e-16);
  return std::exp(exponent) * ratio;
}

/// K(l, alpha) = <0,0|l,alpha>, evaluated in the equivalent real form
/// exp(-pi a l^2/2) theta_{3|2}(alpha/2 | 2ia) / theta_3(0|2ia)
/// (theta_2 for odd l), which stays finite for every l.
inline double kernel_K(WidthParam a, int l, double alpha) {
  const double t = 2 * a.value();
  const double body = (l % 2 == 0) ? theta3<double>(0.5 * alpha, t, 1e-17).real()
                                   : theta2<double>(0.5 * alpha, t, 1e-17).real();
  const double gauss = std::exp(-0.5 * kPi * a.value() * static_cast<double>(l) * l);
  return gauss * body / theta3<double>(0.0, t, 1e-17).real();
}

/// log K(l, alpha) without forming exp(-pi a l^2/2); complex for use as the
/// base of complex powers (imaginary part is the branch, 0 or pi).
inline cplx log_kernel_K(WidthParam a, int l, double alpha) {
  const double t = 2 * a.value();
  const cplx body = (l % 2 == 0) ? theta3<double>(0.5 * alpha, t, 1e-17)
                                 : theta2<double>(0.5 * alpha, t, 1e-17);
  return -0.5 * kPi * a.value() * static_cast<double>(l) * l + std::log(cplx(body.real(), 0.0)) -
         std::log(theta3<double>(0.0, t, 1e-17).real());
}

/// Max deviation from the identity of sum_{|m0|<=m_window} (1/n) sum_j
/// |m0,theta_j><m0,theta_j| over the block |m| <= M - margin.
inline double completeness_residual(const RotorSpace& space, WidthParam a, int m_window, int n,
                                    int margin = 0) {
  const Index d = space.dim();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (int m0 = -m_window; m0 <= m_window; ++m0) {
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXcd v = coherent_amplitudes(space, m0, theta_node(j, n), a);
      acc.noalias() += v * v.adjoint();
    }
  }
  acc /= static_cast<double>(n);
  const Index lo = margin, hi = d - margin;
  double worst = 0;
  for (Index r = lo; r < hi; ++r) {
    for (Index c = lo; c < hi; ++c) {
      worst = std::max(worst, std::abs(acc(r, c) - (r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace rotorphase

#endif  // ROTORPHASE_COHERENT_HPP
