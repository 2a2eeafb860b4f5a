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

#ifndef ROTORPHASE_THETA_HPP
#define ROTORPHASE_THETA_HPP

// Jacobi theta functions theta_2 and theta_3 for purely imaginary nome
// parameter tau = i*tau_im, using the convention
//
//   theta_3(z|tau) = sum_l exp(i pi tau l^2) exp(2 i l z)
//   theta_2(z|tau) = sum_l exp(i pi tau (l+1/2)^2) exp(2 i (l+1/2) z)
//
// Evaluation is by direct summation with a certified Gaussian tail bound.
// For tau_im < 1 the sum is taken after the imaginary transformation
// tau -> -1/tau, which avoids cancellation where the value is small.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "rotorphase/errors.hpp"

namespace rotorphase {

/// Arguments of a theta function: complex z and tau = i*tau_im.
struct ThetaArg {
  std::complex<double> z;
  double tau_im;
};

namespace detail {

// Upper bound on sum_{n in Z+offset, |n| > L+offset} exp(-pi t n^2 + 2|n| y),
// valid once the terms are past their peak and decay geometrically.
template <typename Real>
Real theta_tail_bound(Real t, Real y, int order, Real offset) {
  const Real pi = std::numbers::pi_v<Real>;
  const Real n0 = static_cast<Real>(order + 1) + offset;
  const Real log_ratio = -pi * t * (2 * n0 + 1) + 2 * y;
  if (log_ratio >= 0 || n0 < y / (pi * t)) {
    return std::numeric_limits<Real>::infinity();
  }
  const Real lead = std::exp(-pi * t * n0 * n0 + 2 * n0 * y);
  return 2 * lead / (1 - std::exp(log_ratio));
}

template <typename Real>
int theta_series_order(Real t, Real y, Real tol, Real offset) {
  int order = 0;
  while (theta_tail_bound<Real>(t, y, order, offset) >= tol) {
    ++order;
  }
  return order;
}

template <typename Real>
void check_theta_arg(const std::complex<Real>& z, Real tau_im, Real tol) {
  if (!(tau_im > 0)) {
    throw DomainError("theta: tau_im must be positive, got " + std::to_string(tau_im));
  }
  if (!(tol > 0) || tol > Real(1e-6)) {
    throw DomainError("theta: tol must lie in (0, 1e-6]");
  }
  const Real cap = std::min<Real>(50 * tau_im, std::sqrt(600 * std::numbers::pi_v<Real> * tau_im));
  if (std::abs(z.imag()) > cap) {
    throw OverflowRiskError("theta: |Im z| = " + std::to_string(static_cast<double>(std::abs(z.imag()))) +
                            " exceeds cap " + std::to_string(static_cast<double>(cap)));
  }
}

// Sums exp(-pi t n^2) exp(2 i n z) over n = k + offset with n in
// [-(order+offset), order+offset], smallest |n| last. `alternating` weights
// integer n by (-1)^n (theta_4).
template <typename Real>
std::complex<Real> theta_series(const std::complex<Real>& z, Real t, int order, Real offset,
                                bool alternating = false) {
  const Real pi = std::numbers::pi_v<Real>;
  auto term = [&](Real n) {
    return std::exp(std::complex<Real>(-pi * t * n * n - 2 * n * z.imag(), 2 * n * z.real()));
  };
  std::complex<Real> sum{0, 0};
  for (int k = order; k >= 0; --k) {
    const Real n = static_cast<Real>(k) + offset;
    const Real sign = (alternating && k % 2 == 1) ? Real(-1) : Real(1);
    if (offset == 0 && k == 0) {
      sum += term(0);
    } else {
      // For offset 1/2 the pair is (k+1/2, -(k+1/2)) = indices k and -k-1.
      sum += sign * (term(n) + term(-n));
    }
  }
  return sum;
}

// theta_3 (half = false) or theta_2 (half = true). Below tau_im = 1 uses
//   theta_3(z|it) = t^(-1/2) exp(-z^2/(pi t)) theta_3(-iz/t | i/t)
//   theta_2(z|it) = t^(-1/2) exp(-z^2/(pi t)) theta_4(-iz/t | i/t)
// after reducing Re z into [-pi/2, pi/2].
template <typename Real>
std::complex<Real> theta_eval(const std::complex<Real>& z, Real t, Real tol, bool half) {
  const Real pi = std::numbers::pi_v<Real>;
  const Real offset = half ? Real(1) / 2 : Real(0);
  if (t >= 1 || t < pi / 2400) {
    return theta_series<Real>(z, t, theta_series_order<Real>(t, std::abs(z.imag()), tol, offset), offset);
  }
  const Real turns = std::round(z.real() / pi);
  const std::complex<Real> w(z.real() - turns * pi, z.imag());
  const bool flip = half && std::fmod(std::abs(turns), Real(2)) == 1;
  const std::complex<Real> dual(w.imag() / t, -w.real() / t);
  const std::complex<Real> prefactor = std::exp(-w * w / (pi * t)) / std::sqrt(t);
  const Real scale = std::max<Real>(1, std::abs(prefactor));
  const int order = theta_series_order<Real>(1 / t, std::abs(dual.imag()), tol / scale, 0);
  const std::complex<Real> value = prefactor * theta_series<Real>(dual, 1 / t, order, 0, half);
  return flip ? -value : value;
}

}  // namespace detail

/// Smallest L with sum_{|l|>L} exp(-pi tau_im l^2) < tol.
inline int truncation_order(double tau_im, double tol) {
  if (!(tau_im > 0) || !(tol > 0)) {
    throw DomainError("truncation_order: inputs must be positive");
  }
  return detail::theta_series_order<double>(tau_im, 0.0, tol, 0.0);
}

/// theta_3(z | i tau_im), absolute error below tol (relative to max(1, prefactor) in the dual form).
template <typename Real = double>
std::complex<Real> theta3(const std::complex<Real>& z, Real tau_im, Real tol = Real(1e-15)) {
  detail::check_theta_arg(z, tau_im, tol);
  return detail::theta_eval<Real>(z, tau_im, tol, false);
}

/// theta_2(z | i tau_im), absolute error below tol.
template <typename Real = double>
std::complex<Real> theta2(const std::complex<Real>& z, Real tau_im, Real tol = Real(1e-15)) {
  detail::check_theta_arg(z, tau_im, tol);
  return detail::theta_eval<Real>(z, tau_im, tol, true);
}

/// Double-precision shorthands; real z converts implicitly.
inline std::complex<double> theta3(std::complex<double> z, double tau_im, double tol = 1e-15) {
  return theta3<double>(z, tau_im, tol);
}

inline std::complex<double> theta2(std::complex<double> z, double tau_im, double tol = 1e-15) {
  return theta2<double>(z, tau_im, tol);
}

inline std::complex<double> theta3(const ThetaArg& arg, double tol = 1e-15) {
  return theta3<double>(arg.z, arg.tau_im, tol);
}

inline std::complex<double> theta2(const ThetaArg& arg, double tol = 1e-15) {
  return theta2<double>(arg.z, arg.tau_im, tol);
}

}  // namespace rotorphase

#endif  // ROTORPHASE_THETA_HPP
