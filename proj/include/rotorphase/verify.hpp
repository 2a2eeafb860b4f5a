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

#ifndef ROTORPHASE_VERIFY_HPP
#define ROTORPHASE_VERIFY_HPP

// Invariant battery behind `rotorphase verify`. Each property reports a
// residual and passes when residual <= factor * tol.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rotorphase/quasiprob.hpp"

namespace rotorphase {

struct PropertyResult {
  std::string suite;
  std::string name;
  double residual;
  double threshold;
  bool pass() const { return residual <= threshold; }
};

struct VerifyOptions {
  std::string suite = "all";  // all | kernel | hierarchy | appendix
  double tol = 1e-10;
  unsigned seed = 20260101;
};

namespace detail {

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline Eigen::MatrixXcd random_density(std::mt19937_64& rng, const RotorSpace& space, int levels) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  const Index lo = space.M() - levels / 2;
  for (Index r = lo; r < lo + levels; ++r) {
    for (Index c = lo; c < lo + levels; ++c) a(r, c) = cplx(g(rng), g(rng));
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace();
}

inline void verify_kernel(std::vector<PropertyResult>& out, const VerifyOptions& opt, std::mt19937_64& rng) {
  const WidthParam a = default_width();
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  auto add = [&](std::string name, double residual, double factor) {
    out.push_back({"kernel", std::move(name), residual, factor * opt.tol});
  };

  {  // theta_3 modular relation: theta_3(0|it) = theta_3(0|i/t)/sqrt(t)
    double worst = 0;
    for (double t : {0.1, 1.0 / kPi, 1.0, 3.0}) {
      worst = std::max(worst, std::abs(theta3<double>(0.0, t) - theta3<double>(0.0, 1.0 / t) / std::sqrt(t)));
    }
    add("theta_modular", worst, 1e-3);
  }
  {  // closed-form overlap against the basis sum (absolute: the double-precision
     // basis sum cancels badly where the overlap is tiny)
    const RotorSpace space(48);
    std::uniform_int_distribution<int> label(-8, 8);
    double worst = 0;
    for (double width : {1.0 / (20 * kPi), 1.0 / kTwoPi, 10.0 / kTwoPi}) {
      const WidthParam w(width);
      for (int trial = 0; trial < 20; ++trial) {
        const CoherentLabel x(label(rng), angle(rng), w), y(label(rng), angle(rng), w);
        const cplx brute = coherent_amplitudes(space, x.m0, x.theta0, w)
                               .dot(coherent_amplitudes(space, y.m0, y.theta0, w));
        const cplx closed = overlap_closed_form(x, y);
        worst = std::max(worst, std::abs(closed - brute));
      }
    }
    add("overlap_closed_form", worst, 1e-2);
  }
  {  // T^(-1)(m, theta) is the coherent projector
    const RotorSpace space(16);
    const KernelTable table(a, 32, 256);
    std::uniform_int_distribution<int> label(-6, 6);
    double worst = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const int m = label(rng);
      const double th = angle(rng);
      const Eigen::VectorXcd v = coherent_amplitudes(space, m, th, a);
      const Eigen::MatrixXcd proj = v * v.adjoint();
      worst = std::max(worst, max_abs(kernel_T(space, SParameter(-1.0), m, th, table).entries - proj));
    }
    add("central_identity", worst, 1.0);
  }
  {  // unit trace
    const RotorSpace space(40);
    const KernelTable table(a, 0, 256);
    std::uniform_int_distribution<int> label(-5, 5);
    double worst = 0;
    for (cplx s : {cplx(0), cplx(1), cplx(-1), cplx(0.5), cplx(-0.5), cplx(0.3, 0.4)}) {
      for (int trial = 0; trial < 4; ++trial) {
        worst = std::max(worst, std::abs(kernel_trace(space, s, label(rng), angle(rng), table) - 1.0));
      }
    }
    add("unit_trace", worst, 1.0);
  }
  {  // dual pair: orthogonal in m, Dirichlet kernel in theta
    const KernelTable table(a, 20, 64);
    double off = 0, dirichlet = 0;
    for (cplx s : {cplx(0), cplx(0.5), cplx(0.3, 0.4)}) {
      for (int dm = 1; dm <= 5; ++dm) off = std::max(off, std::abs(pair_trace(-s, s, dm, angle(rng), table)));
      for (int trial = 0; trial < 5; ++trial) {
        const double x = angle(rng);
        const double closed = std::sin((table.l_max() + 0.5) * x) / std::sin(0.5 * x);
        dirichlet = std::max(dirichlet, std::abs(pair_trace(-s, s, 0, x, table) - closed));
      }
    }
    add("pair_trace_orthogonal", off, 1e-2);
    add("pair_trace_dirichlet", dirichlet, 1.0);
  }
  add("completeness", completeness_residual(RotorSpace(16), a, 24, 64), 1.0);
}

inline void verify_hierarchy(std::vector<PropertyResult>& out, const VerifyOptions& opt, std::mt19937_64& rng) {
  const WidthParam a = default_width();
  const RotorSpace space(8);
  const PhaseGrid grid(64);
  const KernelTable table(a, grid.max_l(), grid.n);
  auto add = [&](std::string name, double residual, double factor) {
    out.push_back({"hierarchy", std::move(name), residual, factor * opt.tol});
  };
  double norm = 0;
  auto track = [&](const Distribution& f) {
    norm = std::max(norm, std::abs(phase_space_integral(f) - 1.0));
    return f;
  };

  const DensityOperator rho(OperatorMatrix(space, random_density(rng, space, 5)));
  const Distribution h = track(husimi(rho, a, grid));
  const Distribution w = track(wigner(rho, grid, table));
  add("husimi_routes", max_abs(h.values - distribution(rho, SParameter(-1.0), grid, table).values), 1.0);
  add("smooth_wigner_to_husimi", max_abs(smooth(w, SParameter(1.0), table).values - h.values), 100.0);

  {  // l = 0 only: the P function exists
    Eigen::VectorXcd diag(space.dim());
    for (Index i = 0; i < space.dim(); ++i) diag(i) = std::exp(-2.0 * space.label(i) * space.label(i));
    const DensityOperator thermal(OperatorMatrix(space, Eigen::MatrixXcd(diag.asDiagonal()) / diag.sum()));
    const Distribution p = track(glauber_sudarshan(thermal, grid, table));
    add("husimi_from_P", max_abs(husimi_from_P(p).values - track(husimi(thermal, a, grid)).values), 100.0);
  }
  {
    const DensityOperator coh = DensityOperator::from_pure(coherent_state(space, CoherentLabel(1, 0.7, a)));
    const Distribution p = glauber_sudarshan(coh, grid, table, -1, PPolicy::mollify);
    add("glauber_reconstruction", max_abs(reconstruct_operator(p, space, table).entries - coh.matrix()), 1e4);
  }
  {
    double delta = 0, gauss = 0;
    const double norm3 = theta3<double>(0.0, 2 * a.value()).real();
    for (int m0 : {-2, 0, 3}) {
      const DensityOperator e = DensityOperator::from_pure(PureState::eigenstate(space, m0));
      const Distribution we = track(wigner(e, grid, table));
      const Distribution he = track(husimi(e, a, grid));
      for (Index r = 0; r < grid.n; ++r) {
        const int m = grid.m_of(r);
        const double expect_w = m == m0 ? 1.0 : 0.0;
        const double expect_h = std::exp(-kTwoPi * a.value() * (m - m0) * (m - m0)) / norm3;
        for (int k = 0; k < grid.n; ++k) {
          delta = std::max(delta, std::abs(we.values(r, k) - expect_w));
          gauss = std::max(gauss, std::abs(he.values(r, k) - expect_h));
        }
      }
    }
    add("wigner_eigenstate", delta, 1.0);
    add("husimi_eigenstate", gauss, 1.0);
  }
  {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
    v(*space.index_of(0)) = 1.0;
    v(*space.index_of(2)) = 1.0;
    const Distribution ws = track(wigner(DensityOperator::from_pure(PureState(space, v)), grid, table));
    out.push_back({"hierarchy", "wigner_negativity", ws.values.real().minCoeff(), -1e-3});
  }
  add("normalization", norm, 10.0);
}

inline void verify_appendix(std::vector<PropertyResult>& out, const VerifyOptions& opt, std::mt19937_64& rng) {
  const RotorSpace space(12);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  auto add = [&](std::string name, double residual, double factor) {
    out.push_back({"appendix", std::move(name), residual, factor * opt.tol});
  };
  {  // exp(i th J) exp(i m Th) = exp(i m th) exp(i m Th) exp(i th J)
    double worst = 0;
    for (int m = -3; m <= 3; ++m) {
      const double th = angle(rng);
      const OperatorMatrix rot = rotation_op(space, -th);
      const OperatorMatrix shift = shift_op(space, m);
      const Eigen::MatrixXcd lhs = (rot * shift).entries;
      const Eigen::MatrixXcd rhs = std::exp(kI * static_cast<double>(m) * th) * (shift * rot).entries;
      worst = std::max(worst, max_abs(lhs - rhs));
    }
    add("weyl_relation", worst, 1e-2);
  }
  add("J_derivative", derivative_check(vacuum(space, default_width()), 64), 100.0);
  add("angle_completeness", angle_completeness_residual(space, 64), 1e-2);
  {
    const RotorSpace fermions(12, Sector::fermion);
    const Eigen::MatrixXcd r = rotation_op(fermions, kTwoPi).entries;
    add("fermion_rotation", max_abs(r + Eigen::MatrixXcd::Identity(r.rows(), r.cols())), 1e-2);
  }
}

}  // namespace detail

inline std::vector<PropertyResult> run_verification(const VerifyOptions& opt = {}) {
  if (!(opt.tol > 0)) throw DomainError("verify: tol must be positive");
  const std::string& s = opt.suite;
  if (s != "all" && s != "kernel" && s != "hierarchy" && s != "appendix") {
    throw DomainError("verify: unknown suite '" + s + "'");
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<PropertyResult> out;
  if (s == "all" || s == "kernel") detail::verify_kernel(out, opt, rng);
  if (s == "all" || s == "hierarchy") detail::verify_hierarchy(out, opt, rng);
  if (s == "all" || s == "appendix") detail::verify_appendix(out, opt, rng);
  return out;
}

}  // namespace rotorphase

#endif  // ROTORPHASE_VERIFY_HPP
