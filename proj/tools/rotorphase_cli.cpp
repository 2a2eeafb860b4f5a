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

// rotorphase: command-line front end.
//
//   rotorphase theta eval --fn 3 --z-re 0 --z-im 0 --tau-im 0.318
//   rotorphase state make --inline '{"kind":"coherent","m0":0,"theta0":0}' --out s.json
//   rotorphase dist compute --state s.json --s-re 0 --out w.csv
//   rotorphase dist smooth --in w.csv --u-re 1 --out h.csv
//   rotorphase uncertainty scan --a 0.15915494309189535 --n 256 --out fig1b.csv
//   rotorphase verify --suite all
//
// Exit status: 0 ok, 1 failed verification, 2 bad input (error JSON on stderr).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rotorphase/io.hpp"
#include "rotorphase/rotorphase.hpp"
#include "rotorphase/verify.hpp"

namespace {

using namespace rotorphase;
namespace rio = rotorphase::io;

struct Options {
  std::string format = "csv";

  int theta_fn = 3;
  double z_re = 0, z_im = 0, tau_im = 0, theta_tol = 1e-15;

  std::string spec_file, spec_inline, out, summary;

  std::string state_file, in_file;
  double s_re = 0, s_im = 0, u_re = 1, u_im = 0;
  double a = 1.0 / kTwoPi;
  int M = -1, N = -1, l_cap = -1;
  std::string p_policy = "strict";

  int scan_n = 256;

  std::string suite = "all";
  double tol = 1e-10;
};

bool to_stdout(const std::string& path) { return path.empty() || path == "-"; }

void emit(const std::string& path, const std::string& text) {
  if (to_stdout(path)) {
    std::cout << text;
  } else {
    rio::write_text(path, text);
  }
}

std::string error_json(const std::string& kind, const std::string& message) {
  return nlohmann::json{{"error", kind}, {"message", message}}.dump();
}

// Re-embeds a state into the basis of size 2M'+1 with M' >= M.
DensityOperator embed(const DensityOperator& rho, int M) {
  const RotorSpace& from = rho.space();
  if (M < 0 || M == from.M()) return rho;
  if (M < from.M()) throw DomainError("--M " + std::to_string(M) + " is smaller than the state's M");
  const RotorSpace to(M, from.sector());
  const Index shift = to.dim() / 2 - from.dim() / 2;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(to.dim(), to.dim());
  m.block(shift, shift, from.dim(), from.dim()) = rho.matrix();
  return DensityOperator(OperatorMatrix(to, std::move(m)));
}

// The summary goes to --summary if given, else to stdout unless stdout
// already carries the distribution.
void report_summary(const Options& o, const DistributionSummary& summary) {
  const std::string text = rio::summary_to_json(summary) + "\n";
  if (!o.summary.empty()) {
    emit(o.summary, text);
  } else if (!to_stdout(o.out)) {
    std::cout << text;
  }
}

int run_theta(const Options& o) {
  const cplx z(o.z_re, o.z_im);
  cplx value;
  if (o.theta_fn == 3) {
    value = theta3<double>(z, o.tau_im, o.theta_tol);
  } else if (o.theta_fn == 2) {
    value = theta2<double>(z, o.tau_im, o.theta_tol);
  } else {
    throw DomainError("--fn must be 2 or 3");
  }
  if (o.format == "json") {
    std::cout << "{\"value\": " << rio::complex_pair(value) << "}\n";
  } else {
    std::cout << rio::fmt17(value.real()) << "," << rio::fmt17(value.imag()) << "\n";
  }
  return 0;
}

int run_state(const Options& o) {
  if (o.spec_file.empty() == o.spec_inline.empty()) throw DomainError("give exactly one of --spec or --inline");
  const std::string text = o.spec_inline.empty() ? rio::read_text(o.spec_file) : o.spec_inline;
  emit(o.out, rio::to_json(rio::build_state(rio::parse_json(text))));
  return 0;
}

int run_dist_compute(const Options& o) {
  const DensityOperator rho = embed(rio::as_density(rio::build_state(rio::parse_json(rio::read_text(o.state_file)))), o.M);
  const WidthParam a(o.a);
  const int n = o.N > 0 ? o.N : default_grid_size(rho.space().M());
  const PhaseGrid grid(n);
  const KernelTable table(a, grid.max_l(), n);
  const SParameter s(cplx(o.s_re, o.s_im));

  if (o.p_policy != "strict" && o.p_policy != "mollify") throw DomainError("--p-policy must be strict or mollify");
  const PPolicy policy = o.p_policy == "strict" ? PPolicy::strict : PPolicy::mollify;
  const Distribution f = s.value() == cplx(1.0) ? glauber_sudarshan(rho, grid, table, o.l_cap, policy)
                                                : distribution(rho, s, grid, table, o.l_cap);
  emit(o.out, o.format == "json" ? rio::distribution_to_json(f) : rio::distribution_to_csv(f));
  report_summary(o, summarize(f));
  return 0;
}

int run_dist_smooth(const Options& o) {
  const Distribution f = rio::read_distribution(o.in_file);
  const KernelTable table(f.a, f.grid.max_l(), f.grid.n);
  const Distribution g = smooth(f, SParameter(cplx(o.u_re, o.u_im)), table);
  emit(o.out, o.format == "json" ? rio::distribution_to_json(g) : rio::distribution_to_csv(g));
  report_summary(o, summarize(g));
  return 0;
}

int run_scan(const Options& o) {
  const UncertaintyScan scan = scan_delta_U(WidthParam(o.a), o.scan_n);
  emit(o.out, o.format == "json" ? rio::scan_to_json(scan) : rio::scan_to_csv(scan));
  return 0;
}

int run_verify(const Options& o) {
  const auto results = run_verification({o.suite, o.tol});
  bool ok = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.pass();
    if (o.format == "json") {
      doc.push_back({{"suite", r.suite}, {"property", r.name}, {"residual", r.residual},
                     {"threshold", r.threshold}, {"pass", r.pass()}});
    } else {
      std::printf("%-4s %-10s %-26s %.3e (<= %.1e)\n", r.pass() ? "ok" : "FAIL", r.suite.c_str(), r.name.c_str(),
                  r.residual, r.threshold);
    }
  }
  if (o.format == "json") std::cout << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Quasiprobability distributions on the angle / angular-momentum cylinder"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* theta = app.add_subcommand("theta", "Jacobi theta functions")->require_subcommand(1);
  auto* theta_eval = theta->add_subcommand("eval", "Evaluate theta_2 or theta_3 at (z | i tau_im)");
  theta_eval->add_option("--fn", o.theta_fn, "2 or 3")->check(CLI::IsMember({2, 3}));
  theta_eval->add_option("--z-re", o.z_re);
  theta_eval->add_option("--z-im", o.z_im);
  theta_eval->add_option("--tau-im", o.tau_im)->required();
  theta_eval->add_option("--tol", o.theta_tol);

  auto* state = app.add_subcommand("state", "State files")->require_subcommand(1);
  auto* state_make = state->add_subcommand("make", "Build a state from a JSON spec");
  state_make->add_option("--spec", o.spec_file, "Spec file");
  state_make->add_option("--inline", o.spec_inline, "Spec as a JSON string");
  state_make->add_option("--out", o.out, "Output file (default stdout)");

  auto* dist = app.add_subcommand("dist", "Phase-space distributions")->require_subcommand(1);
  auto* dist_compute = dist->add_subcommand("compute", "F^(s) of a state");
  dist_compute->add_option("--state", o.state_file, "State or spec JSON")->required();
  dist_compute->add_option("--s-re", o.s_re);
  dist_compute->add_option("--s-im", o.s_im);
  dist_compute->add_option("--a", o.a, "Coherent-state width");
  dist_compute->add_option("--M", o.M, "Basis truncation (default: the state's)");
  dist_compute->add_option("--N", o.N, "Grid size (default max(64, 4M+2))");
  dist_compute->add_option("--l-cap", o.l_cap, "Keep |l| <= l_cap");
  dist_compute->add_option("--p-policy", o.p_policy, "strict | mollify, for s = 1");
  dist_compute->add_option("--out", o.out, "Output file (default stdout)");
  dist_compute->add_option("--summary", o.summary, "Write the JSON summary here");

  auto* dist_smooth = dist->add_subcommand("smooth", "Smooth a distribution with K^u");
  dist_smooth->add_option("--in", o.in_file)->required();
  dist_smooth->add_option("--u-re", o.u_re);
  dist_smooth->add_option("--u-im", o.u_im);
  dist_smooth->add_option("--out", o.out, "Output file (default stdout)");
  dist_smooth->add_option("--summary", o.summary, "Write the JSON summary here");

  auto* unc = app.add_subcommand("uncertainty", "Uncertainty diagnostics")->require_subcommand(1);
  auto* scan = unc->add_subcommand("scan", "delta_U over theta for coherent states");
  scan->add_option("--a", o.a);
  scan->add_option("--n", o.scan_n)->check(CLI::PositiveNumber);
  scan->add_option("--out", o.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"all", "kernel", "hierarchy", "appendix"}));
  verify->add_option("--tol", o.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what()) << "\n";
    return 2;
  }

  try {
    if (theta_eval->parsed()) return run_theta(o);
    if (state_make->parsed()) return run_state(o);
    if (dist_compute->parsed()) return run_dist_compute(o);
    if (dist_smooth->parsed()) return run_dist_smooth(o);
    if (scan->parsed()) return run_scan(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const rotorphase::Error& e) {
    std::cerr << error_json(e.kind(), e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what()) << "\n";
    return 2;
  }
  return 2;
}
