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

#ifndef ROTORPHASE_IO_HPP
#define ROTORPHASE_IO_HPP

// File formats: state / density JSON, state specs, distribution CSV.
// Numbers are written with 17 significant digits so files round-trip exactly.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rotorphase/quasiprob.hpp"
#include "rotorphase/uncertainty.hpp"

namespace rotorphase::io {

using nlohmann::json;

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string complex_pair(cplx z) { return "[" + fmt17(z.real()) + ", " + fmt17(z.imag()) + "]"; }

inline Sector parse_sector(const std::string& name) {
  if (name == "boson") return Sector::boson;
  if (name == "fermion") return Sector::fermion;
  throw DomainError("unknown sector '" + name + "'");
}

inline cplx parse_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw DomainError("expected a number or a [re, im] pair, got " + v.dump());
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

// ---- states ---------------------------------------------------------------

/// {"sector": ..., "M": ..., "amplitudes": [[re, im], ...]} from the lowest label up.
inline std::string state_to_json(const PureState& state) {
  std::string out = "{\"sector\": \"" + std::string(to_string(state.space().sector())) +
                    "\", \"M\": " + std::to_string(state.space().M()) + ", \"amplitudes\": [";
  for (Index i = 0; i < state.space().dim(); ++i) {
    if (i) out += ", ";
    out += complex_pair(state.amplitudes()(i));
  }
  return out + "]}\n";
}

/// Same header with "density": rows of [re, im] pairs.
inline std::string density_to_json(const DensityOperator& rho) {
  std::string out = "{\"sector\": \"" + std::string(to_string(rho.space().sector())) +
                    "\", \"M\": " + std::to_string(rho.space().M()) + ", \"density\": [";
  const Eigen::MatrixXcd& m = rho.matrix();
  for (Index r = 0; r < m.rows(); ++r) {
    out += r ? ",\n  [" : "\n  [";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += complex_pair(m(r, c));
    }
    out += "]";
  }
  return out + "]}\n";
}

using StateValue = std::variant<PureState, DensityOperator>;

inline DensityOperator as_density(const StateValue& v) {
  if (const auto* pure = std::get_if<PureState>(&v)) return DensityOperator::from_pure(*pure);
  return std::get<DensityOperator>(v);
}

inline std::string to_json(const StateValue& v) {
  if (const auto* pure = std::get_if<PureState>(&v)) return state_to_json(*pure);
  return density_to_json(std::get<DensityOperator>(v));
}

namespace detail {

inline const json& field(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key)) throw DomainError(std::string("state spec: missing '") + key + "'");
  return spec.at(key);
}

template <typename T>
T get(const json& spec, const char* key) {
  try {
    return field(spec, key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(std::string("state spec: field '") + key + "' has the wrong type");
  }
}

inline RotorSpace space_of(const json& spec, int fallback_M = -1) {
  const Sector sector = spec.contains("sector") ? parse_sector(get<std::string>(spec, "sector")) : Sector::boson;
  const int M = spec.contains("M") ? get<int>(spec, "M") : fallback_M;
  if (M < 1) throw DomainError("state spec: 'M' must be a positive integer");
  return RotorSpace(M, sector);
}

inline WidthParam width_of(const json& spec) {
  return spec.contains("a") ? WidthParam(get<double>(spec, "a")) : default_width();
}

}  // namespace detail

/// Builds a state from a spec. Accepted kinds:
///   coherent      {"m0", "theta0", "a"?, "M"?}
///   eigenstate    {"m", "M", "sector"?}
///   superposition {"M", "terms": [{"m", "amp"}]}
///   mixture       {"M", "components": [{"weight", "state": spec}]}
///   density       {"M", "density": rows of [re, im]}
/// A spec without "kind" but with "amplitudes" or "density" is a saved state.
inline StateValue build_state(const json& spec) {
  using detail::get;
  std::string kind;
  if (spec.is_object() && spec.contains("kind")) {
    kind = get<std::string>(spec, "kind");
  } else if (spec.is_object() && spec.contains("amplitudes")) {
    kind = "amplitudes";
  } else if (spec.is_object() && spec.contains("density")) {
    kind = "density";
  } else {
    throw DomainError("state spec: cannot tell the kind of " + spec.dump());
  }

  if (kind == "coherent") {
    const WidthParam a = detail::width_of(spec);
    const CoherentLabel label(get<int>(spec, "m0"), get<double>(spec, "theta0"), a);
    const int M = spec.contains("M") ? get<int>(spec, "M") : default_truncation(a) + std::abs(label.m0);
    return coherent_state(RotorSpace(M), label);
  }
  if (kind == "eigenstate") {
    const RotorSpace space = detail::space_of(spec);
    return PureState::eigenstate(space, get<double>(spec, "m"));
  }
  if (kind == "superposition") {
    const RotorSpace space = detail::space_of(spec);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(space.dim());
    for (const json& term : detail::field(spec, "terms")) {
      const auto at = space.index_of(get<double>(term, "m"));
      if (!at) throw DomainError("state spec: label outside the basis");
      amps(*at) += parse_complex(detail::field(term, "amp"));
    }
    return PureState(space, std::move(amps));
  }
  if (kind == "amplitudes") {
    const RotorSpace space = detail::space_of(spec);
    const json& list = detail::field(spec, "amplitudes");
    if (!list.is_array() || static_cast<Index>(list.size()) != space.dim()) {
      throw DomainError("state spec: expected " + std::to_string(space.dim()) + " amplitudes");
    }
    Eigen::VectorXcd amps(space.dim());
    for (Index i = 0; i < space.dim(); ++i) amps(i) = parse_complex(list[static_cast<std::size_t>(i)]);
    return PureState(space, std::move(amps), std::numeric_limits<double>::infinity());
  }
  if (kind == "mixture") {
    std::vector<std::pair<double, PureState>> parts;
    for (const json& c : detail::field(spec, "components")) {
      json inner = detail::field(c, "state");
      if (spec.contains("M") && !inner.contains("M")) inner["M"] = spec.at("M");
      const StateValue v = build_state(inner);
      const auto* pure = std::get_if<PureState>(&v);
      if (!pure) throw DomainError("state spec: mixture components must be pure");
      parts.emplace_back(get<double>(c, "weight"), *pure);
    }
    if (parts.empty()) throw DomainError("state spec: empty mixture");
    return DensityOperator::mixture(parts);
  }
  if (kind == "density") {
    const RotorSpace space = detail::space_of(spec);
    const json& rows = detail::field(spec, "density");
    const Index d = space.dim();
    if (!rows.is_array() || static_cast<Index>(rows.size()) != d) throw DomainError("state spec: density shape");
    Eigen::MatrixXcd m(d, d);
    for (Index r = 0; r < d; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != d) throw DomainError("state spec: density shape");
      for (Index c = 0; c < d; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
    }
    return DensityOperator(OperatorMatrix(space, std::move(m)));
  }
  throw DomainError("state spec: unknown kind '" + kind + "'");
}

// ---- distributions --------------------------------------------------------

inline std::string distribution_to_csv(const Distribution& f) {
  const PhaseGrid& g = f.grid;
  std::string out = "# s_re=" + fmt17(f.s.value().real()) + " s_im=" + fmt17(f.s.value().imag()) +
                    " a=" + fmt17(f.a.value()) + " M=" + std::to_string(f.M) + " N=" + std::to_string(g.n) + "\n";
  out += "# m_min=" + std::to_string(g.m_min) + " tail_ratio=" + fmt17(f.diagnostics.tail_ratio) +
         " l_extent=" + std::to_string(f.diagnostics.l_extent) +
         " mollified=" + (f.diagnostics.mollified ? "1" : "0") + " alpha_grid=half_offset\n";
  out += "m,theta,re,im\n";
  for (Index r = 0; r < g.n; ++r) {
    for (int k = 0; k < g.n; ++k) {
      out += std::to_string(g.m_of(r)) + "," + fmt17(g.theta(k)) + "," + fmt17(f.values(r, k).real()) + "," +
             fmt17(f.values(r, k).imag()) + "\n";
    }
  }
  return out;
}

inline std::string distribution_to_json(const Distribution& f) {
  const PhaseGrid& g = f.grid;
  std::string out = "{\"s\": " + complex_pair(f.s.value()) + ", \"a\": " + fmt17(f.a.value()) +
                    ", \"M\": " + std::to_string(f.M) + ", \"N\": " + std::to_string(g.n) +
                    ", \"m_min\": " + std::to_string(g.m_min) +
                    ", \"tail_ratio\": " + fmt17(f.diagnostics.tail_ratio) +
                    ", \"l_extent\": " + std::to_string(f.diagnostics.l_extent) +
                    ", \"mollified\": " + (f.diagnostics.mollified ? "true" : "false") + ", \"values\": [";
  for (Index r = 0; r < g.n; ++r) {
    out += r ? ",\n  [" : "\n  [";
    for (int k = 0; k < g.n; ++k) {
      if (k) out += ", ";
      out += complex_pair(f.values(r, k));
    }
    out += "]";
  }
  return out + "]}\n";
}

namespace detail {

inline std::map<std::string, std::string> header_fields(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream ss(line.substr(1));
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos) out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

inline double to_double(const std::map<std::string, std::string>& h, const std::string& key) {
  const auto it = h.find(key);
  if (it == h.end()) throw DomainError("distribution file: header lacks '" + key + "'");
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw DomainError("distribution file: bad value for '" + key + "'");
  }
}

}  // namespace detail

inline Distribution distribution_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::string> header;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      header.merge(detail::header_fields(line));
    } else if (line.rfind("m,theta", 0) != 0) {
      rows.push_back(line);
    }
  }
  const int n = static_cast<int>(detail::to_double(header, "N"));
  const int m_min = header.count("m_min") ? static_cast<int>(detail::to_double(header, "m_min")) : -n / 2;
  const PhaseGrid grid(n, m_min);
  if (static_cast<long>(rows.size()) != static_cast<long>(n) * n) {
    throw DomainError("distribution file: expected " + std::to_string(n * n) + " rows, found " +
                      std::to_string(rows.size()));
  }
  Eigen::MatrixXcd values(n, n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double m = 0, theta = 0, re = 0, im = 0;
    if (std::sscanf(rows[i].c_str(), "%lf,%lf,%lf,%lf", &m, &theta, &re, &im) != 4) {
      throw DomainError("distribution file: malformed row '" + rows[i] + "'");
    }
    const auto r = grid.row_of(static_cast<int>(std::lround(m)));
    const int k = static_cast<int>(std::lround((theta + kPi) * n / kTwoPi));
    if (!r || k < 0 || k >= n) throw DomainError("distribution file: row off the grid '" + rows[i] + "'");
    values(*r, k) = {re, im};
  }
  Distribution f{cplx(detail::to_double(header, "s_re"), detail::to_double(header, "s_im")), grid,
                 WidthParam(detail::to_double(header, "a")), static_cast<int>(detail::to_double(header, "M")),
                 std::move(values)};
  if (header.count("tail_ratio")) f.diagnostics.tail_ratio = detail::to_double(header, "tail_ratio");
  if (header.count("l_extent")) f.diagnostics.l_extent = static_cast<int>(detail::to_double(header, "l_extent"));
  if (header.count("mollified")) f.diagnostics.mollified = header["mollified"] == "1";
  return f;
}

inline Distribution distribution_from_json(const json& doc) {
  using detail::get;
  const int n = get<int>(doc, "N");
  const PhaseGrid grid(n, doc.contains("m_min") ? get<int>(doc, "m_min") : -n / 2);
  const json& rows = detail::field(doc, "values");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw DomainError("distribution file: values shape");
  Eigen::MatrixXcd values(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw DomainError("distribution file: values shape");
    for (int k = 0; k < n; ++k) values(r, k) = parse_complex(row[static_cast<std::size_t>(k)]);
  }
  Distribution f{parse_complex(detail::field(doc, "s")), grid, WidthParam(get<double>(doc, "a")), get<int>(doc, "M"),
                 std::move(values)};
  if (doc.contains("tail_ratio")) f.diagnostics.tail_ratio = get<double>(doc, "tail_ratio");
  if (doc.contains("l_extent")) f.diagnostics.l_extent = get<int>(doc, "l_extent");
  if (doc.contains("mollified")) f.diagnostics.mollified = get<bool>(doc, "mollified");
  return f;
}

/// Reads either format; JSON is recognised by a leading '{'.
inline Distribution read_distribution(const std::string& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return distribution_from_json(parse_json(text));
  return distribution_from_csv(text);
}

inline std::string summary_to_json(const DistributionSummary& s) {
  return "{\"normalization\": " + fmt17(s.normalization) + ", \"min\": " + fmt17(s.min) + ", \"max\": " +
         fmt17(s.max) + ", \"negativity_volume\": " + fmt17(s.negativity_volume) +
         ", \"tail_ratio\": " + fmt17(s.tail_ratio) + "}";
}

inline std::string scan_to_csv(const UncertaintyScan& scan) {
  std::string out = "# a=" + fmt17(scan.a.value()) + "  M=" + std::to_string(scan.M) + "\n";
  for (std::size_t k = 0; k < scan.theta.size(); ++k) out += fmt17(scan.theta[k]) + "," + fmt17(scan.delta_U[k]) + "\n";
  return out;
}

inline std::string scan_to_json(const UncertaintyScan& scan) {
  std::string out = "{\"a\": " + fmt17(scan.a.value()) + ", \"M\": " + std::to_string(scan.M) + ", \"rows\": [";
  for (std::size_t k = 0; k < scan.theta.size(); ++k) {
    out += (k ? ", [" : "[") + fmt17(scan.theta[k]) + ", " + fmt17(scan.delta_U[k]) + "]";
  }
  return out + "]}\n";
}

}  // namespace rotorphase::io

#endif  // ROTORPHASE_IO_HPP
