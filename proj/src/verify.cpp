// Copyright 2026 The WalkForge Authors
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

#include "walkforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "walkforge/circuit_io.hpp"
#include "walkforge/error.hpp"
#include "walkforge/spectral.hpp"
#include "walkforge/synthesis.hpp"

namespace walkforge {

namespace {

Circuit run(const Synthesizer& s, const WalkExpr& e, const WalkParams& p) {
  return s ? s(e, p) : synth(e, p);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

VerificationReport verify(const WalkExpr& expr, const std::vector<double>& t_list,
                          const std::vector<double>& gamma_list, double tol,
                          const VerifyOptions& options) {
  VerificationReport report;
  report.expr = to_string(expr);
  const Graph g = graph_of(expr);
  report.dim = g.dim();
  if (g.wires() > options.max_wires) {
    throw ResourceError("verify: " + std::to_string(g.wires()) + " wires exceed the oracle cap of " +
                        std::to_string(options.max_wires));
  }
  const SpectralDecomposition oracle = eig_hermitian(g.dense());

  for (double gamma : gamma_list) {
    for (double t : t_list) {
      VerifyRow row;
      row.t = t;
      row.gamma = gamma;
      try {
        const WalkParams params(gamma, t);
        const Circuit c = run(options.synthesizer, expr, params);
        row.gates = c.size();
        row.cost2q = two_qubit_cost(c);
        const auto d = unitary_distance(unitary_of(c, options.max_wires),
                                        expm_from(oracle, params));
        row.max_dist = d.max_entrywise;
        row.spec_dist = d.spectral;
        row.pass = row.max_dist <= tol;
      } catch (const Error& e) {
        row.pass = false;
        row.max_dist = std::numeric_limits<double>::infinity();
        row.spec_dist = std::numeric_limits<double>::infinity();
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }

  std::vector<double> times = t_list;
  if (times.size() < 2) times.push_back(times.empty() ? 1.0 : 2.0 * times.front() + 1.0);
  try {
    report.structural_t_independent =
        t_independence(expr, times, options.synthesizer,
                       gamma_list.empty() ? 1.0 : gamma_list.front());
  } catch (const Error&) {
    report.structural_t_independent = false;
  }
  return report;
}

bool t_independence(const WalkExpr& expr, const std::vector<double>& t_list,
                    const Synthesizer& synthesizer, double gamma) {
  if (t_list.size() < 2) {
    throw PreconditionError("t_independence needs at least two time values");
  }
  const Circuit unit = run(synthesizer, expr, WalkParams(gamma, 1.0));
  const std::vector<double> slopes = angles(unit);
  for (double t : t_list) {
    const Circuit c = run(synthesizer, expr, WalkParams(gamma, t));
    if (!same_structure(c, unit)) return false;
    const std::vector<double> got = angles(c);
    if (got.size() != slopes.size()) return false;
    for (std::size_t k = 0; k < got.size(); ++k) {
      const double want = slopes[k] * t;
      if (std::abs(got[k] - want) > 1e-12 * std::max(1.0, std::abs(want))) return false;
    }
  }
  return true;
}

const std::vector<std::string>& scaling_families() {
  static const std::vector<std::string> names = {"hypercube", "complete", "bipartite",
                                                 "star",      "book",     "interdep_id"};
  return names;
}

WalkExpr family_expr(const std::string& family, int size) {
  if (family == "hypercube") return WalkExpr::hypercube(size);
  if (family == "complete") return WalkExpr::complete(size);
  if (family == "bipartite") return WalkExpr::bipartite(size, std::max(size - 1, 0));
  if (family == "star") return WalkExpr::star(size);
  if (family == "book") return WalkExpr::book(size);
  if (family == "interdep_id") return WalkExpr::interdep_identity(WalkExpr::complete(size));
  throw PreconditionError("unknown family '" + family + "'");
}

ScalingTable scaling(const std::string& family, const std::vector<int>& sizes,
                     const WalkParams& params, int verify_max_wires) {
  ScalingTable table;
  table.family = family;
  std::vector<double> xs, ys;
  for (int size : sizes) {
    const WalkExpr e = family_expr(family, size);
    const Circuit c = synth(e, params);
    ScalingRow row;
    row.size = size;
    row.expr = to_string(e);
    row.wires = c.wires();
    row.gates = c.size();
    row.cost2q = two_qubit_cost(c);
    if (c.wires() <= verify_max_wires) {
      row.max_dist = max_entrywise_distance(unitary_of(c), expm_graph(graph_of(e), params));
    }
    if (row.wires >= 1 && row.cost2q >= 1) {
      xs.push_back(std::log(static_cast<double>(row.wires)));
      ys.push_back(std::log(static_cast<double>(row.cost2q)));
    }
    table.rows.push_back(std::move(row));
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    table.fitted_exponent = denom == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                         : (n * sxy - sx * sy) / denom;
  } else {
    table.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return table;
}

std::vector<CommutingDemoRow> commuting_demo(const Graph& a, const Graph& b,
                                             const std::vector<double>& t_list,
                                             double gamma) {
  if (a.dim() != b.dim()) throw DimensionError("commuting_demo: dimension mismatch");
  const bool flag = commutes(a, b);
  std::vector<CommutingDemoRow> rows;
  for (double t : t_list) {
    rows.push_back({t, product_formula_gap(a, b, WalkParams(gamma, t)), flag});
  }
  return rows;
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "expr,dim,t,gamma,max_dist,spec_dist,gates,cost2q,pass\n";
  for (const auto& r : report.rows) {
    os << csv_quote(report.expr) << ',' << report.dim << ',' << format_double(r.t) << ','
       << format_double(r.gamma) << ',' << sci(r.max_dist) << ',' << sci(r.spec_dist) << ','
       << r.gates << ',' << r.cost2q << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string to_csv(const ScalingTable& table) {
  std::ostringstream os;
  os << "family,size,expr,wires,gates,cost2q,max_dist\n";
  for (const auto& r : table.rows) {
    os << table.family << ',' << r.size << ',' << csv_quote(r.expr) << ',' << r.wires << ','
       << r.gates << ',' << r.cost2q << ',' << (r.max_dist ? sci(*r.max_dist) : "") << '\n';
  }
  return os.str();
}

std::string to_csv(const std::vector<CommutingDemoRow>& rows) {
  std::ostringstream os;
  os << "t,gap,commutes\n";
  for (const auto& r : rows) {
    os << format_double(r.t) << ',' << sci(r.gap) << ',' << (r.commutes ? "true" : "false")
       << '\n';
  }
  return os.str();
}

}  // namespace walkforge
