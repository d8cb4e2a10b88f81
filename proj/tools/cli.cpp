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

#include "walkforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "walkforge/circuit_io.hpp"
#include "walkforge/config.hpp"
#include "walkforge/spectral.hpp"
#include "walkforge/synthesis.hpp"
#include "walkforge/verify.hpp"

namespace walkforge::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::Precondition: return kPrecondition;
    case ErrorKind::DegreeMismatch: return kDegreeMismatch;
    case ErrorKind::NotCommuting: return kNotCommuting;
    case ErrorKind::Embedding:
    case ErrorKind::Dimension: return kEmbedding;
    case ErrorKind::Resource: return kResource;
    case ErrorKind::Convergence: return kConvergence;
    case ErrorKind::Io: return kIo;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

double strict_double(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw ParseError(0, {"decimal number", "<number>pi"}, whole);
  }
  return v;
}

}  // namespace

double parse_real(const std::string& text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    std::string coeff = trim(s.substr(0, s.size() - 2));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    double k = 1.0;
    if (coeff == "-") {
      k = -1.0;
    } else if (coeff == "+") {
      k = 1.0;
    } else if (!coeff.empty()) {
      k = strict_double(coeff, text);
    }
    return k * std::numbers::pi;
  }
  return strict_double(s, text);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw ParseError(0, {"decimal number"}, text);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError(0, {"integer"}, text);
    return v;
  };
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(trim(item.substr(0, dots)));
    const int hi = to_int(trim(item.substr(dots + 2)));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParseError(0, {"integer"}, text);
  return out;
}

int default_wire_cap() {
  if (const char* env = std::getenv("WALKFORGE_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
  }
  return default_limits().max_unitary_wires;
}

namespace {

constexpr const char* kFooter =
    "Exit codes: 0 ok, 1 verification failed, 2 usage or syntax error,\n"
    "3 precondition violated, 4 unequal degrees for interdep_complete,\n"
    "5 non-commuting sum, 6 embedding/dimension mismatch, 7 size cap exceeded,\n"
    "8 eigensolver did not converge, 9 I/O error, 10 internal error.\n"
    "Times accept multiples of pi, e.g. --t 0,0.5pi,pi. WALKFORGE_CAP sets the\n"
    "default wire cap for unitary extraction.";

struct Options {
  std::string expr;
  std::string family;
  std::string t = "1.0";
  std::string gamma = "1.0";
  std::string sizes = "1..6";
  double tol = default_tolerances().verification;
  std::string format;
  std::string out;
  std::size_t init = 0;
  int cap = 0;
  bool wrap_angles = false;
};

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + o.out + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + o.out + "'");
}

double wrap(double a) {
  double r = std::remainder(a, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

WalkExpr parse_checked(const std::string& text) {
  WalkExpr e = parse_expr(text);
  validate(e);
  return e;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) return;
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw ParseError(0, {allowed.begin(), allowed.end()}, o.format);
}

int cmd_synth(const Options& o, std::ostream& out) {
  require_format(o, {"json", "qasm"});
  const WalkExpr e = parse_checked(o.expr);
  const auto ts = parse_real_list(o.t);
  const auto gs = parse_real_list(o.gamma);
  if (ts.size() != 1 || gs.size() != 1) {
    throw ParseError(0, {"a single --t and --gamma value"}, o.t + " / " + o.gamma);
  }
  Circuit c = synth(e, WalkParams(gs.front(), ts.front()));
  if (o.wrap_angles) {
    std::vector<Gate> gates = c.gates();
    for (auto& g : gates) {
      if (g.kind == GateKind::Phase2 || g.kind == GateKind::GlobalPhase) {
        g.theta1 = wrap(g.theta1);
        if (g.kind == GateKind::Phase2) g.theta2 = wrap(g.theta2);
      }
    }
    c = Circuit(c.wires(), std::move(gates));
  }
  emit(o.format == "qasm" ? to_qasm(c) : to_json(c) + "\n", o, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"csv"});
  const WalkExpr e = parse_checked(o.expr);
  VerifyOptions vo;
  vo.max_wires = o.cap;
  const auto report = verify(e, parse_real_list(o.t), parse_real_list(o.gamma), o.tol, vo);
  emit(to_csv(report), o, out);
  for (const auto& r : report.rows) {
    if (!r.error.empty()) err << "t=" << r.t << " gamma=" << r.gamma << ": " << r.error << "\n";
  }
  if (!report.structural_t_independent) {
    err << "warning: gate structure varies with t\n";
  }
  return report.all_pass() && report.structural_t_independent ? kOk : kVerificationFailed;
}

int cmd_scaling(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"csv"});
  const auto ts = parse_real_list(o.t);
  const auto gs = parse_real_list(o.gamma);
  const auto table = scaling(o.family, parse_int_list(o.sizes),
                             WalkParams(gs.front(), ts.front()), std::min(o.cap, 10));
  emit(to_csv(table), o, out);
  err << "fitted exponent (log cost2q vs log wires): " << table.fitted_exponent << "\n";
  return kOk;
}

int cmd_evolve(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"csv"});
  const WalkExpr e = parse_checked(o.expr);
  const Graph g = graph_of(e);
  if (g.wires() > o.cap) {
    throw ResourceError("evolve: " + std::to_string(g.wires()) + " wires exceed the cap of " +
                        std::to_string(o.cap));
  }
  if (o.init >= g.dim()) throw DimensionError("evolve: --init is outside the vertex space");
  if (!g.active(o.init)) throw PreconditionError("evolve: --init names a padding vertex");
  const auto oracle = eig_hermitian(g.dense());
  const auto gamma = parse_real_list(o.gamma).front();
  const StateVector psi0 = StateVector::basis(g.dim(), o.init);

  std::ostringstream csv;
  csv << "t,vertex,p_circuit,p_oracle\n";
  double worst = 0.0;
  for (double t : parse_real_list(o.t)) {
    const WalkParams params(gamma, t);
    const Eigen::VectorXd pc = apply_to_state(synth(e, params), psi0).probabilities();
    const Eigen::VectorXd po = evolve_from(oracle, params, psi0).probabilities();
    for (std::size_t v = 0; v < g.dim(); ++v) {
      if (!g.active(v)) continue;
      const auto i = static_cast<Eigen::Index>(v);
      worst = std::max(worst, std::abs(pc(i) - po(i)));
      csv << format_double(t) << ',' << v << ',' << format_double(pc(i)) << ','
          << format_double(po(i)) << '\n';
    }
  }
  emit(csv.str(), o, out);
  err << "max probability deviation: " << worst << "\n";
  return kOk;
}

int cmd_export_graph(const Options& o, std::ostream& out) {
  require_format(o, {"dot", "json"});
  const WalkExpr e = parse_checked(o.expr);
  if (o.format == "json") {
    emit(to_json(graph_of(e)) + "\n", o, out);
  } else if (const auto pair = interlink_of(e)) {
    emit(to_dot(*pair), o, out);
  } else {
    emit(to_dot(graph_of(e)), o, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"walkforge: exact, t-independent circuits for continuous-time quantum walks"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);
  Options o;
  o.cap = default_wire_cap();

  auto add_common = [&](CLI::App* sub, bool with_expr) {
    if (with_expr) sub->add_option("expr", o.expr, "walk expression, e.g. 'book(3)'")->required();
    sub->add_option("--out", o.out, "output path (default: stdout)");
    sub->add_option("--format", o.format, "output format");
    sub->add_option("--cap", o.cap, "wire cap for unitary extraction and the oracle");
  };

  auto* synth_cmd = app.add_subcommand("synth", "emit the circuit for exp(-i t gamma A)");
  add_common(synth_cmd, true);
  synth_cmd->add_option("--t", o.t, "evolution time");
  synth_cmd->add_option("--gamma", o.gamma, "hopping rate");
  synth_cmd->add_flag("--wrap-angles", o.wrap_angles, "reduce exported angles into (-pi, pi]");

  auto* verify_cmd = app.add_subcommand("verify", "compare circuit and oracle over a grid (CSV)");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--t", o.t, "comma-separated times");
  verify_cmd->add_option("--gamma", o.gamma, "comma-separated hopping rates");
  verify_cmd->add_option("--tol", o.tol, "max entrywise distance tolerance");

  auto* scaling_cmd = app.add_subcommand("scaling", "gate counts against size (CSV)");
  add_common(scaling_cmd, false);
  scaling_cmd->add_option("family", o.family, "hypercube|complete|bipartite|star|book|interdep_id")
      ->required();
  scaling_cmd->add_option("--sizes", o.sizes, "sizes, e.g. 1..10 or 2,4,6");
  scaling_cmd->add_option("--t", o.t, "evolution time");
  scaling_cmd->add_option("--gamma", o.gamma, "hopping rate");

  auto* evolve_cmd = app.add_subcommand("evolve", "basis-state probabilities, circuit vs oracle (CSV)");
  add_common(evolve_cmd, true);
  evolve_cmd->add_option("--t", o.t, "comma-separated times");
  evolve_cmd->add_option("--gamma", o.gamma, "hopping rate");
  evolve_cmd->add_option("--init", o.init, "initial vertex index");

  auto* graph_cmd = app.add_subcommand("export-graph", "write the graph as DOT or JSON");
  add_common(graph_cmd, true);

  std::vector<const char*> argv;
  argv.push_back("walkforge");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*synth_cmd) return cmd_synth(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*scaling_cmd) return cmd_scaling(o, out, err);
    if (*evolve_cmd) return cmd_evolve(o, out, err);
    if (*graph_cmd) return cmd_export_graph(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace walkforge::cli
