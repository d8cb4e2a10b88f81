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

// Conformance campaigns: circuit vs oracle over (t, gamma) grids, structural
// t-independence audits, gate-count scaling and product-formula contrasts.
//
// "Exact" here means no method error: distances sit at floating-point noise,
// several orders of magnitude under the default tolerance of 1e-9.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "walkforge/circuit.hpp"
#include "walkforge/expr.hpp"
#include "walkforge/graph.hpp"

namespace walkforge {

using Synthesizer = std::function<Circuit(const WalkExpr&, const WalkParams&)>;

struct VerifyRow {
  double t = 0.0;
  double gamma = 1.0;
  double max_dist = 0.0;
  double spec_dist = 0.0;
  std::size_t gates = 0;
  std::size_t cost2q = 0;
  bool pass = false;
  std::string error;  // non-empty when synthesis or simulation failed
};

struct VerificationReport {
  std::string expr;
  std::size_t dim = 0;
  std::vector<VerifyRow> rows;
  bool structural_t_independent = false;

  bool all_pass() const;
};

struct VerifyOptions {
  int max_wires = 12;        // oracle / unitary cap
  Synthesizer synthesizer;   // defaults to synth()
};

VerificationReport verify(const WalkExpr& expr, const std::vector<double>& t_list,
                          const std::vector<double>& gamma_list, double tol = 1e-9,
                          const VerifyOptions& options = {});

/// True iff every t yields the same gate structure and every angle equals
/// its t = 1 value times t. Requires at least two times.
bool t_independence(const WalkExpr& expr, const std::vector<double>& t_list,
                    const Synthesizer& synthesizer = {}, double gamma = 1.0);

struct ScalingRow {
  int size = 0;
  std::string expr;
  int wires = 0;
  std::size_t gates = 0;
  std::size_t cost2q = 0;
  std::optional<double> max_dist;  // filled where the oracle is in reach
};

struct ScalingTable {
  std::string family;
  std::vector<ScalingRow> rows;
  /// Least-squares slope of log(cost2q) against log(wires).
  double fitted_exponent = 0.0;
};

/// Families: hypercube(n), complete(m), bipartite(m, m-1), star(m), book(m),
/// interdep_id(complete(m)).
WalkExpr family_expr(const std::string& family, int size);
const std::vector<std::string>& scaling_families();

ScalingTable scaling(const std::string& family, const std::vector<int>& sizes,
                     const WalkParams& params, int verify_max_wires = 10);

struct CommutingDemoRow {
  double t = 0.0;
  double gap = 0.0;
  bool commutes = false;
};

std::vector<CommutingDemoRow> commuting_demo(const Graph& a, const Graph& b,
                                             const std::vector<double>& t_list,
                                             double gamma = 1.0);

/// Header: expr,dim,t,gamma,max_dist,spec_dist,gates,cost2q,pass
std::string to_csv(const VerificationReport& report);
std::string to_csv(const ScalingTable& table);
std::string to_csv(const std::vector<CommutingDemoRow>& rows);

}  // namespace walkforge
