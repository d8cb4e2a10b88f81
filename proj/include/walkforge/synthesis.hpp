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

// Compiles walk expressions into circuits for exp(-i t gamma A).
//
// Every rule is exact: a fixed basis-change circuit conjugates a diagonal
// whose phases are -gamma * t * lambda, so only angle values depend on t and
// the gate structure never does. Angles are stored unreduced.

#pragma once

#include <optional>
#include <vector>

#include "walkforge/circuit.hpp"
#include "walkforge/expr.hpp"
#include "walkforge/graph.hpp"

namespace walkforge {

enum class Bit { Zero, One, Free };

struct PhasePattern {
  std::vector<Bit> bits;  // one constraint per wire
  double eigenvalue = 0.0;
};

/// Sparse diagonal: listed patterns carry an eigenvalue, everything else 0.
class DiagonalPhaseSpec {
 public:
  /// Throws PreconditionError when two patterns overlap.
  DiagonalPhaseSpec(int wires, std::vector<PhasePattern> patterns);

  int wires() const { return wires_; }
  const std::vector<PhasePattern>& patterns() const { return patterns_; }

 private:
  int wires_;
  std::vector<PhasePattern> patterns_;
};

/// The walk phase -gamma * t * lambda.
double walk_angle(const WalkParams& params, double lambda);

/// One phase gate per pattern; two patterns that differ in a single wire
/// (0 vs 1) share one Phase2 on that wire.
Circuit diagonal_phase_circuit(const DiagonalPhaseSpec& spec, const WalkParams& params);

/// Disjoint cube cover of the active vertices, as control lists on g's wires.
/// A fully active graph yields one empty list; no active vertices, none.
std::vector<std::vector<Control>> active_cover(const Graph& g);

Circuit synth_path2(const WalkParams& params);
Circuit synth_complete(int m, const WalkParams& params);

/// Basis change mapping (u + v)/sqrt2 to |0...0> and (u - v)/sqrt2 to
/// |1 0...0>, where u, v are the uniform states on the two parts of K_{2^m1, 2^m2}.
Circuit bipartite_diagonalizer(int m1, int m2);
Circuit synth_complete_bipartite(int m1, int m2, const WalkParams& params);

Circuit synth_hypercube(int n, const WalkParams& params);
Circuit synth_book(int m, const WalkParams& params);
Circuit synth_cartesian(const WalkExpr& e1, const WalkExpr& e2, const WalkParams& params);
Circuit synth_interdep_identity(const WalkExpr& e1, const WalkParams& params);

enum class FactorOrder { IntraFirst, InterFirst };

Circuit synth_interdep_complete(const WalkExpr& e1, const WalkExpr& e2,
                                const WalkParams& params,
                                FactorOrder order = FactorOrder::IntraFirst);

struct GraphCircuit {
  Graph graph;
  Circuit circuit;
};

/// exp(-it(A+B)) = exp(-itA) exp(-itB), refused unless [A, B] = 0. With
/// verify_inputs each circuit is first checked against its own graph's oracle.
Circuit synth_commuting_sum(const GraphCircuit& a, const GraphCircuit& b,
                            const WalkParams& params, bool verify_inputs = true);

/// Walk on B = [[0, B0], [B0, 0]] for symmetric B0 with diagonalizer q0
/// (q0 B0 q0^dagger = zeta0): basis change H (x) q0 around sigma_z (x) zeta0.
Circuit synth_symmetric_interlink(const Circuit& q0, const DiagonalPhaseSpec& zeta0,
                                  const WalkParams& params);

Graph graph_of(const WalkExpr& e);

/// The intra/inter split for interdependent expressions, nothing otherwise.
std::optional<InterdependentPair> interlink_of(const WalkExpr& e);

/// Composite preconditions (equal degrees, embeddings, commutativity).
void validate(const WalkExpr& e);

Circuit synth(const WalkExpr& e, const WalkParams& params);

/// Throws InternalError unless c fixes every padding basis state of g.
void check_padding_identity(const Circuit& c, const Graph& g, double tol = 1e-10);

}  // namespace walkforge
