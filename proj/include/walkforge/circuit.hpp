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

// Gate-level IR.
//
// Wire 0 is the most significant bit of the basis index. Global phase is a
// first-class gate, so circuit equality is exact operator equality and never
// "equal up to phase".

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "walkforge/config.hpp"
#include "walkforge/spectral.hpp"

namespace walkforge {

enum class GateKind { Hadamard, Not, Phase2, GlobalPhase };

/// OnZero realizes the projector |0><0| on the control, OnOne |1><1|.
enum class Polarity { OnZero, OnOne };

struct Control {
  int wire;
  Polarity polarity;

  friend bool operator==(const Control&, const Control&) = default;
};

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::Hadamard;
  int target = -1;       // -1 for GlobalPhase
  double theta1 = 0.0;   // Phase2: phase on |0>; GlobalPhase: the phase
  double theta2 = 0.0;   // Phase2: phase on |1>
  std::vector<Control> controls;

  static Gate hadamard(int wire);
  static Gate not_gate(int wire);
  /// diag(e^{i theta1}, e^{i theta2}) on the target.
  static Gate phase2(int wire, double theta1, double theta2);
  static Gate global_phase(double phi);

  Gate with_control(int wire, Polarity polarity) const;
  Gate with_controls(const std::vector<Control>& extra) const;

  /// Same kind, target and controls; angles ignored.
  bool same_structure(const Gate& other) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int wires = 0);
  Circuit(int wires, std::vector<Gate> gates);

  int wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates wire ranges, distinct controls and finite angles.
  Circuit& add(Gate gate);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int wires_;
  std::vector<Gate> gates_;
};

/// c1 then c2; unitary_of(seq) = U2 * U1.
Circuit seq(const Circuit& c1, const Circuit& c2);
/// c1 on the leading wires, c2 on the trailing ones; unitary U1 (x) U2.
Circuit par(const Circuit& c1, const Circuit& c2);
Circuit adjoint(const Circuit& c);

/// Adds a control on ctrl_wire to every gate. An uncontrolled GlobalPhase
/// becomes a Phase2 on the control wire so the phase lands in the selected
/// block only.
Circuit controlled(const Circuit& c, int ctrl_wire, Polarity polarity);
Circuit controlled(const Circuit& c, const std::vector<Control>& ctrls);

/// Places c on wires [offset, offset + c.wires()) of a total_wires circuit.
Circuit embed(const Circuit& c, int total_wires, int offset);

Eigen::Matrix2cd gate_matrix(const Gate& gate);

/// Time-ordered product of gate matrices.
Eigen::MatrixXcd unitary_of(const Circuit& c, int max_wires = default_limits().max_unitary_wires);

/// Gate-by-gate application without forming the unitary.
StateVector apply_to_state(const Circuit& c, const StateVector& psi);

/// In-place application on a raw amplitude vector.
void apply_in_place(const Circuit& c, Eigen::VectorXcd& amplitudes);

struct GateCounts {
  std::size_t total = 0;
  std::map<GateKind, std::size_t> by_kind;
  std::map<std::size_t, std::size_t> by_arity;  // number of controls -> gates

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_count(const Circuit& c);

/// Cost model: 1 per gate with at most one control, 2k - 1 for k >= 2 controls.
std::size_t two_qubit_cost(const Circuit& c);

/// Kinds, targets, controls and order identical; angles free.
bool same_structure(const Circuit& a, const Circuit& b);

/// All angles in gate order (two per Phase2, one per GlobalPhase).
std::vector<double> angles(const Circuit& c);

}  // namespace walkforge
