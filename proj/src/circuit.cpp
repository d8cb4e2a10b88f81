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

#include "walkforge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "walkforge/error.hpp"

namespace walkforge {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Hadamard: return "h";
    case GateKind::Not: return "x";
    case GateKind::Phase2: return "phase2";
    case GateKind::GlobalPhase: return "gphase";
  }
  return "?";
}

// --- Gate --------------------------------------------------------------------

Gate Gate::hadamard(int wire) { return Gate{GateKind::Hadamard, wire, 0.0, 0.0, {}}; }

Gate Gate::not_gate(int wire) { return Gate{GateKind::Not, wire, 0.0, 0.0, {}}; }

Gate Gate::phase2(int wire, double theta1, double theta2) {
  return Gate{GateKind::Phase2, wire, theta1, theta2, {}};
}

Gate Gate::global_phase(double phi) { return Gate{GateKind::GlobalPhase, -1, phi, 0.0, {}}; }

Gate Gate::with_control(int wire, Polarity polarity) const {
  Gate g = *this;
  g.controls.push_back({wire, polarity});
  return g;
}

Gate Gate::with_controls(const std::vector<Control>& extra) const {
  Gate g = *this;
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  return g;
}

bool Gate::same_structure(const Gate& other) const {
  return kind == other.kind && target == other.target && controls == other.controls;
}

// --- Circuit -----------------------------------------------------------------

Circuit::Circuit(int wires) : wires_(wires) {
  if (wires < 0) throw PreconditionError("negative wire count");
}

Circuit::Circuit(int wires, std::vector<Gate> gates) : Circuit(wires) {
  gates_.reserve(gates.size());
  for (auto& g : gates) add(std::move(g));
}

Circuit& Circuit::add(Gate gate) {
  auto in_range = [&](int w) { return w >= 0 && w < wires_; };
  if (gate.kind == GateKind::GlobalPhase) {
    if (gate.target != -1) throw PreconditionError("global phase has no target wire");
    if (gate.theta2 != 0.0) throw PreconditionError("global phase takes one angle");
  } else if (!in_range(gate.target)) {
    throw EmbeddingError("gate target wire " + std::to_string(gate.target) +
                         " outside a " + std::to_string(wires_) + "-wire circuit");
  }
  if ((gate.kind == GateKind::Hadamard || gate.kind == GateKind::Not) &&
      (gate.theta1 != 0.0 || gate.theta2 != 0.0)) {
    throw PreconditionError("Hadamard and NOT take no angles");
  }
  if (!std::isfinite(gate.theta1) || !std::isfinite(gate.theta2)) {
    throw PreconditionError("gate angles must be finite");
  }
  for (std::size_t k = 0; k < gate.controls.size(); ++k) {
    const int w = gate.controls[k].wire;
    if (!in_range(w)) {
      throw EmbeddingError("control wire " + std::to_string(w) + " out of range");
    }
    if (w == gate.target) throw EmbeddingError("control wire equals the target wire");
    for (std::size_t j = 0; j < k; ++j) {
      if (gate.controls[j].wire == w) throw EmbeddingError("duplicate control wire");
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

// --- Composition -------------------------------------------------------------

Circuit seq(const Circuit& c1, const Circuit& c2) {
  if (c1.wires() != c2.wires()) {
    throw DimensionError("seq: wire counts differ (" + std::to_string(c1.wires()) +
                         " vs " + std::to_string(c2.wires()) + ")");
  }
  Circuit out = c1;
  for (const auto& g : c2.gates()) out.add(g);
  return out;
}

Circuit embed(const Circuit& c, int total_wires, int offset) {
  if (offset < 0 || offset + c.wires() > total_wires) {
    throw EmbeddingError("embed: circuit does not fit at the requested offset");
  }
  Circuit out(total_wires);
  for (Gate g : c.gates()) {
    if (g.target >= 0) g.target += offset;
    for (auto& ctl : g.controls) ctl.wire += offset;
    out.add(std::move(g));
  }
  return out;
}

Circuit par(const Circuit& c1, const Circuit& c2) {
  const int total = c1.wires() + c2.wires();
  return seq(embed(c1, total, 0), embed(c2, total, c1.wires()));
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.wires());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::Phase2 || g.kind == GateKind::GlobalPhase) {
      g.theta1 = -g.theta1;
      g.theta2 = -g.theta2;
    }
    out.add(std::move(g));
  }
  return out;
}

Circuit controlled(const Circuit& c, int ctrl_wire, Polarity polarity) {
  if (ctrl_wire < 0 || ctrl_wire >= c.wires()) {
    throw EmbeddingError("controlled: control wire out of range");
  }
  Circuit out(c.wires());
  for (const auto& g : c.gates()) {
    const bool collides =
        g.target == ctrl_wire ||
        std::any_of(g.controls.begin(), g.controls.end(),
                    [&](const Control& k) { return k.wire == ctrl_wire; });
    if (collides) {
      throw EmbeddingError("controlled: wire " + std::to_string(ctrl_wire) +
                           " is already used by the circuit");
    }
    if (g.kind == GateKind::GlobalPhase && g.controls.empty()) {
      const double phi = g.theta1;
      out.add(polarity == Polarity::OnOne ? Gate::phase2(ctrl_wire, 0.0, phi)
                                          : Gate::phase2(ctrl_wire, phi, 0.0));
    } else {
      out.add(g.with_control(ctrl_wire, polarity));
    }
  }
  return out;
}

Circuit controlled(const Circuit& c, const std::vector<Control>& ctrls) {
  Circuit out = c;
  for (const auto& k : ctrls) out = controlled(out, k.wire, k.polarity);
  return out;
}

// --- Simulation --------------------------------------------------------------

Eigen::Matrix2cd gate_matrix(const Gate& gate) {
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::Hadamard: {
      const double r = 1.0 / std::numbers::sqrt2;
      m << r, r, r, -r;
      break;
    }
    case GateKind::Not:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::Phase2:
      m << std::polar(1.0, gate.theta1), 0.0, 0.0, std::polar(1.0, gate.theta2);
      break;
    case GateKind::GlobalPhase:
      m << std::polar(1.0, gate.theta1), 0.0, 0.0, std::polar(1.0, gate.theta1);
      break;
  }
  return m;
}

namespace {

struct ControlMask {
  std::size_t mask = 0;
  std::size_t value = 0;

  bool matches(std::size_t index) const { return (index & mask) == value; }
};

std::size_t wire_bit(int wires, int wire) {
  return std::size_t{1} << (wires - 1 - wire);
}

ControlMask control_mask(const Gate& g, int wires) {
  ControlMask cm;
  for (const auto& k : g.controls) {
    const std::size_t bit = wire_bit(wires, k.wire);
    cm.mask |= bit;
    if (k.polarity == Polarity::OnOne) cm.value |= bit;
  }
  return cm;
}

// Applies gate g to every "row" of a dim x stride block, where row i occupies
// data[i * stride .. i * stride + stride). stride = 1 is a state vector.
void apply_gate(const Gate& g, int wires, Complex* data, std::size_t stride) {
  const std::size_t dim = std::size_t{1} << wires;
  const ControlMask cm = control_mask(g, wires);
  if (g.kind == GateKind::GlobalPhase) {
    const Complex ph = std::polar(1.0, g.theta1);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!cm.matches(i)) continue;
      Complex* row = data + i * stride;
      for (std::size_t k = 0; k < stride; ++k) row[k] *= ph;
    }
    return;
  }
  const Eigen::Matrix2cd m = gate_matrix(g);
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  const std::size_t bit = wire_bit(wires, g.target);
  const bool diagonal = g.kind == GateKind::Phase2;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & bit) != 0 || !cm.matches(i)) continue;
    Complex* r0 = data + i * stride;
    Complex* r1 = data + (i | bit) * stride;
    if (diagonal) {
      for (std::size_t k = 0; k < stride; ++k) {
        r0[k] *= m00;
        r1[k] *= m11;
      }
    } else {
      for (std::size_t k = 0; k < stride; ++k) {
        const Complex a = r0[k];
        const Complex b = r1[k];
        r0[k] = m00 * a + m01 * b;
        r1[k] = m10 * a + m11 * b;
      }
    }
  }
}

}  // namespace

Eigen::MatrixXcd unitary_of(const Circuit& c, int max_wires) {
  if (c.wires() > max_wires) {
    throw ResourceError("unitary_of: " + std::to_string(c.wires()) +
                        " wires exceed the cap of " + std::to_string(max_wires));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.wires());
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor u = RowMajor::Identity(dim, dim);
  for (const auto& g : c.gates()) {
    apply_gate(g, c.wires(), u.data(), static_cast<std::size_t>(dim));
  }
  return u;
}

void apply_in_place(const Circuit& c, Eigen::VectorXcd& amplitudes) {
  if (static_cast<std::size_t>(amplitudes.size()) != (std::size_t{1} << c.wires())) {
    throw DimensionError("apply_to_state: dimension mismatch");
  }
  for (const auto& g : c.gates()) apply_gate(g, c.wires(), amplitudes.data(), 1);
}

StateVector apply_to_state(const Circuit& c, const StateVector& psi) {
  Eigen::VectorXcd amps = psi.amplitudes();
  apply_in_place(c, amps);
  return StateVector(std::move(amps), default_tolerances().unitarity);
}

// --- Accounting --------------------------------------------------------------

GateCounts gate_count(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates()) {
    ++counts.total;
    ++counts.by_kind[g.kind];
    ++counts.by_arity[g.controls.size()];
  }
  return counts;
}

std::size_t two_qubit_cost(const Circuit& c) {
  std::size_t cost = 0;
  for (const auto& g : c.gates()) {
    const std::size_t k = g.controls.size();
    cost += k <= 1 ? 1 : 2 * k - 1;
  }
  return cost;
}

bool same_structure(const Circuit& a, const Circuit& b) {
  if (a.wires() != b.wires() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.gates()[i].same_structure(b.gates()[i])) return false;
  }
  return true;
}

std::vector<double> angles(const Circuit& c) {
  std::vector<double> out;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::Phase2) {
      out.push_back(g.theta1);
      out.push_back(g.theta2);
    } else if (g.kind == GateKind::GlobalPhase) {
      out.push_back(g.theta1);
    }
  }
  return out;
}

}  // namespace walkforge
