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

#include "walkforge/synthesis.hpp"

#include <cmath>
#include <string>

#include "walkforge/error.hpp"
#include "walkforge/spectral.hpp"

namespace walkforge {

// --- Diagonal phases ---------------------------------------------------------

namespace {

bool overlap(const PhasePattern& a, const PhasePattern& b) {
  for (std::size_t w = 0; w < a.bits.size(); ++w) {
    if (a.bits[w] != Bit::Free && b.bits[w] != Bit::Free && a.bits[w] != b.bits[w]) {
      return false;
    }
  }
  return true;
}

// The single wire where a and b are fixed to opposite values while agreeing
// everywhere else, or -1.
int sibling_wire(const PhasePattern& a, const PhasePattern& b) {
  int wire = -1;
  for (std::size_t w = 0; w < a.bits.size(); ++w) {
    if (a.bits[w] == b.bits[w]) continue;
    if (a.bits[w] == Bit::Free || b.bits[w] == Bit::Free || wire != -1) return -1;
    wire = static_cast<int>(w);
  }
  return wire;
}

std::vector<Control> fixed_controls(const PhasePattern& p, int skip) {
  std::vector<Control> out;
  for (std::size_t w = 0; w < p.bits.size(); ++w) {
    if (static_cast<int>(w) == skip || p.bits[w] == Bit::Free) continue;
    out.push_back({static_cast<int>(w),
                   p.bits[w] == Bit::One ? Polarity::OnOne : Polarity::OnZero});
  }
  return out;
}

}  // namespace

DiagonalPhaseSpec::DiagonalPhaseSpec(int wires, std::vector<PhasePattern> patterns)
    : wires_(wires), patterns_(std::move(patterns)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (patterns_[i].bits.size() != static_cast<std::size_t>(wires_)) {
      throw DimensionError("phase pattern length differs from the wire count");
    }
    if (!std::isfinite(patterns_[i].eigenvalue)) {
      throw PreconditionError("phase pattern eigenvalue must be finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (overlap(patterns_[i], patterns_[j])) {
        throw PreconditionError("phase patterns " + std::to_string(j) + " and " +
                                std::to_string(i) + " overlap");
      }
    }
  }
}

double walk_angle(const WalkParams& params, double lambda) {
  return -(params.gamma * params.t) * lambda;
}

Circuit diagonal_phase_circuit(const DiagonalPhaseSpec& spec, const WalkParams& params) {
  Circuit c(spec.wires());
  const auto& pats = spec.patterns();
  std::vector<bool> used(pats.size(), false);
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    int wire = -1;
    std::size_t partner = 0;
    for (std::size_t j = i + 1; j < pats.size() && wire < 0; ++j) {
      if (used[j]) continue;
      wire = sibling_wire(pats[i], pats[j]);
      partner = j;
    }
    if (wire >= 0) {
      used[partner] = true;
      const bool i_is_zero = pats[i].bits[static_cast<std::size_t>(wire)] == Bit::Zero;
      const auto& zero_side = i_is_zero ? pats[i] : pats[partner];
      const auto& one_side = i_is_zero ? pats[partner] : pats[i];
      c.add(Gate::phase2(wire, walk_angle(params, zero_side.eigenvalue),
                         walk_angle(params, one_side.eigenvalue))
                .with_controls(fixed_controls(pats[i], wire)));
      continue;
    }
    const auto& p = pats[i];
    const double theta = walk_angle(params, p.eigenvalue);
    int target = -1;
    for (std::size_t w = 0; w < p.bits.size(); ++w) {
      if (p.bits[w] != Bit::Free) {
        target = static_cast<int>(w);
        break;
      }
    }
    if (target < 0) {
      c.add(Gate::global_phase(theta));
    } else if (p.bits[static_cast<std::size_t>(target)] == Bit::Zero) {
      c.add(Gate::phase2(target, theta, 0.0).with_controls(fixed_controls(p, target)));
    } else {
      c.add(Gate::phase2(target, 0.0, theta).with_controls(fixed_controls(p, target)));
    }
  }
  return c;
}

// --- Active cover ------------------------------------------------------------

std::vector<std::vector<Control>> active_cover(const Graph& g) {
  const std::size_t dim = g.dim();
  std::vector<std::size_t> prefix(dim + 1, 0);
  for (std::size_t v = 0; v < dim; ++v) prefix[v + 1] = prefix[v] + (g.active(v) ? 1 : 0);

  std::vector<std::vector<Control>> cover;
  std::vector<Control> path;
  auto visit = [&](auto&& self, std::size_t lo, std::size_t size, int wire) -> void {
    const std::size_t count = prefix[lo + size] - prefix[lo];
    if (count == 0) return;
    if (count == size) {
      cover.push_back(path);
      return;
    }
    const std::size_t half = size / 2;
    path.push_back({wire, Polarity::OnZero});
    self(self, lo, half, wire + 1);
    path.back().polarity = Polarity::OnOne;
    self(self, lo + half, half, wire + 1);
    path.pop_back();
  };
  visit(visit, 0, dim, 0);
  return cover;
}

namespace {

std::vector<Control> shifted(std::vector<Control> ctrls, int offset) {
  for (auto& k : ctrls) k.wire += offset;
  return ctrls;
}

}  // namespace

// --- Families ----------------------------------------------------------------

Circuit synth_path2(const WalkParams& params) {
  Circuit c(1);
  c.add(Gate::hadamard(0));
  c.add(Gate::phase2(0, walk_angle(params, 1.0), walk_angle(params, -1.0)));
  c.add(Gate::hadamard(0));
  return c;
}

Circuit synth_complete(int m, const WalkParams& params) {
  if (m < 1) throw PreconditionError("complete(m) requires m >= 1");
  const double n = std::ldexp(1.0, m);
  // J - I = H^m (n |0..0><0..0| - I) H^m.
  Circuit c(m);
  for (int w = 0; w < m; ++w) c.add(Gate::hadamard(w));
  c.add(Gate::global_phase(walk_angle(params, -1.0)));
  Gate zero_phase = Gate::phase2(0, walk_angle(params, n), 0.0);
  for (int w = 1; w < m; ++w) zero_phase = zero_phase.with_control(w, Polarity::OnZero);
  c.add(std::move(zero_phase));
  for (int w = 0; w < m; ++w) c.add(Gate::hadamard(w));
  return c;
}

Circuit bipartite_diagonalizer(int m1, int m2) {
  if (m1 < 1 || m2 < 0 || m1 < m2) {
    throw PreconditionError("bipartite(m1, m2) requires m1 >= m2 >= 0 and m1 >= 1");
  }
  Circuit q(m1 + 1);
  // I + P0 (x) (H^m1 - I)
  for (int w = 1; w <= m1; ++w) {
    q.add(Gate::hadamard(w).with_control(0, Polarity::OnZero));
  }
  // + P1 (x) P0^(m1-m2) (x) (H^m2 - I)
  for (int w = m1 - m2 + 1; w <= m1; ++w) {
    Gate h = Gate::hadamard(w).with_control(0, Polarity::OnOne);
    for (int z = 1; z <= m1 - m2; ++z) h = h.with_control(z, Polarity::OnZero);
    q.add(std::move(h));
  }
  // I + (H - I) (x) P0^m1, applied second.
  Gate top = Gate::hadamard(0);
  for (int w = 1; w <= m1; ++w) top = top.with_control(w, Polarity::OnZero);
  q.add(std::move(top));
  return q;
}

Circuit synth_complete_bipartite(int m1, int m2, const WalkParams& params) {
  const Circuit q = bipartite_diagonalizer(m1, m2);
  const double root = std::sqrt(std::ldexp(1.0, m1 + m2));
  std::vector<Bit> plus(static_cast<std::size_t>(m1 + 1), Bit::Zero);
  std::vector<Bit> minus = plus;
  minus[0] = Bit::One;
  const DiagonalPhaseSpec zeta(m1 + 1, {{plus, root}, {minus, -root}});
  return seq(seq(q, diagonal_phase_circuit(zeta, params)), adjoint(q));
}

Circuit synth_hypercube(int n, const WalkParams& params) {
  if (n < 1) throw PreconditionError("hypercube(n) requires n >= 1");
  Circuit c = synth_path2(params);
  for (int k = 1; k < n; ++k) c = par(c, synth_path2(params));
  return c;
}

Circuit synth_book(int m, const WalkParams& params) {
  return synth_cartesian(WalkExpr::star(m), WalkExpr::path2(), params);
}

namespace {

// Kronecker sum restricted to active product vertices:
//   A1 (x) P2 + P1 (x) A2, two commuting terms; each factor's walk runs
//   controlled on the other factor's active cover.
Circuit cartesian_circuit(const GraphCircuit& a, const GraphCircuit& b) {
  const int w1 = a.circuit.wires();
  const int total = w1 + b.circuit.wires();
  Circuit out(total);
  const Circuit first = embed(a.circuit, total, 0);
  for (const auto& pattern : active_cover(b.graph)) {
    out = seq(out, controlled(first, shifted(pattern, w1)));
  }
  const Circuit second = embed(b.circuit, total, w1);
  for (const auto& pattern : active_cover(a.graph)) {
    out = seq(out, controlled(second, pattern));
  }
  return out;
}

struct CompleteLayout {
  Graph g1;
  Graph g2;
  int m1;
  int m2;
};

CompleteLayout complete_layout(const WalkExpr& e1, const WalkExpr& e2) {
  Graph g1 = graph_of(e1);
  Graph g2 = graph_of(e2);
  const auto d1 = is_degree_regular(g1);
  const auto d2 = is_degree_regular(g2);
  if (!d1 || !d2 || *d1 != *d2) {
    auto show = [](const std::optional<std::int64_t>& d) {
      return d ? std::to_string(*d) : std::string("irregular");
    };
    throw DegreeMismatchError(
        "interdep_complete requires degree-regular halves of equal degree "
        "(deg(A1)_v = deg(A2)_v = d for all v); got " + show(d1) + " and " + show(d2));
  }
  const std::size_t n1 = g1.active_count();
  const std::size_t n2 = g2.active_count();
  if (!is_power_of_two(n1) || !is_power_of_two(n2)) {
    throw PreconditionError("interdep_complete requires power-of-two vertex counts, got " +
                            std::to_string(n1) + " and " + std::to_string(n2));
  }
  if (n1 < 2 || n1 < n2) {
    throw EmbeddingError("interdep_complete requires n1 >= n2 and n1 >= 2");
  }
  if (!g1.fully_active()) {
    throw EmbeddingError("interdep_complete: the first graph must have no padding");
  }
  if (g2.dim() > g1.dim()) {
    throw EmbeddingError("interdep_complete: the second graph is wider than the first");
  }
  for (std::size_t v = 0; v < g2.dim(); ++v) {
    if (g2.active(v) != (v < n2)) {
      throw EmbeddingError(
          "interdep_complete: the second graph's vertices must occupy indices 0..n2-1");
    }
  }
  return {std::move(g1), std::move(g2), log2_exact(n1), log2_exact(n2)};
}

}  // namespace

Circuit synth_cartesian(const WalkExpr& e1, const WalkExpr& e2, const WalkParams& params) {
  return cartesian_circuit({graph_of(e1), synth(e1, params)},
                           {graph_of(e2), synth(e2, params)});
}

Circuit synth_interdep_identity(const WalkExpr& e1, const WalkParams& params) {
  const Graph g1 = graph_of(e1);
  const Circuit inner = synth(e1, params);
  const int total = inner.wires() + 1;
  // sigma_x (x) P_active commutes with I (x) A1.
  Circuit out(total);
  const Circuit top = embed(synth_path2(params), total, 0);
  for (const auto& pattern : active_cover(g1)) {
    out = seq(out, controlled(top, shifted(pattern, 1)));
  }
  return seq(out, embed(inner, total, 1));
}

Circuit synth_interdep_complete(const WalkExpr& e1, const WalkExpr& e2,
                                const WalkParams& params, FactorOrder order) {
  const CompleteLayout layout = complete_layout(e1, e2);
  const InterdependentPair pair = complete_interlink(layout.g1, layout.g2);
  if (!commutes(pair.intra, pair.inter)) {
    throw NotCommutingError("interdep_complete: intra and interlink graphs do not commute");
  }
  const int m1 = layout.m1;
  const int total = m1 + 1;

  const Circuit c1 = synth(e1, params);
  const Circuit c2 = synth(e2, params);
  check_padding_identity(c2, layout.g2);

  Circuit intra = controlled(embed(c1, total, 1), 0, Polarity::OnZero);
  const int pad_wires = m1 - c2.wires();
  Circuit lower = embed(c2, total, 1 + pad_wires);
  for (int w = 1; w <= pad_wires; ++w) lower = controlled(lower, w, Polarity::OnZero);
  intra = seq(intra, controlled(lower, 0, Polarity::OnOne));

  const Circuit inter = synth_complete_bipartite(m1, layout.m2, params);
  return order == FactorOrder::IntraFirst ? seq(intra, inter) : seq(inter, intra);
}

Circuit synth_commuting_sum(const GraphCircuit& a, const GraphCircuit& b,
                            const WalkParams& params, bool verify_inputs) {
  if (a.graph.dim() != b.graph.dim()) {
    throw DimensionError("commuting sum: graph dimensions differ");
  }
  if (a.circuit.wires() != a.graph.wires() || b.circuit.wires() != b.graph.wires()) {
    throw DimensionError("commuting sum: circuit and graph wire counts differ");
  }
  if (!commutes(a.graph, b.graph)) {
    throw NotCommutingError(
        "exp(-it(A+B)) = exp(-itA) exp(-itB) holds only provided [A, B] = 0; "
        "the commutator of " + a.graph.label() + " and " + b.graph.label() + " is nonzero");
  }
  if (verify_inputs) {
    for (const auto* gc : {&a, &b}) {
      const double d = max_entrywise_distance(unitary_of(gc->circuit),
                                              expm_graph(gc->graph, params));
      if (d > default_tolerances().verification) {
        throw PreconditionError("commuting sum: supplied circuit for " + gc->graph.label() +
                                " deviates from its oracle by " + std::to_string(d));
      }
    }
  }
  return seq(a.circuit, b.circuit);
}

Circuit synth_symmetric_interlink(const Circuit& q0, const DiagonalPhaseSpec& zeta0,
                                  const WalkParams& params) {
  if (q0.wires() != zeta0.wires()) {
    throw DimensionError("symmetric interlink: diagonalizer and spectrum widths differ");
  }
  Circuit h(1);
  h.add(Gate::hadamard(0));
  const Circuit q = par(h, q0);
  std::vector<PhasePattern> zeta;
  for (const auto& p : zeta0.patterns()) {
    PhasePattern up{{Bit::Zero}, p.eigenvalue};
    PhasePattern down{{Bit::One}, -p.eigenvalue};
    up.bits.insert(up.bits.end(), p.bits.begin(), p.bits.end());
    down.bits.insert(down.bits.end(), p.bits.begin(), p.bits.end());
    zeta.push_back(std::move(up));
    zeta.push_back(std::move(down));
  }
  const DiagonalPhaseSpec spec(q.wires(), std::move(zeta));
  return seq(seq(q, diagonal_phase_circuit(spec, params)), adjoint(q));
}

// --- Expressions -------------------------------------------------------------

Graph graph_of(const WalkExpr& e) {
  using K = WalkExpr::Kind;
  switch (e.kind()) {
    case K::Path2: return path2();
    case K::Complete: return complete_graph(e.param(0));
    case K::Bipartite: return complete_bipartite(e.param(0), e.param(1));
    case K::Star: return star(e.param(0));
    case K::Hypercube: return hypercube(e.param(0));
    case K::Book: return book(e.param(0));
    case K::Cartesian: return cartesian(graph_of(e.child(0)), graph_of(e.child(1)));
    case K::InterdepIdentity:
    case K::InterdepComplete: return interlink_of(e)->combined();
    case K::CommutingSum: return graph_sum(graph_of(e.child(0)), graph_of(e.child(1)));
  }
  throw InternalError("graph_of: unknown expression kind");
}

std::optional<InterdependentPair> interlink_of(const WalkExpr& e) {
  if (e.kind() == WalkExpr::Kind::InterdepIdentity) {
    return identity_interlink(graph_of(e.child(0)));
  }
  if (e.kind() == WalkExpr::Kind::InterdepComplete) {
    const CompleteLayout layout = complete_layout(e.child(0), e.child(1));
    return complete_interlink(layout.g1, layout.g2);
  }
  return std::nullopt;
}

void validate(const WalkExpr& e) {
  for (const auto& c : e.children()) validate(c);
  if (e.kind() == WalkExpr::Kind::CommutingSum) {
    const Graph a = graph_of(e.child(0));
    const Graph b = graph_of(e.child(1));
    if (a.dim() != b.dim()) throw DimensionError("commuting_sum: graph dimensions differ");
    if (!commutes(a, b)) {
      throw NotCommutingError("commuting_sum requires [A, B] = 0 for " + to_string(e));
    }
  }
  (void)graph_of(e);
}

Circuit synth(const WalkExpr& e, const WalkParams& params) {
  using K = WalkExpr::Kind;
  switch (e.kind()) {
    case K::Path2: return synth_path2(params);
    case K::Complete: return synth_complete(e.param(0), params);
    case K::Bipartite: return synth_complete_bipartite(e.param(0), e.param(1), params);
    case K::Star: return synth_complete_bipartite(e.param(0), 0, params);
    case K::Hypercube: return synth_hypercube(e.param(0), params);
    case K::Book: return synth_book(e.param(0), params);
    case K::Cartesian: return synth_cartesian(e.child(0), e.child(1), params);
    case K::InterdepIdentity: return synth_interdep_identity(e.child(0), params);
    case K::InterdepComplete:
      return synth_interdep_complete(e.child(0), e.child(1), params);
    case K::CommutingSum:
      return synth_commuting_sum({graph_of(e.child(0)), synth(e.child(0), params)},
                                 {graph_of(e.child(1)), synth(e.child(1), params)}, params,
                                 /*verify_inputs=*/false);
  }
  throw InternalError("synth: unknown expression kind");
}

void check_padding_identity(const Circuit& c, const Graph& g, double tol) {
  if (c.wires() != g.wires()) throw DimensionError("padding check: width mismatch");
  for (std::size_t v = 0; v < g.dim(); ++v) {
    if (g.active(v)) continue;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.dim()));
    psi(static_cast<Eigen::Index>(v)) = 1.0;
    apply_in_place(c, psi);
    psi(static_cast<Eigen::Index>(v)) -= 1.0;
    if (psi.cwiseAbs().maxCoeff() > tol) {
      throw InternalError("circuit moves padding basis state " + std::to_string(v) + " of " +
                          g.label());
    }
  }
}

}  // namespace walkforge
