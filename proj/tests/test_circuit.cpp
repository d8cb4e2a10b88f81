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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "walkforge/circuit.hpp"
#include "walkforge/error.hpp"
#include "walkforge/synthesis.hpp"

using namespace walkforge;
using wf_test::dist;
using wf_test::kron;

namespace {

const Eigen::Matrix2cd kH = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);

Eigen::MatrixXcd block_diag(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace

TEST_CASE("endianness fixtures") {
  CHECK(unitary_of(Circuit(2)).isIdentity());

  Circuit h0(2);
  h0.add(Gate::hadamard(0));
  CHECK(dist(unitary_of(h0), kron(kH, Eigen::Matrix2cd::Identity())) <= 1e-15);

  Circuit p1(2);
  p1.add(Gate::phase2(1, 0.3, -1.1));
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = std::polar(1.0, 0.3);
  d(1, 1) = std::polar(1.0, -1.1);
  CHECK(dist(unitary_of(p1), kron(Eigen::Matrix2cd::Identity(), d)) <= 1e-15);

  // Controlled NOT with the control on the most significant wire.
  Circuit cx(2);
  cx.add(Gate::not_gate(1).with_control(0, Polarity::OnOne));
  const auto u = unitary_of(cx);
  CHECK(u(3, 2) == Complex(1.0));
  CHECK(u(2, 3) == Complex(1.0));
  CHECK(u(0, 0) == Complex(1.0));
}

TEST_CASE("gate validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::hadamard(2)), EmbeddingError);
  CHECK_THROWS_AS(c.add(Gate::hadamard(0).with_control(0, Polarity::OnOne)), EmbeddingError);
  CHECK_THROWS_AS(c.add(Gate::phase2(0, NAN, 0.0)), PreconditionError);
  CHECK_THROWS_AS(c.add(Gate::hadamard(0).with_control(3, Polarity::OnZero)), EmbeddingError);
  CHECK(c.empty());
}

TEST_CASE("seq laws") {
  std::mt19937_64 rng(11);
  const Circuit c = wf_test::random_circuit(3, 20, rng);
  CHECK(seq(c, Circuit(3)) == c);
  CHECK(seq(Circuit(3), c) == c);
  Circuit hh(1);
  hh.add(Gate::hadamard(0)).add(Gate::hadamard(0));
  CHECK(unitary_of(hh).isIdentity(1e-15));
  CHECK_THROWS_AS(seq(c, Circuit(2)), DimensionError);
}

TEST_CASE("seq multiplies unitaries, par tensors them") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit a = wf_test::random_circuit(3, 12, rng);
    const Circuit b = wf_test::random_circuit(3, 12, rng);
    const Circuit x = wf_test::random_circuit(2, 8, rng);
    CHECK(dist(unitary_of(seq(a, b)), unitary_of(b) * unitary_of(a)) <= 1e-12);
    CHECK(dist(unitary_of(par(a, x)), kron(unitary_of(a), unitary_of(x))) <= 1e-12);
    CHECK(gate_count(par(a, x)).total == a.size() + x.size());
    CHECK(dist(unitary_of(seq(a, adjoint(a))), Eigen::MatrixXcd::Identity(8, 8)) <= 1e-11);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(unitarity_defect(unitary_of(a)) <= 1e-12);
  }
  std::mt19937_64 rng2(1);
  const Circuit c = wf_test::random_circuit(2, 5, rng2);
  CHECK(par(c, Circuit(0)) == c);
}

TEST_CASE("par of two path2 walks") {
  const WalkParams p(1.0, 0.9);
  const auto u = unitary_of(synth_path2(p));
  CHECK(dist(unitary_of(par(synth_path2(p), synth_path2(p))), kron(u, u)) <= 1e-13);
}

TEST_CASE("controlled gives block-diagonal unitaries") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = wf_test::random_circuit(2, 10, rng);
    const Circuit lifted = embed(c, 3, 1);
    const auto u = unitary_of(c);
    const auto id = Eigen::MatrixXcd::Identity(4, 4);
    CHECK(dist(unitary_of(controlled(lifted, 0, Polarity::OnOne)), block_diag(id, u)) <= 1e-12);
    CHECK(dist(unitary_of(controlled(lifted, 0, Polarity::OnZero)), block_diag(u, id)) <= 1e-12);
  }
  CHECK(controlled(Circuit(3), 0, Polarity::OnOne).empty());
  Circuit busy(2);
  busy.add(Gate::hadamard(0));
  CHECK_THROWS_AS(controlled(busy, 0, Polarity::OnOne), EmbeddingError);
  CHECK_THROWS_AS(controlled(busy, 5, Polarity::OnOne), EmbeddingError);
}

TEST_CASE("controlled turns a bare global phase into a phase gate") {
  Circuit g(2);
  g.add(Gate::global_phase(0.7));
  const Circuit c = controlled(g, 0, Polarity::OnZero);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0].kind == GateKind::Phase2);
  const auto u = unitary_of(c);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, 0.7)) <= 1e-15);
  CHECK(std::abs(u(2, 2) - 1.0) <= 1e-15);
}

TEST_CASE("intra walk of a disjoint union from two controlled blocks") {
  const WalkParams p(1.0, 0.9);
  const Circuit q4 = embed(synth_hypercube(4, p), 5, 1);
  const Circuit k44 = embed(synth_complete_bipartite(2, 2, p), 5, 2);
  Circuit lower = controlled(k44, 0, Polarity::OnOne);
  lower = controlled(lower, 1, Polarity::OnZero);
  const Circuit c = seq(controlled(q4, 0, Polarity::OnZero), lower);
  const Graph g = disjoint_union(hypercube(4), complete_bipartite(2, 2));
  CHECK(dist(unitary_of(c), expm_graph(g, p)) <= 1e-10);
}

TEST_CASE("diagonalizer adjoint is its inverse") {
  const Circuit q = bipartite_diagonalizer(3, 2);
  CHECK(dist(unitary_of(adjoint(q)), unitary_of(q).adjoint()) <= 1e-13);
}

TEST_CASE("state application matches the unitary") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = wf_test::random_circuit(4, 25, rng);
    const Eigen::VectorXcd psi = wf_test::random_state(16, rng);
    const auto out = apply_to_state(c, StateVector(psi));
    CHECK((out.amplitudes() - unitary_of(c) * psi).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(out.amplitudes().norm() - 1.0) <= 1e-12);
  }
  const auto psi = StateVector::basis(4, 2);
  CHECK(apply_to_state(Circuit(2), psi).amplitudes() == psi.amplitudes());
  CHECK_THROWS_AS(apply_to_state(Circuit(3), psi), DimensionError);

  const WalkParams p(1.0, 2.1);
  const auto from_circuit = apply_to_state(synth_hypercube(4, p), StateVector::basis(16, 0));
  const auto from_oracle = evolve_state(hypercube(4).dense(), p, StateVector::basis(16, 0));
  CHECK((from_circuit.amplitudes() - from_oracle.amplitudes()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("unitary extraction respects the wire cap") {
  CHECK_THROWS_AS(unitary_of(Circuit(13)), ResourceError);
  CHECK_THROWS_AS(unitary_of(Circuit(5), 4), ResourceError);
  CHECK_NOTHROW(unitary_of(Circuit(4), 4));
}

TEST_CASE("gate accounting") {
  CHECK(gate_count(Circuit(3)) == GateCounts{});
  CHECK(two_qubit_cost(Circuit(3)) == 0);

  Circuit c(4);
  c.add(Gate::hadamard(0));
  c.add(Gate::not_gate(1).with_control(0, Polarity::OnOne));
  c.add(Gate::phase2(3, 1.0, 2.0).with_controls(
      {{0, Polarity::OnOne}, {1, Polarity::OnZero}, {2, Polarity::OnOne}}));
  c.add(Gate::global_phase(0.5));
  const GateCounts k = gate_count(c);
  CHECK(k.total == 4);
  CHECK(k.by_kind.at(GateKind::Hadamard) == 1);
  CHECK(k.by_kind.at(GateKind::Phase2) == 1);
  CHECK(k.by_arity.at(0) == 2);
  CHECK(k.by_arity.at(3) == 1);
  CHECK(two_qubit_cost(c) == 1 + 1 + 5 + 1);
  CHECK(angles(c) == std::vector<double>{1.0, 2.0, 0.5});
}

TEST_CASE("structure comparison ignores angles") {
  const Circuit a = synth_hypercube(3, WalkParams(1.0, 0.1));
  const Circuit b = synth_hypercube(3, WalkParams(1.0, 100.0 * std::numbers::pi));
  CHECK(same_structure(a, b));
  CHECK_FALSE(a == b);
  CHECK_FALSE(same_structure(a, synth_hypercube(2, WalkParams())));
}
