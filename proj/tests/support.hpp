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

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "walkforge/circuit.hpp"
#include "walkforge/expr.hpp"
#include "walkforge/graph.hpp"
#include "walkforge/spectral.hpp"

namespace wf_test {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

// Brute-force reference: dense eigendecomposition straight from Eigen, no
// sorting, no reuse of the library's solver.
inline Eigen::MatrixXcd reference_walk(const walkforge::Graph& g, double gamma, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.dense());
  const Eigen::MatrixXd& v = es.eigenvectors();
  Eigen::VectorXcd phase(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    phase(k) = std::exp(std::complex<double>(0.0, -gamma * t * es.eigenvalues()(k)));
  }
  return v.cast<std::complex<double>>() * phase.asDiagonal() * v.transpose().cast<std::complex<double>>();
}

inline double dist(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::VectorXcd random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = {n(rng), n(rng)};
  return v / v.norm();
}

// Random gate list over every kind, with up to three mixed-polarity controls.
inline walkforge::Circuit random_circuit(int wires, int gates, std::mt19937_64& rng) {
  using walkforge::Gate;
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> wire(0, wires - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> angle(-40.0, 40.0);
  walkforge::Circuit c(wires);
  for (int i = 0; i < gates; ++i) {
    Gate g;
    switch (kind(rng)) {
      case 0: g = Gate::hadamard(wire(rng)); break;
      case 1: g = Gate::not_gate(wire(rng)); break;
      case 2: g = Gate::phase2(wire(rng), angle(rng), angle(rng)); break;
      default: g = Gate::global_phase(angle(rng)); break;
    }
    const int n_ctrl = std::uniform_int_distribution<int>(0, std::min(3, wires - 1))(rng);
    for (int k = 0; k < n_ctrl; ++k) {
      const int w = wire(rng);
      bool used = w == g.target;
      for (const auto& ctl : g.controls) used = used || ctl.wire == w;
      if (used) continue;
      g = g.with_control(w, coin(rng) ? walkforge::Polarity::OnOne : walkforge::Polarity::OnZero);
    }
    c.add(g);
  }
  return c;
}

// Random well-formed expression tree; leaves span the full parameter range.
inline walkforge::WalkExpr random_expr(std::mt19937_64& rng, int depth) {
  using E = walkforge::WalkExpr;
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 5);
  std::uniform_int_distribution<int> small(1, walkforge::kMaxLeafExponent);
  auto sub = [&] { return random_expr(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: return E::path2();
    case 1: return E::complete(small(rng));
    case 2: {
      const int m1 = small(rng);
      return E::bipartite(m1, std::uniform_int_distribution<int>(0, m1)(rng));
    }
    case 3: return E::star(small(rng));
    case 4: return E::hypercube(small(rng));
    case 5: return E::book(small(rng));
    case 6: return E::cartesian(sub(), sub());
    case 7: return E::interdep_identity(sub());
    case 8: return E::interdep_complete(sub(), sub());
    default: return E::commuting_sum(sub(), sub());
  }
}

// Sends basis index i to perm[i].
inline Eigen::MatrixXcd permutation(const std::vector<std::size_t>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(static_cast<Eigen::Index>(perm[i]), i) = 1.0;
  return p;
}

}  // namespace wf_test
