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

#include <cstddef>

namespace walkforge {

/// Every numerical tolerance used by the oracle, the IR and the harness.
struct Tolerances {
  double symmetry = 1e-12;          // input symmetry check for eig_hermitian
  double orthonormality = 1e-12;    // q^T q = I, entrywise
  double reconstruction = 1e-10;    // q diag(lambda) q^T = h, entrywise
  double unitarity = 1e-11;         // U^dagger U = I, entrywise
  double jacobi_off_diagonal = 1e-13;  // Frobenius norm of the off-diagonal
  double state_norm = 1e-12;        // | ||psi|| - 1 |
  double verification = 1e-9;       // circuit vs oracle, max entrywise
  double exact = 1e-10;             // "exact" composite identities
};

/// Desk-scale limits.
struct Limits {
  std::size_t max_graph_dim = std::size_t{1} << 16;
  int max_unitary_wires = 12;
  int max_jacobi_sweeps = 100;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace walkforge
