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

// Dense reference oracle for exp(-i t gamma A).
//
// Convention: h = q * diag(lambda) * q^T with eigenvectors in the columns of
// q, so the walk is U(t) = q * diag(exp(-i t gamma lambda)) * q^T. A circuit
// "diagonalizer" V maps eigenvectors onto basis states, i.e. V = q^T.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

#include "walkforge/config.hpp"
#include "walkforge/graph.hpp"

namespace walkforge {

using Complex = std::complex<double>;

struct SpectralDecomposition {
  Eigen::MatrixXd q;       // orthonormal eigenvectors as columns
  Eigen::VectorXd lambda;  // descending, ties in Jacobi output order

  Eigen::MatrixXd reconstruct() const;
};

class StateVector {
 public:
  /// Rejects vectors whose norm differs from 1 by more than the tolerance.
  explicit StateVector(Eigen::VectorXcd amplitudes,
                       double tol = default_tolerances().state_norm);

  static StateVector basis(std::size_t dim, std::size_t index);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  Eigen::VectorXd probabilities() const;

 private:
  Eigen::VectorXcd amplitudes_;
};

enum class EigenSolver {
  Automatic,    // Jacobi up to kJacobiMaxDim, tridiagonal QL above
  Jacobi,       // cyclic Jacobi rotations, authored here
  Tridiagonal,  // Householder + implicit QL (Eigen::SelfAdjointEigenSolver)
};

/// Largest dimension the automatic choice hands to the Jacobi solver.
inline constexpr Eigen::Index kJacobiMaxDim = 128;

/// Cyclic Jacobi; stops when the off-diagonal Frobenius norm drops below
/// tol.jacobi_off_diagonal or a sweep finds nothing above rounding level.
SpectralDecomposition eig_jacobi(const Eigen::MatrixXd& h,
                                 const Tolerances& tol = default_tolerances(),
                                 const Limits& limits = default_limits());

SpectralDecomposition eig_tridiagonal(const Eigen::MatrixXd& h,
                                      const Tolerances& tol = default_tolerances());

/// Eigendecomposition of a real symmetric matrix, eigenvalues descending.
SpectralDecomposition eig_hermitian(const Eigen::MatrixXd& h,
                                    EigenSolver solver = EigenSolver::Automatic,
                                    const Tolerances& tol = default_tolerances(),
                                    const Limits& limits = default_limits());

/// q * diag(exp(-i t gamma lambda)) * q^T from a precomputed decomposition.
Eigen::MatrixXcd expm_from(const SpectralDecomposition& d, const WalkParams& params);

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXd& h, const WalkParams& params);
Eigen::MatrixXcd expm_graph(const Graph& g, const WalkParams& params);

StateVector evolve_state(const Eigen::MatrixXd& h, const WalkParams& params,
                         const StateVector& psi0);

/// evolve_state with a precomputed decomposition.
StateVector evolve_from(const SpectralDecomposition& d, const WalkParams& params,
                        const StateVector& psi0);

struct DistanceReport {
  double max_entrywise = 0.0;
  double spectral = 0.0;
};

double max_entrywise_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// ||u - v||_2 as the square root of the largest eigenvalue of (u-v)^dagger (u-v).
double spectral_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

DistanceReport unitary_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// max |U^dagger U - I| entrywise.
double unitarity_defect(const Eigen::MatrixXcd& u);

/// Max entrywise distance between exp(-it(A+B)) and exp(-itA) exp(-itB).
double product_formula_gap(const Graph& a, const Graph& b, const WalkParams& params);

}  // namespace walkforge
