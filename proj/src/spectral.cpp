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

#include "walkforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "walkforge/error.hpp"

namespace walkforge {

Eigen::MatrixXd SpectralDecomposition::reconstruct() const {
  return q * lambda.asDiagonal() * q.transpose();
}

StateVector::StateVector(Eigen::VectorXcd amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= tol)) {
    throw PreconditionError("state vector norm " + std::to_string(norm) + " is not 1");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  psi(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(psi));
}

Eigen::VectorXd StateVector::probabilities() const { return amplitudes_.cwiseAbs2(); }

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Applies the plane rotation to columns p and q of m in place.
inline void rotate_columns(Eigen::MatrixXd& m, Eigen::Index p, Eigen::Index q, double c,
                           double s) {
  double* cp = m.col(p).data();
  double* cq = m.col(q).data();
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double x = cp[k];
    const double y = cq[k];
    cp[k] = c * x - s * y;
    cq[k] = s * x + c * y;
  }
}

}  // namespace

namespace {

void check_symmetric(const Eigen::MatrixXd& h, const Tolerances& tol) {
  if (h.rows() != h.cols()) throw DimensionError("eig_hermitian: matrix is not square");
  const double asym = h.size() == 0 ? 0.0 : (h - h.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.symmetry) {
    throw PreconditionError("eig_hermitian: input is not symmetric (defect " +
                            std::to_string(asym) + ")");
  }
}

SpectralDecomposition sorted_descending(const Eigen::VectorXd& values,
                                        const Eigen::MatrixXd& vectors) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return values(i) > values(j); });
  SpectralDecomposition d;
  d.q.resize(n, n);
  d.lambda.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    d.lambda(k) = values(src);
    d.q.col(k) = vectors.col(src);
  }
  return d;
}

}  // namespace

SpectralDecomposition eig_jacobi(const Eigen::MatrixXd& h, const Tolerances& tol,
                                 const Limits& limits) {
  check_symmetric(h, tol);
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd a = 0.5 * (h + h.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  // Elements below this floor sit at rounding level for the whole matrix and
  // are zeroed instead of rotated.
  const double floor = 1e-15 * std::max(1.0, a.norm());

  int sweep = 0;
  while (off_diagonal_norm(a) > tol.jacobi_off_diagonal) {
    if (sweep++ >= limits.max_jacobi_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(limits.max_jacobi_sweeps) + " sweeps");
    }
    std::size_t rotations = 0;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        if (std::abs(apq) <= floor) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        if (!std::isfinite(t)) t = 0.5 / theta;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        rotate_columns(a, p, q, c, s);
        a.row(p) = a.col(p).transpose();
        a.row(q) = a.col(q).transpose();
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        rotate_columns(v, p, q, c, s);
        ++rotations;
      }
    }
    if (rotations == 0) break;
  }
  return sorted_descending(a.diagonal(), v);
}

SpectralDecomposition eig_tridiagonal(const Eigen::MatrixXd& h, const Tolerances& tol) {
  check_symmetric(h, tol);
  const Eigen::MatrixXd a = 0.5 * (h + h.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("tridiagonal QL eigensolver did not converge");
  }
  return sorted_descending(solver.eigenvalues(), solver.eigenvectors());
}

SpectralDecomposition eig_hermitian(const Eigen::MatrixXd& h, EigenSolver solver,
                                    const Tolerances& tol, const Limits& limits) {
  if (solver == EigenSolver::Automatic) {
    solver = h.rows() <= kJacobiMaxDim ? EigenSolver::Jacobi : EigenSolver::Tridiagonal;
  }
  return solver == EigenSolver::Jacobi ? eig_jacobi(h, tol, limits)
                                       : eig_tridiagonal(h, tol);
}

Eigen::MatrixXcd expm_from(const SpectralDecomposition& d, const WalkParams& params) {
  const Eigen::VectorXd phase = -(params.gamma * params.t) * d.lambda;
  const Eigen::VectorXd cosines = phase.array().cos();
  const Eigen::VectorXd sines = phase.array().sin();
  const Eigen::MatrixXd re = d.q * cosines.asDiagonal() * d.q.transpose();
  const Eigen::MatrixXd im = d.q * sines.asDiagonal() * d.q.transpose();
  Eigen::MatrixXcd u(re.rows(), re.cols());
  u.real() = re;
  u.imag() = im;
  return u;
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXd& h, const WalkParams& params) {
  return expm_from(eig_hermitian(h), params);
}

Eigen::MatrixXcd expm_graph(const Graph& g, const WalkParams& params) {
  return expm_hermitian(g.dense(), params);
}

StateVector evolve_from(const SpectralDecomposition& d, const WalkParams& params,
                        const StateVector& psi0) {
  if (static_cast<std::size_t>(d.q.rows()) != psi0.dim()) {
    throw DimensionError("evolve_state: dimension mismatch");
  }
  const Eigen::VectorXd phase = -(params.gamma * params.t) * d.lambda;
  Eigen::VectorXcd coeff = d.q.transpose().cast<Complex>() * psi0.amplitudes();
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    coeff(k) *= std::polar(1.0, phase(k));
  }
  Eigen::VectorXcd out = d.q.cast<Complex>() * coeff;
  return StateVector(std::move(out), default_tolerances().unitarity);
}

StateVector evolve_state(const Eigen::MatrixXd& h, const WalkParams& params,
                         const StateVector& psi0) {
  if (static_cast<std::size_t>(h.rows()) != psi0.dim()) {
    throw DimensionError("evolve_state: dimension mismatch");
  }
  return evolve_from(eig_hermitian(h), params, psi0);
}

double max_entrywise_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DimensionError("unitary_distance: dimension mismatch");
  }
  if (u.size() == 0) return 0.0;
  return (u - v).cwiseAbs().maxCoeff();
}

namespace {

// Dimension up to which the spectral norm is taken from a full Jacobi
// decomposition of the real embedding of (u-v)^dagger (u-v).
constexpr Eigen::Index kExactSpectralDim = 128;

double largest_eigenvalue_exact(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd embed(2 * n, 2 * n);
  embed.topLeftCorner(n, n) = m.real();
  embed.bottomRightCorner(n, n) = m.real();
  embed.topRightCorner(n, n) = -m.imag();
  embed.bottomLeftCorner(n, n) = m.imag();
  embed = 0.5 * (embed + embed.transpose()).eval();
  return eig_jacobi(embed).lambda(0);
}

// Power iteration on (d^dagger d) with a fixed start vector; the value is
// a lower bound that converges from below.
double largest_eigenvalue_power(const Eigen::MatrixXcd& d) {
  const Eigen::Index n = d.cols();
  Eigen::VectorXcd x(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    x(k) = Complex(1.0 + 0.001 * static_cast<double>(k % 97), 0.0);
  }
  x.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < 300; ++iter) {
    Eigen::VectorXcd y = d.adjoint() * (d * x);
    const double next = x.dot(y).real();
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    if (iter > 10 && std::abs(next - estimate) <= 1e-9 * std::max(next, 1e-300)) {
      return next;
    }
    estimate = next;
  }
  return estimate;
}

}  // namespace

double spectral_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DimensionError("unitary_distance: dimension mismatch");
  }
  if (u.size() == 0) return 0.0;
  const Eigen::MatrixXcd d = u - v;
  if (d.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  const double top = d.rows() <= kExactSpectralDim
                         ? largest_eigenvalue_exact(d.adjoint() * d)
                         : largest_eigenvalue_power(d);
  return std::sqrt(std::max(top, 0.0));
}

DistanceReport unitary_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  return {max_entrywise_distance(u, v), spectral_distance(u, v)};
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return max_entrywise_distance(u.adjoint() * u, id);
}

double product_formula_gap(const Graph& a, const Graph& b, const WalkParams& params) {
  if (a.dim() != b.dim()) throw DimensionError("product_formula_gap: dimension mismatch");
  const Eigen::MatrixXd ha = a.dense();
  const Eigen::MatrixXd hb = b.dense();
  const Eigen::MatrixXcd joint = expm_hermitian(ha + hb, params);
  const Eigen::MatrixXcd split = expm_hermitian(ha, params) * expm_hermitian(hb, params);
  return max_entrywise_distance(joint, split);
}

}  // namespace walkforge
