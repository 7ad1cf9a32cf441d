// Copyright 2026 The ncstates Authors
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

#include "ncstates/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncstates/errors.hpp"
#include "ncstates/special_functions.hpp"

namespace ncstates {
namespace {

void check_dim(int dim, const char* where) {
  if (dim < 1) throw ValidationError(std::string(where) + ": dim must be >= 1");
}

double one_norm(const OperatorMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

FockVector::FockVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw ValidationError("FockVector: dim must be >= 1");
}

FockVector FockVector::vacuum(int dim) { return number_state(0, dim); }

FockVector FockVector::number_state(int n, int dim) {
  check_dim(dim, "number_state");
  if (n < 0 || n >= dim) throw ValidationError("number_state: n outside [0, dim)");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v[n] = 1.0;
  return FockVector(std::move(v));
}

FockVector FockVector::from_real(const std::vector<double>& amplitudes) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
  for (std::size_t n = 0; n < amplitudes.size(); ++n) v[n] = amplitudes[n];
  return FockVector(std::move(v));
}

bool FockVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) < tol;
}

FockVector FockVector::normalized() const {
  const double norm = amplitudes_.norm();
  if (norm == 0.0) throw NumericalError("FockVector: cannot normalize the zero vector");
  return FockVector(amplitudes_ / norm);
}

FockVector FockVector::resized(int new_dim, double tol) const {
  check_dim(new_dim, "FockVector::resized");
  if (new_dim < dim()) {
    const double dropped = amplitudes_.tail(dim() - new_dim).squaredNorm();
    if (dropped > tol) {
      throw TruncationError("FockVector::resized: dropping " + std::to_string(dim() - new_dim) +
                            " levels would lose mass " + std::to_string(dropped));
    }
    return FockVector(amplitudes_.head(new_dim));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(new_dim);
  v.head(dim()) = amplitudes_;
  return FockVector(std::move(v));
}

int FockVector::highest_occupied(double tol) const {
  for (int n = dim() - 1; n >= 0; --n) {
    if (std::norm(amplitudes_[n]) > tol) return n;
  }
  return -1;
}

std::vector<double> FockVector::probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(dim()));
  for (int n = 0; n < dim(); ++n) p[n] = std::norm(amplitudes_[n]);
  return p;
}

Complex FockVector::inner(const FockVector& other) const {
  const int common = std::min(dim(), other.dim());
  return amplitudes_.head(common).dot(other.amplitudes_.head(common));
}

double fidelity(const FockVector& a, const FockVector& b) {
  return std::norm(a.inner(b));
}

double orthogonal_residual(const FockVector& a, const FockVector& b) {
  const int common = std::max(a.dim(), b.dim());
  const FockVector pa = a.resized(common);
  const FockVector pb = b.resized(common);
  const Complex overlap = pa.inner(pb);
  return (pb.amplitudes() - overlap * pa.amplitudes()).norm();
}

LadderMatrices ladder_matrices(int dim) {
  check_dim(dim, "ladder_matrices");
  LadderMatrices ops{OperatorMatrix::Zero(dim, dim), OperatorMatrix::Zero(dim, dim),
                     OperatorMatrix::Zero(dim, dim)};
  for (int n = 1; n < dim; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.a_dagger = ops.a.transpose();
  for (int n = 0; n < dim; ++n) ops.number(n, n) = static_cast<double>(n);
  return ops;
}

int working_dimension(int max_photons, double abs_alpha) {
  if (max_photons < 0) throw ValidationError("working_dimension: max_photons must be >= 0");
  if (!(abs_alpha >= 0.0) || !std::isfinite(abs_alpha)) {
    throw ValidationError("working_dimension: |alpha| must be finite");
  }
  const double spread = max_photons + abs_alpha * abs_alpha +
                        3.0 * abs_alpha * std::sqrt(max_photons + 1.0);
  return std::max(4 * static_cast<int>(std::ceil(spread)), max_photons + 32);
}

int reliable_levels(int dim, double abs_alpha) {
  int best = -1;
  for (int m = 0; m < dim - kGuardBand; ++m) {
    if (working_dimension(m, abs_alpha) > dim) break;
    best = m;
  }
  return best;
}

OperatorMatrix expm(const OperatorMatrix& generator) {
  if (generator.rows() != generator.cols()) throw ValidationError("expm: matrix must be square");
  const Eigen::Index dim = generator.rows();
  const double norm = one_norm(generator);
  if (!std::isfinite(norm)) throw NumericalError("expm: non-finite input");
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const OperatorMatrix scaled = generator / std::ldexp(1.0, squarings);

  OperatorMatrix result = OperatorMatrix::Identity(dim, dim);
  OperatorMatrix term = OperatorMatrix::Identity(dim, dim);
  OperatorMatrix next(dim, dim);
  bool converged = false;
  for (int k = 1; k <= 60; ++k) {
    next.noalias() = term * scaled;
    term = next / static_cast<double>(k);
    result += term;
    if (one_norm(term) < 1e-18) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalError("expm: Taylor series did not converge");
  for (int s = 0; s < squarings; ++s) {
    next.noalias() = result * result;
    result.swap(next);
  }
  return result;
}

OperatorMatrix unitary_expm(const OperatorMatrix& generator) {
  OperatorMatrix u = expm(generator);
  const Eigen::Index dim = u.rows();
  OperatorMatrix gram(dim, dim);
  gram.noalias() = u.adjoint() * u;
  gram -= OperatorMatrix::Identity(dim, dim);
  const double defect = gram.cwiseAbs().maxCoeff();
  if (!(defect < 1e-10)) {
    throw NumericalError("unitary_expm: unitarity defect " + std::to_string(defect));
  }
  return u;
}

OperatorMatrix displacement_matrix(Complex alpha, int dim) {
  check_dim(dim, "displacement_matrix");
  if (alpha == Complex(0.0)) return OperatorMatrix::Identity(dim, dim);
  OperatorMatrix generator = OperatorMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    generator(n, n - 1) = alpha * s;              // alpha a^dagger
    generator(n - 1, n) = -std::conj(alpha) * s;  // -conj(alpha) a
  }
  return unitary_expm(generator);
}

CoherentVector coherent_vector_with_tail(Complex alpha, int dim) {
  check_dim(dim, "coherent_vector");
  const double r = std::abs(alpha);
  if (r == 0.0) return {FockVector::vacuum(dim), 0.0};
  const double phase = std::arg(alpha);
  const double log_r = std::log(r);
  const double r2 = r * r;
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n) {
    const double log_mag = -0.5 * r2 + n * log_r - 0.5 * log_factorial(n);
    v[n] = std::polar(std::exp(log_mag), n * phase);
  }
  // Poisson tail P(N >= dim), summed upward until negligible.
  double tail = 0.0;
  for (int n = dim;; ++n) {
    const double term = std::exp(-r2 + 2.0 * n * log_r - log_factorial(n));
    tail += term;
    if (n > r2 && (term == 0.0 || term < 1e-30 * tail)) break;
    if (n > dim + 100000) break;
  }
  if (tail >= 1e-12) {
    throw TruncationError("coherent_vector: tail mass " + std::to_string(tail) +
                          " beyond dim " + std::to_string(dim) + " for |alpha| = " +
                          std::to_string(r));
  }
  v /= v.norm();
  return {FockVector(std::move(v)), tail};
}

FockVector coherent_vector(Complex alpha, int dim) {
  return coherent_vector_with_tail(alpha, dim).state;
}

FockVector displaced_number_state(Complex beta, int k, int dim) {
  check_dim(dim, "displaced_number_state");
  if (k < 0 || k >= dim) throw ValidationError("displaced_number_state: k outside [0, dim)");
  const double spread = std::norm(beta) + k;
  if (spread > dim / 4.0) {
    throw TruncationError("displaced_number_state: |beta|^2 + k = " + std::to_string(spread) +
                          " exceeds dim/4");
  }
  const OperatorMatrix d = displacement_matrix(beta, dim);
  return FockVector(d.col(k));
}

FockVector apply_operator(const OperatorMatrix& op, const FockVector& state) {
  const int dim = static_cast<int>(op.rows());
  const FockVector padded = state.resized(dim);
  return FockVector(op * padded.amplitudes());
}

double block_operator_defect(const OperatorMatrix& lhs, const OperatorMatrix& rhs, int block) {
  if (block < 1 || block > lhs.rows() || block > rhs.rows()) {
    throw ValidationError("block_operator_defect: block outside matrix bounds");
  }
  const OperatorMatrix diff = lhs.topLeftCorner(block, block) - rhs.topLeftCorner(block, block);
  Eigen::JacobiSVD<OperatorMatrix> svd(diff);
  return svd.singularValues()(0);
}

}  // namespace ncstates
