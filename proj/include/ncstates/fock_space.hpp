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

// Truncated single-mode Fock space: state vectors, ladder operators and
// displacement operators on the span of |0>, ..., |dim-1>.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ncstates {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;

/// Amplitudes c_n of a field state over photon numbers n = 0 .. dim-1.
class FockVector {
 public:
  /// Throws ValidationError when empty.
  explicit FockVector(Eigen::VectorXcd amplitudes);

  static FockVector vacuum(int dim);
  static FockVector number_state(int n, int dim);
  static FockVector from_real(const std::vector<double>& amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  Complex operator[](int n) const { return amplitudes_[n]; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  bool is_normalized(double tol = 1e-10) const;
  FockVector normalized() const;

  /// Zero-pads to a larger dim, or drops trailing levels when shrinking.
  /// Throws TruncationError if the dropped levels carry more than `tol` mass.
  FockVector resized(int new_dim, double tol = 1e-12) const;

  /// Highest n with |c_n|^2 > tol, or -1 for the zero vector.
  int highest_occupied(double tol = 0.0) const;

  /// |c_n|^2 for every n.
  std::vector<double> probabilities() const;

  /// <this|other>. Both vectors are padded to the common dimension.
  Complex inner(const FockVector& other) const;

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Fidelity |<a|b>|^2 of two pure states.
double fidelity(const FockVector& a, const FockVector& b);

/// || b - <a|b> a ||, the component of b orthogonal to a. For normalized
/// inputs this is sqrt(1 - fidelity), evaluated without cancellation.
double orthogonal_residual(const FockVector& a, const FockVector& b);

struct LadderMatrices {
  OperatorMatrix a;
  OperatorMatrix a_dagger;
  OperatorMatrix number;
};

/// a[n-1, n] = sqrt(n), a_dagger = a^T, number = diag(0 .. dim-1).
LadderMatrices ladder_matrices(int dim);

/// Truncation policy: working dimension for a state whose support ends at
/// photon number `max_photons` displaced by `alpha`,
///   max(4 * ceil(M + |alpha|^2 + 3 |alpha| sqrt(M+1)), M + 32).
int working_dimension(int max_photons, double abs_alpha);

/// Inverse of the policy: the largest photon number M whose working
/// dimension for displacement `abs_alpha` fits in `dim`, capped so that at
/// least kGuardBand levels are excluded. Returns -1 when nothing fits.
int reliable_levels(int dim, double abs_alpha);

inline constexpr int kGuardBand = 8;

/// exp(X) by scaling and squaring with a truncated Taylor series.
OperatorMatrix expm(const OperatorMatrix& generator);

/// exp(X) for anti-Hermitian X. Throws NumericalError if the result's
/// unitarity defect exceeds 1e-10.
OperatorMatrix unitary_expm(const OperatorMatrix& generator);

/// D(alpha) = exp(alpha a^dagger - conj(alpha) a) on the truncated space.
OperatorMatrix displacement_matrix(Complex alpha, int dim);

struct CoherentVector {
  FockVector state;
  double tail_mass;  // Poisson weight on n >= dim, before renormalization
};

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized on the truncated
/// space. Throws TruncationError if the dropped tail mass is >= 1e-12.
CoherentVector coherent_vector_with_tail(Complex alpha, int dim);
FockVector coherent_vector(Complex alpha, int dim);

/// D(beta)|k>, i.e. column k of displacement_matrix(beta, dim).
FockVector displaced_number_state(Complex beta, int k, int dim);

/// Applies an operator to a state, padding the state to the operator's dim.
FockVector apply_operator(const OperatorMatrix& op, const FockVector& state);

/// Largest singular value of (lhs - rhs) restricted to the leading
/// `block` x `block` corner.
double block_operator_defect(const OperatorMatrix& lhs, const OperatorMatrix& rhs, int block);

}  // namespace ncstates
