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

// Intermediate number-coherent states ||eta, M>, and the binomial and
// photon-added coherent families they are compared against.

#pragma once

#include <vector>

#include "ncstates/fock_space.hpp"

namespace ncstates {

/// (eta, M) with derived lambda = sqrt((1 - eta) / eta).
class IntermediateParams {
 public:
  /// Requires 0 < eta <= 1 and 0 <= M <= kMaxLaguerreDegree.
  static IntermediateParams from_eta(double eta, int m);
  /// eta = 1 / (1 + lambda^2); requires lambda >= 0.
  static IntermediateParams from_lambda(double lambda, int m);

  double eta() const { return eta_; }
  int m() const { return m_; }
  double lambda() const { return lambda_; }
  double lambda_sq() const { return lambda_sq_; }
  /// sqrt(eta) * M, the eigenvalue of sqrt(eta) N + sqrt(1 - eta) a.
  double eigenvalue() const;

  IntermediateParams with_m(int m) const;

 private:
  IntermediateParams(double eta, int m, double lambda_sq);

  double eta_;
  int m_;
  double lambda_sq_;
  double lambda_;
};

/// ||eta, M> on a space of dimension `dim` (>= M+1). Amplitudes
///   C_n = lambda^{M-n} M! / ((M-n)! sqrt(n!)) / sqrt(M! L_M(-lambda^2))
/// for n <= M, zero above. Evaluated in the log domain; all C_n >= 0.
FockVector intermediate_state(const IntermediateParams& params, int dim);
FockVector intermediate_state(const IntermediateParams& params);

/// || (sqrt(eta) N + sqrt(1-eta) a) psi - sqrt(eta) M psi ||.
double eigen_residual(const FockVector& state, const IntermediateParams& params);

/// Binomial state amplitudes sqrt(C(M,n) eta^n (1-eta)^{M-n}), eta in [0, 1].
FockVector binomial_state(double eta, int m, int dim);

/// a^dagger^M |lambda> / sqrt(M! L_M(-lambda^2)). With dim <= 0 the
/// truncation policy picks the dimension. Throws TruncationError when more
/// than 1e-12 of the norm lies beyond dim.
FockVector photon_added_coherent(double lambda, int m, int dim = 0);

struct LoweringResult {
  double coefficient;
  IntermediateParams result;
};

/// a^k ||eta, M> = coefficient * ||eta, M-k>. For k > M the coefficient is
/// zero and `result` is ||eta, 0>.
LoweringResult lower_k(const IntermediateParams& params, int k);

/// First `terms` coefficients of the general eigenvector series for a
/// complex eigenvalue beta, normalized so that c_0 = 1. Not a state: the
/// series is only truncated for beta = sqrt(eta) M.
std::vector<Complex> eigen_series_prefix(double eta, Complex beta, int terms);

}  // namespace ncstates
