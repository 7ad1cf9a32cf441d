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

#pragma once

#include <vector>

#include "ncstates/fock_space.hpp"
#include "ncstates/states.hpp"

namespace ncstates {

/// Two-photon coupling g and detuning delta = omega_0 - 2 omega.
struct JcmParams {
  double g = 1.0;
  double delta = 0.0;

  /// Throws ValidationError unless g > 0 and both values are finite.
  static JcmParams make(double g, double delta = 0.0);

  /// g sqrt((n+1)(n+2)).
  double rabi(int n) const;
  /// sqrt(delta^2 / 4 + rabi(n)^2).
  double detuned_rabi(int n) const;
};

/// Field amplitudes conditioned on the atom being excited or in the ground state.
struct JointAtomField {
  FockVector e_branch;
  FockVector g_branch;
  double time = 0.0;

  double excited_population() const { return e_branch.norm_squared(); }
  double ground_population() const { return g_branch.norm_squared(); }
};

/// Reduced atomic state. rho11 is the ground and rho22 the excited population;
/// rho12 is the coefficient of |g><e|.
struct AtomicDensity {
  double rho11 = 0.0;
  double rho22 = 0.0;
  Complex rho12 = 0.0;
};

/// Evolves |e> x initial. The ground branch has two more levels than the input.
JointAtomField evolve(const JcmParams& params, const FockVector& initial, double t);

/// Excited minus ground population.
double inversion(const JcmParams& params, const FockVector& initial, double t);

AtomicDensity atomic_density(const JointAtomField& joint);
AtomicDensity atomic_density(const JcmParams& params, const FockVector& initial, double t);

/// The resonant coherence written without the branch phases:
/// sum_n conj(c_{n+2}) c_n cos(rabi(n+2) t) sin(rabi(n) t). Requires delta = 0.
/// For real amplitudes it equals i * atomic_density(...).rho12.
Complex atomic_coherence_literal(const JcmParams& params, const FockVector& initial, double t);

/// Von Neumann entropy with 0 ln 0 = 0.
double entropy(const AtomicDensity& rho);

/// |E><E| + |G><G| on the common dimension.
OperatorMatrix field_density_matrix(const JointAtomField& joint);
/// Entropy from the eigenvalues of the explicit field density matrix.
double field_entropy(const JointAtomField& joint);

/// Resonant Husimi function of the cavity field. Requires delta = 0.
double field_qfunction(const JcmParams& params, const FockVector& initial, double t,
                       Complex beta);

/// P_n(t) for n = 0 .. dim + 1. Requires delta = 0.
std::vector<double> photon_distribution(const JcmParams& params, const FockVector& initial,
                                        double t);

/// Large-<N> approximation of P_n at g t = pi / 4 for the intermediate state,
/// for n = 0 .. M + 2.
std::vector<double> approx_pn_quarter(const IntermediateParams& params);

/// xi = pi / (8 (n - 1/2)). At n the phase (n - 1/2)(pi/4 - xi) becomes the exact
/// multiple (n - 1) pi / 4, so the sin^2 comb around n hits exact zeros.
double perfect_oscillation_shift(int n_band_center);

}  // namespace ncstates
