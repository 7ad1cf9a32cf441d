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

#include <optional>
#include <vector>

#include "ncstates/fock_space.hpp"
#include "ncstates/states.hpp"

namespace ncstates {

/// Classically driven cavity on resonance with an atom, coupled through
/// g (a^dag^M sigma_- + a^M sigma_+).
struct DriveParams {
  double amplitude = 0.0;  // A
  double omega = 1.0;
  double g = 1.0;
  int photons = 1;  // M

  /// Throws ValidationError unless A >= 0, omega > 0, g > 0, photons >= 1.
  static DriveParams make(double amplitude, double omega, double g, int photons = 1);

  /// A / omega.
  double displacement() const { return amplitude / omega; }
  /// omega^2 / (A^2 + omega^2).
  double predicted_eta() const;
};

/// Largest singular value, on the reliable leading block, of
///   U0^-1 a U0 - e^{-i omega t} D(-A/omega) a D(A/omega)
/// with U0 = exp(-i omega t N - i A t (a^dag + a)) built on a dim-level space.
/// The exact conjugate also carries the constant -A/omega, so for A > 0 this
/// stays at A/omega.
double displaced_frame_identity_defect(const DriveParams& drive, double t, int dim);

/// Same comparison against e^{-i omega t} D(-A/omega) a D(A/omega) - A/omega.
double heisenberg_identity_defect(const DriveParams& drive, double t, int dim);

struct DetectionOutcome {
  std::optional<FockVector> field;  // empty when nothing can be detected
  double probability = 0.0;
};

/// Starts from |0> x |e>, evolves for time t and conditions on finding the
/// atom in |g>. dim = 0 selects the working dimension automatically.
DetectionOutcome generate_by_detection(const DriveParams& drive, double t, int dim = 0);

struct GenerationRow {
  double a_over_omega;
  double predicted_eta;
  double fidelity;
  double detection_probability;
};

/// One row per A/omega at coupling time g t, with omega = g = 1.
std::vector<GenerationRow> generation_sweep(const std::vector<double>& a_over_omega, double gt,
                                            int photons = 1);

/// Kerr phase gamma / (S+1)! * N (N-1) ... (N-S) applied to |lambda>, then D(-lambda).
struct KerrParams {
  double gamma = 0.0;
  double lambda = 0.0;
  int order = 1;  // S

  /// Throws ValidationError unless gamma is finite, lambda >= 0 and order >= 1.
  static KerrParams make(double gamma, double lambda, int order = 1);

  /// |gamma| lambda^4 <= 0.1, the regime where first order is trustworthy.
  bool first_order_reliable() const;
};

FockVector kerr_output(const KerrParams& kerr, int dim = 0);

/// <eta(lambda), S+1 | (output - |0>)>: the amplitude the nonlinearity puts on
/// the intermediate state with S+1 photons.
Complex kerr_first_order_component(const KerrParams& kerr, int dim = 0);

/// First-order prediction of that amplitude:
/// i gamma / (S+1)! * lambda^(S+1) * sqrt((S+1)! L_{S+1}(-lambda^2)).
Complex kerr_first_order_prediction(const KerrParams& kerr);

}  // namespace ncstates
