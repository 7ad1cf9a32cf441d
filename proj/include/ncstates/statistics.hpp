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

// Photon-number statistics and quadrature squeezing, in closed form (from
// Laguerre ratios) and by direct summation over a state vector.

#pragma once

#include <optional>

#include "ncstates/fock_space.hpp"
#include "ncstates/states.hpp"

namespace ncstates {

struct MomentReport {
  double mean_n = 0.0;
  double mean_n2 = 0.0;
  /// (<N^2> - <N>^2) / <N> - 1. Reported as 0 for the vacuum, its
  /// lambda -> infinity limit.
  double mandel_q = 0.0;
  /// <N(N-1)> / <N>^2; empty when <N> = 0.
  std::optional<double> g2;

  double variance() const { return mean_n2 - mean_n * mean_n; }
};

/// x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)).
struct QuadratureReport {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  /// Signal-to-quantum-noise ratio <x>^2 / (Delta x)^2.
  double snr = 0.0;
};

MomentReport moments_closed(const IntermediateParams& params);
MomentReport moments_direct(const FockVector& state);

QuadratureReport quadratures_closed(const IntermediateParams& params);
/// Requires two empty Fock levels above the state's support; throws
/// TruncationError otherwise.
QuadratureReport quadratures_direct(const FockVector& state);

/// Mandel Q of a binomial state, which is -eta for every M.
inline double binomial_mandel_q(double eta) { return -eta; }

}  // namespace ncstates
