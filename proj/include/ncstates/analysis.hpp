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

#include "ncstates/quasiprob.hpp"

namespace ncstates {

/// Half the l1 distance; the shorter sequence is padded with zeros.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

/// q[n] = p[n - k], with k leading zeros.
std::vector<double> shift_up(const std::vector<double>& p, int k);

/// Pointwise average, padded to the longer length.
std::vector<double> average(const std::vector<double>& p, const std::vector<double>& q);

struct Band {
  int lo = 0;
  int hi = 0;  // inclusive
};

/// mean +- width * sd of the distribution, clipped to its support.
Band central_band(const std::vector<double>& p, double width = 3.0);

/// For every interior local minimum in the band, its value divided by the
/// smaller of the two neighbouring local maxima. Returns the largest such
/// ratio, or nothing if the band holds no bracketed minimum.
std::optional<double> worst_minimum_ratio(const std::vector<double>& p, Band band);

/// sum |approx - exact| / sum exact over the band.
double band_relative_deviation(const std::vector<double>& approx, const std::vector<double>& exact,
                               Band band);

struct RevivalReport {
  double collapse_tau;    // first time the envelope falls below the threshold
  double collapse_floor;  // smallest envelope between collapse and revival
  double revival_tau;     // argmax |signal| after the collapse
  double revival_peak;
};

/// Envelope = running max of |signal| over +-window_points samples. Throws
/// NumericalError when the envelope never drops below `threshold`.
RevivalReport detect_revival(const std::vector<double>& tau, const std::vector<double>& signal,
                             int window_points, double threshold = 0.3);

struct ContourWidths {
  double x_width;
  double y_width;
};

/// Extent of the level set at `fraction` of the field maximum, with crossings
/// located by linear interpolation along grid rows and columns.
ContourWidths contour_widths(const ScalarField& field, double fraction = 0.5);

/// `count` evenly spaced values from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace ncstates
