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

#include "ncstates/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncstates/errors.hpp"

namespace ncstates {

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = k < p.size() ? p[k] : 0.0;
    const double b = k < q.size() ? q[k] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

std::vector<double> shift_up(const std::vector<double>& p, int k) {
  if (k < 0) throw ValidationError("shift_up: k must be >= 0");
  std::vector<double> q(p.size() + k, 0.0);
  std::copy(p.begin(), p.end(), q.begin() + k);
  return q;
}

std::vector<double> average(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out(std::max(p.size(), q.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double a = k < p.size() ? p[k] : 0.0;
    const double b = k < q.size() ? q[k] : 0.0;
    out[k] = 0.5 * (a + b);
  }
  return out;
}

Band central_band(const std::vector<double>& p, double width) {
  double total = 0.0, mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    total += p[n];
    mean += n * p[n];
  }
  if (!(total > 0.0)) throw ValidationError("central_band: empty distribution");
  mean /= total;
  double var = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) var += (n - mean) * (n - mean) * p[n];
  const double sd = std::sqrt(var / total);
  const int last = static_cast<int>(p.size()) - 1;
  Band band;
  band.lo = std::clamp(static_cast<int>(std::ceil(mean - width * sd)), 0, last);
  band.hi = std::clamp(static_cast<int>(std::floor(mean + width * sd)), 0, last);
  return band;
}

std::optional<double> worst_minimum_ratio(const std::vector<double>& p, Band band) {
  const int size = static_cast<int>(p.size());
  std::vector<int> maxima;
  for (int n = 1; n + 1 < size; ++n) {
    if (p[n] >= p[n - 1] && p[n] > p[n + 1]) maxima.push_back(n);
  }
  std::optional<double> worst;
  for (int n = std::max(band.lo, 1); n <= std::min(band.hi, size - 2); ++n) {
    if (!(p[n] < p[n - 1] && p[n] <= p[n + 1])) continue;
    const auto right = std::upper_bound(maxima.begin(), maxima.end(), n);
    if (right == maxima.begin() || right == maxima.end()) continue;
    const double neighbour = std::min(p[*(right - 1)], p[*right]);
    const double ratio = p[n] / neighbour;
    if (!worst || ratio > *worst) worst = ratio;
  }
  return worst;
}

double band_relative_deviation(const std::vector<double>& approx, const std::vector<double>& exact,
                               Band band) {
  double diff = 0.0, ref = 0.0;
  for (int n = band.lo; n <= band.hi; ++n) {
    const double a = n < static_cast<int>(approx.size()) ? approx[n] : 0.0;
    const double e = n < static_cast<int>(exact.size()) ? exact[n] : 0.0;
    diff += std::abs(a - e);
    ref += e;
  }
  if (!(ref > 0.0)) throw ValidationError("band_relative_deviation: band carries no weight");
  return diff / ref;
}

RevivalReport detect_revival(const std::vector<double>& tau, const std::vector<double>& signal,
                             int window_points, double threshold) {
  const int n = static_cast<int>(signal.size());
  if (n == 0 || tau.size() != signal.size() || window_points < 1) {
    throw ValidationError("detect_revival: mismatched or empty series");
  }
  std::vector<double> envelope(n);
  for (int k = 0; k < n; ++k) {
    double m = 0.0;
    for (int j = std::max(0, k - window_points); j <= std::min(n - 1, k + window_points); ++j) {
      m = std::max(m, std::abs(signal[j]));
    }
    envelope[k] = m;
  }
  int collapse = -1;
  for (int k = 0; k < n; ++k) {
    if (envelope[k] < threshold) {
      collapse = k;
      break;
    }
  }
  if (collapse < 0) throw NumericalError("detect_revival: the signal never collapses");
  int peak = collapse;
  for (int k = collapse; k < n; ++k) {
    if (std::abs(signal[k]) > std::abs(signal[peak])) peak = k;
  }
  double floor = std::numeric_limits<double>::infinity();
  for (int k = collapse; k <= peak; ++k) floor = std::min(floor, envelope[k]);
  return RevivalReport{tau[collapse], floor, tau[peak], std::abs(signal[peak])};
}

namespace {

// Interpolated positions where the sampled line crosses `level`.
void crossings(const std::vector<double>& values, const std::vector<double>& coords, double level,
               double& lo, double& hi) {
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double a = values[k] - level;
    const double b = values[k + 1] - level;
    if ((a < 0.0) == (b < 0.0)) continue;
    const double s = a / (a - b);
    const double c = coords[k] + s * (coords[k + 1] - coords[k]);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
}

}  // namespace

ContourWidths contour_widths(const ScalarField& field, double fraction) {
  const PhaseGrid& g = field.grid;
  const double level = fraction * field.max_value();
  std::vector<double> xs(g.nx), ys(g.ny);
  for (int i = 0; i < g.nx; ++i) xs[i] = g.x(i);
  for (int j = 0; j < g.ny; ++j) ys[j] = g.y(j);

  const double inf = std::numeric_limits<double>::infinity();
  double x_lo = inf, x_hi = -inf, y_lo = inf, y_hi = -inf;
  std::vector<double> line;
  for (int j = 0; j < g.ny; ++j) {
    line.assign(g.nx, 0.0);
    for (int i = 0; i < g.nx; ++i) line[i] = field.at(i, j);
    crossings(line, xs, level, x_lo, x_hi);
  }
  for (int i = 0; i < g.nx; ++i) {
    line.assign(g.ny, 0.0);
    for (int j = 0; j < g.ny; ++j) line[j] = field.at(i, j);
    crossings(line, ys, level, y_lo, y_hi);
  }
  if (!(x_hi >= x_lo) || !(y_hi >= y_lo)) {
    throw NumericalError("contour_widths: level set does not close inside the grid");
  }
  return ContourWidths{x_hi - x_lo, y_hi - y_lo};
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw ValidationError("linspace: count must be >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / (count - 1);
  for (int k = 0; k < count; ++k) out[k] = start + k * step;
  out[count - 1] = stop;
  return out;
}

}  // namespace ncstates
