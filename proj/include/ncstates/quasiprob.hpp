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

#include <functional>
#include <string>
#include <vector>

#include "ncstates/fock_space.hpp"
#include "ncstates/states.hpp"

namespace ncstates {

/// Rectangular, endpoint-inclusive grid over beta = x + i y.
struct PhaseGrid {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;
  int nx = 2;
  int ny = 2;

  /// Throws ValidationError unless x_max > x_min, y_max > y_min, nx, ny >= 2.
  static PhaseGrid make(double x_min, double x_max, double y_min, double y_max, int nx, int ny);
  /// Parses "xmin,xmax,ymin,ymax,nx,ny".
  static PhaseGrid parse(const std::string& spec);

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
  Complex point(int i, int j) const { return {x(i), y(j)}; }
};

/// Values in row-major order: index i * ny + j, with x varying slowest.
struct ScalarField {
  PhaseGrid grid;
  std::vector<double> values;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.ny + j]; }
  double max_value() const;
  double min_value() const;
};

double husimi_closed(const IntermediateParams& params, Complex beta);
double husimi_direct(const FockVector& state, Complex beta);

double wigner_closed(const IntermediateParams& params, Complex beta);

/// Parity-weighted sum over displaced number states. Pads the state to the
/// working dimension for a displacement of |beta| and throws TruncationError
/// if the displaced state reaches the guard band.
double wigner_oracle(const FockVector& state, Complex beta);

/// As above with a precomputed D(-beta); its dimension fixes the working space.
double wigner_oracle(const FockVector& state, const OperatorMatrix& shift_by_minus_beta);

ScalarField rasterize(const std::function<double(Complex)>& fn, const PhaseGrid& grid);

/// Cell-sum integral, each grid point weighted by dx * dy.
double integrate(const ScalarField& field);

}  // namespace ncstates
