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

#include "ncstates/quasiprob.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "ncstates/errors.hpp"
#include "ncstates/special_functions.hpp"

namespace ncstates {
namespace {

constexpr double kPi = std::numbers::pi;

std::string coordinate_suffix(Complex beta) {
  std::ostringstream os;
  os.precision(17);
  os << " (at x=" << beta.real() << ", y=" << beta.imag() << ")";
  return os.str();
}

// Eigen-decomposition S = V diag(h) V^T of the real symmetric tridiagonal
// S(n, n-1) = S(n-1, n) = sqrt(n). With T = diag(i^n), a^dag - a = -i T S T^-1,
// so D(-r) = T V diag(exp(i r h)) V^T T^-1 for real r.
struct RealShiftBasis {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

const RealShiftBasis& real_shift_basis(int dim) {
  static std::mutex mutex;
  static std::map<int, RealShiftBasis> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    sym(n, n - 1) = std::sqrt(static_cast<double>(n));
    sym(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericalError("wigner_oracle: eigensolver failed");
  return cache.emplace(dim, RealShiftBasis{solver.eigenvectors(), solver.eigenvalues()})
      .first->second;
}

double parity_of(const Eigen::VectorXcd& shifted) {
  const int dim = static_cast<int>(shifted.size());
  double guard_mass = 0.0;
  for (int k = dim - kGuardBand; k < dim; ++k) guard_mass += std::norm(shifted[k]);
  if (guard_mass >= 1e-12) {
    throw TruncationError("wigner_oracle: displaced state reaches the top of a dim " +
                          std::to_string(dim) + " space");
  }
  double sum = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double w = std::norm(shifted[k]);
    sum += (k % 2 == 0) ? w : -w;
  }
  return 2.0 * sum / kPi;
}

}  // namespace

PhaseGrid PhaseGrid::make(double x_min, double x_max, double y_min, double y_max, int nx,
                          int ny) {
  for (double v : {x_min, x_max, y_min, y_max}) {
    if (!std::isfinite(v)) throw ValidationError("grid bounds must be finite");
  }
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw ValidationError("grid requires xmax > xmin and ymax > ymin");
  }
  if (nx < 2 || ny < 2) throw ValidationError("grid requires at least 2 points per axis");
  return PhaseGrid{x_min, x_max, y_min, y_max, nx, ny};
}

PhaseGrid PhaseGrid::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6) {
    throw ValidationError("grid must be \"xmin,xmax,ymin,ymax,nx,ny\", got \"" + spec + "\"");
  }
  double bounds[4];
  int counts[2];
  try {
    for (int k = 0; k < 4; ++k) {
      std::size_t used = 0;
      bounds[k] = std::stod(parts[k], &used);
      if (used != parts[k].size()) throw std::invalid_argument(parts[k]);
    }
    for (int k = 0; k < 2; ++k) {
      std::size_t used = 0;
      counts[k] = std::stoi(parts[4 + k], &used);
      if (used != parts[4 + k].size()) throw std::invalid_argument(parts[4 + k]);
    }
  } catch (const std::logic_error&) {
    throw ValidationError("grid has a malformed number: \"" + spec + "\"");
  }
  return make(bounds[0], bounds[1], bounds[2], bounds[3], counts[0], counts[1]);
}

double ScalarField::max_value() const { return *std::max_element(values.begin(), values.end()); }

double ScalarField::min_value() const { return *std::min_element(values.begin(), values.end()); }

double husimi_closed(const IntermediateParams& params, Complex beta) {
  const int m = params.m();
  const double shifted = std::abs(params.lambda() + beta);
  if (m > 0 && shifted == 0.0) return 0.0;
  const double log_q = -std::norm(beta) + 2.0 * m * std::log(shifted) - log_factorial(m) -
                       log_laguerre_negarg(m, params.lambda_sq()).log_magnitude;
  return std::exp(log_q) / kPi;
}

double husimi_direct(const FockVector& state, Complex beta) {
  // Running term e^{-|beta|^2/2} conj(beta)^n / sqrt(n!).
  const Complex bc = std::conj(beta);
  Complex term = std::exp(-0.5 * std::norm(beta));
  Complex overlap = 0.0;
  for (int n = 0; n < state.dim(); ++n) {
    if (n > 0) term *= bc / std::sqrt(static_cast<double>(n));
    overlap += term * state[n];
  }
  return std::norm(overlap) / kPi;
}

double wigner_closed(const IntermediateParams& params, Complex beta) {
  const int m = params.m();
  const double arg = std::norm(2.0 * beta + params.lambda());
  const double scale =
      std::exp(-2.0 * std::norm(beta) - log_laguerre_negarg(m, params.lambda_sq()).log_magnitude);
  const double parity = (m % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * parity * laguerre(m, arg) * scale / kPi;
}

double wigner_oracle(const FockVector& state, Complex beta) {
  // Levels whose probability is below 1e-32 cannot move the result.
  const int top = std::max(state.highest_occupied(1e-32), 0);
  const int dim = std::max(working_dimension(top, std::abs(beta)), state.dim());
  if (dim <= kGuardBand) throw TruncationError("wigner_oracle: space too small");
  // D(-beta) = e^{i theta N} D(-r) e^{-i theta N}. Diagonal phases on the left
  // (e^{i theta N} and T) leave the parity sum unchanged.
  const double r = std::abs(beta);
  const double theta = std::arg(beta);
  const RealShiftBasis& basis = real_shift_basis(dim);
  Eigen::VectorXcd v = state.resized(dim).amplitudes();
  // T^-1 e^{-i theta N} in one pass.
  for (int n = 0; n < dim; ++n) v[n] *= std::polar(1.0, -n * (theta + kPi / 2));
  Eigen::VectorXcd w = basis.vectors.transpose() * v;
  for (int k = 0; k < dim; ++k) w[k] *= std::polar(1.0, r * basis.values[k]);
  return parity_of(basis.vectors * w);
}

double wigner_oracle(const FockVector& state, const OperatorMatrix& shift_by_minus_beta) {
  const int dim = static_cast<int>(shift_by_minus_beta.rows());
  if (dim <= kGuardBand || state.dim() > dim) {
    throw TruncationError("wigner_oracle: displacement matrix smaller than the state");
  }
  return parity_of(apply_operator(shift_by_minus_beta, state.resized(dim)).amplitudes());
}

ScalarField rasterize(const std::function<double(Complex)>& fn, const PhaseGrid& grid) {
  ScalarField field{grid, {}};
  field.values.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const Complex beta = grid.point(i, j);
      try {
        field.values[static_cast<std::size_t>(i) * grid.ny + j] = fn(beta);
      } catch (const TruncationError& e) {
        throw TruncationError(e.what() + coordinate_suffix(beta));
      } catch (const NumericalError& e) {
        throw NumericalError(e.what() + coordinate_suffix(beta));
      } catch (const ValidationError& e) {
        throw ValidationError(e.what() + coordinate_suffix(beta));
      }
    }
  }
  return field;
}

double integrate(const ScalarField& field) {
  double sum = 0.0;
  for (double v : field.values) sum += v;
  return sum * field.grid.dx() * field.grid.dy();
}

}  // namespace ncstates
