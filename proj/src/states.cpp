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

#include "ncstates/states.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ncstates/errors.hpp"
#include "ncstates/special_functions.hpp"

namespace ncstates {

IntermediateParams::IntermediateParams(double eta, int m, double lambda_sq)
    : eta_(eta), m_(m), lambda_sq_(lambda_sq), lambda_(std::sqrt(lambda_sq)) {}

IntermediateParams IntermediateParams::from_eta(double eta, int m) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ValidationError("IntermediateParams: eta must lie in (0, 1], got " + std::to_string(eta));
  }
  if (m < 0 || m > kMaxLaguerreDegree) {
    throw ValidationError("IntermediateParams: M must lie in [0, " +
                          std::to_string(kMaxLaguerreDegree) + "], got " + std::to_string(m));
  }
  const double lambda_sq = (1.0 - eta) / eta;
  if (!std::isfinite(lambda_sq)) throw ValidationError("IntermediateParams: lambda diverges");
  return IntermediateParams(eta, m, lambda_sq);
}

IntermediateParams IntermediateParams::from_lambda(double lambda, int m) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("IntermediateParams: lambda must be finite and >= 0");
  }
  const double lambda_sq = lambda * lambda;
  IntermediateParams p = from_eta(1.0 / (1.0 + lambda_sq), m);
  p.lambda_sq_ = lambda_sq;
  p.lambda_ = lambda;
  return p;
}

double IntermediateParams::eigenvalue() const { return std::sqrt(eta_) * m_; }

IntermediateParams IntermediateParams::with_m(int m) const {
  IntermediateParams p = *this;
  if (m < 0 || m > kMaxLaguerreDegree) throw ValidationError("IntermediateParams: M out of range");
  p.m_ = m;
  return p;
}

FockVector intermediate_state(const IntermediateParams& params, int dim) {
  const int m = params.m();
  if (dim < m + 1) {
    throw ValidationError("intermediate_state: dim " + std::to_string(dim) + " < M + 1 = " +
                          std::to_string(m + 1));
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  if (params.lambda_sq() == 0.0) {
    v[m] = 1.0;
    return FockVector(std::move(v));
  }
  const double log_lambda = std::log(params.lambda());
  const double log_norm =
      0.5 * (log_factorial(m) + log_laguerre_negarg(m, params.lambda_sq()).log_magnitude);
  for (int n = 0; n <= m; ++n) {
    const double log_c = (m - n) * log_lambda + log_factorial(m) - log_factorial(m - n) -
                         0.5 * log_factorial(n) - log_norm;
    v[n] = std::exp(log_c);
  }
  return FockVector(std::move(v));
}

FockVector intermediate_state(const IntermediateParams& params) {
  return intermediate_state(params, params.m() + 1);
}

double eigen_residual(const FockVector& state, const IntermediateParams& params) {
  const double se = std::sqrt(params.eta());
  const double sc = std::sqrt(1.0 - params.eta());
  const double eigenvalue = params.eigenvalue();
  const auto& c = state.amplitudes();
  const int dim = state.dim();
  double sum = 0.0;
  for (int n = 0; n < dim; ++n) {
    Complex w = (se * n - eigenvalue) * c[n];
    if (n + 1 < dim) w += sc * std::sqrt(n + 1.0) * c[n + 1];
    sum += std::norm(w);
  }
  return std::sqrt(sum);
}

FockVector binomial_state(double eta, int m, int dim) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ValidationError("binomial_state: eta must lie in [0, 1]");
  if (m < 0) throw ValidationError("binomial_state: M must be >= 0");
  if (dim < m + 1) throw ValidationError("binomial_state: dim < M + 1");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  if (eta == 0.0) {
    v[0] = 1.0;
    return FockVector(std::move(v));
  }
  if (eta == 1.0) {
    v[m] = 1.0;
    return FockVector(std::move(v));
  }
  const double log_eta = std::log(eta);
  const double log_rest = std::log1p(-eta);
  for (int n = 0; n <= m; ++n) {
    v[n] = std::exp(0.5 * (log_binomial(m, n) + n * log_eta + (m - n) * log_rest));
  }
  return FockVector(std::move(v));
}

FockVector photon_added_coherent(double lambda, int m, int dim) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("photon_added_coherent: lambda must be finite and >= 0");
  }
  if (m < 0 || m > kMaxLaguerreDegree) throw ValidationError("photon_added_coherent: M out of range");
  if (dim <= 0) dim = working_dimension(m, lambda);
  if (dim < m + 1) throw ValidationError("photon_added_coherent: dim < M + 1");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  if (lambda == 0.0) {
    v[m] = 1.0;
    return FockVector(std::move(v));
  }
  const double lambda_sq = lambda * lambda;
  const double log_lambda = std::log(lambda);
  const double log_norm =
      0.5 * (log_factorial(m) + log_laguerre_negarg(m, lambda_sq).log_magnitude);
  double kept = 0.0;
  for (int n = m; n < dim; ++n) {
    const double log_c = -0.5 * lambda_sq + (n - m) * log_lambda + 0.5 * log_factorial(n) -
                         log_factorial(n - m) - log_norm;
    v[n] = std::exp(log_c);
    kept += std::norm(v[n]);
  }
  const double tail = 1.0 - kept;
  if (tail >= 1e-12) {
    throw TruncationError("photon_added_coherent: tail mass " + std::to_string(tail) +
                          " beyond dim " + std::to_string(dim));
  }
  return FockVector(std::move(v));
}

LoweringResult lower_k(const IntermediateParams& params, int k) {
  if (k < 0) throw ValidationError("lower_k: k must be >= 0");
  const int m = params.m();
  if (k > m) return {0.0, params.with_m(0)};
  if (k == 0) return {1.0, params};
  const double y = params.lambda_sq();
  const double log_sq = log_factorial(m) - log_factorial(m - k) +
                        log_laguerre_negarg(m - k, y).log_magnitude -
                        log_laguerre_negarg(m, y).log_magnitude;
  return {std::exp(0.5 * log_sq), params.with_m(m - k)};
}

std::vector<Complex> eigen_series_prefix(double eta, Complex beta, int terms) {
  if (!(eta > 0.0 && eta < 1.0)) throw ValidationError("eigen_series_prefix: eta must lie in (0, 1)");
  if (terms < 1) throw ValidationError("eigen_series_prefix: terms must be >= 1");
  const double se = std::sqrt(eta);
  const double sc = std::sqrt(1.0 - eta);
  std::vector<Complex> c(static_cast<std::size_t>(terms));
  c[0] = 1.0;
  for (int n = 0; n + 1 < terms; ++n) {
    c[n + 1] = (beta - se * n) * c[n] / (sc * std::sqrt(n + 1.0));
  }
  return c;
}

}  // namespace ncstates
