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

#include "ncstates/statistics.hpp"

#include <cmath>
#include <string>

#include "ncstates/errors.hpp"
#include "ncstates/special_functions.hpp"

namespace ncstates {
namespace {

// L_{num}(-y) / L_{den}(-y) with an empty numerator giving 0.
double laguerre_ratio(int num, int den, double y) {
  return (log_laguerre_negarg(num, y) / log_laguerre_negarg(den, y)).to_double();
}

}  // namespace

MomentReport moments_closed(const IntermediateParams& params) {
  MomentReport r;
  const int m = params.m();
  if (m == 0) return r;
  const double y = params.lambda_sq();
  const double r1 = laguerre_ratio(m - 1, m, y);
  const double r2 = m >= 2 ? laguerre_ratio(m - 2, m - 1, y) : 0.0;
  r.mean_n = m * r1;
  r.mean_n2 = m * (m - 1.0) * r2 * r1 + m * r1;
  r.mandel_q = (m - 1.0) * r2 - m * r1;
  r.g2 = (m - 1.0) * r2 / (m * r1);
  return r;
}

MomentReport moments_direct(const FockVector& state) {
  const std::vector<double> p = state.probabilities();
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    total += p[n];
    mean += n * p[n];
  }
  if (total == 0.0) throw ValidationError("moments_direct: zero vector");
  mean /= total;
  double var = 0.0;
  double second = 0.0;
  double factorial2 = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double d = n - mean;
    var += d * d * p[n];
    second += static_cast<double>(n) * n * p[n];
    factorial2 += n * (n - 1.0) * p[n];
  }
  var /= total;
  MomentReport r;
  r.mean_n = mean;
  r.mean_n2 = second / total;
  if (mean > 0.0) {
    r.mandel_q = var / mean - 1.0;
    r.g2 = factorial2 / total / (mean * mean);
  }
  return r;
}

QuadratureReport quadratures_closed(const IntermediateParams& params) {
  QuadratureReport q;
  const int m = params.m();
  const double y = params.lambda_sq();
  const LogValue log_lm = log_laguerre_negarg(m, y);
  const LogValue lam = LogValue::from_double(params.lambda());
  // <a> and <a^2>; real because every C_n is real.
  const double mean_a = (lam * log_assoc_laguerre_negarg(m - 1, 1, y) / log_lm).to_double();
  const double mean_a2 = (lam * lam * log_assoc_laguerre_negarg(m - 2, 2, y) / log_lm).to_double();
  const double mean_n = moments_closed(params).mean_n;
  q.mean_x = std::sqrt(2.0) * mean_a;
  q.mean_p = 0.0;
  q.var_x = 0.5 + mean_n + mean_a2 - 2.0 * mean_a * mean_a;
  q.var_p = 0.5 + mean_n - mean_a2;
  q.snr = q.mean_x * q.mean_x / q.var_x;
  return q;
}

QuadratureReport quadratures_direct(const FockVector& state) {
  const int top = state.highest_occupied();
  if (top < 0) throw ValidationError("quadratures_direct: zero vector");
  if (top + 2 >= state.dim()) {
    throw TruncationError("quadratures_direct: need two empty levels above n = " +
                          std::to_string(top) + " but dim is " + std::to_string(state.dim()));
  }
  const LadderMatrices ops = ladder_matrices(state.dim());
  const Complex i(0.0, 1.0);
  const OperatorMatrix x = (ops.a + ops.a_dagger) / std::sqrt(2.0);
  const OperatorMatrix p = (ops.a - ops.a_dagger) / (i * std::sqrt(2.0));
  const Eigen::VectorXcd& psi = state.amplitudes();
  const double norm2 = psi.squaredNorm();

  const Eigen::VectorXcd x_psi = x * psi;
  const Eigen::VectorXcd p_psi = p * psi;
  QuadratureReport q;
  q.mean_x = psi.dot(x_psi).real() / norm2;
  q.mean_p = psi.dot(p_psi).real() / norm2;
  q.var_x = (x_psi - q.mean_x * psi).squaredNorm() / norm2;
  q.var_p = (p_psi - q.mean_p * psi).squaredNorm() / norm2;
  q.snr = q.mean_x * q.mean_x / q.var_x;
  return q;
}

}  // namespace ncstates
