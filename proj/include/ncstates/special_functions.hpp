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

// Factorials and Laguerre polynomials, with log-domain variants for the
// large-M regime where M! * L_M(-x) leaves the double range.

#pragma once

namespace ncstates {

/// Largest polynomial degree accepted by the Laguerre routines.
inline constexpr int kMaxLaguerreDegree = 2000;

/// A real number stored as sign * exp(log_magnitude).
///
/// sign == 0 represents exact zero; log_magnitude is ignored in that case.
struct LogValue {
  double log_magnitude = 0.0;
  int sign = 0;

  static LogValue zero() { return {}; }
  static LogValue one() { return {0.0, 1}; }
  static LogValue from_log(double log_magnitude) { return {log_magnitude, 1}; }
  static LogValue from_double(double value);

  bool is_zero() const { return sign == 0; }

  /// Converts back to a double. Overflows to +-inf, underflows to +-0.
  double to_double() const;

  friend LogValue operator*(const LogValue& lhs, const LogValue& rhs);
  /// Throws ValidationError when dividing by zero.
  friend LogValue operator/(const LogValue& lhs, const LogValue& rhs);
};

/// ln(n!). Tabulated up to n = 4096, lgamma beyond.
double log_factorial(int n);

/// ln C(n, k) for 0 <= k <= n.
double log_binomial(int n, int k);

/// L_M(x). Direct positive-term summation for x <= 0, the three-term
/// recurrence for x > 0.
double laguerre(int degree, double x);

/// Associated Laguerre polynomial L_m^{(k)}(x) for integer k >= 0.
double assoc_laguerre(int degree, int order, double x);

/// ln L_M(-lambda_sq), summed by log-sum-exp over the all-positive series.
LogValue log_laguerre_negarg(int degree, double lambda_sq);

/// ln L_m^{(k)}(-lambda_sq). Degree -1 and below is the empty sum (zero).
LogValue log_assoc_laguerre_negarg(int degree, int order, double lambda_sq);

}  // namespace ncstates
