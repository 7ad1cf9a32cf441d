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

#include "ncstates/special_functions.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ncstates/errors.hpp"

namespace ncstates {
namespace {

constexpr int kFactorialTableSize = 4097;

const std::array<double, kFactorialTableSize>& factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTableSize> t{};
    // Compensated running sum of ln(k); stays within a few ulp of lgamma.
    double sum = 0.0;
    double carry = 0.0;
    for (int n = 1; n < kFactorialTableSize; ++n) {
      const double y = std::log(static_cast<double>(n)) - carry;
      const double s = sum + y;
      carry = (s - sum) - y;
      sum = s;
      t[n] = sum;
    }
    return t;
  }();
  return table;
}

void check_degree(int degree, const char* where) {
  if (degree < 0 || degree > kMaxLaguerreDegree) {
    throw ValidationError(std::string(where) + ": degree " + std::to_string(degree) +
                          " outside [0, " + std::to_string(kMaxLaguerreDegree) + "]");
  }
}

void check_order(int order, const char* where) {
  if (order < 0) {
    throw ValidationError(std::string(where) + ": order must be >= 0");
  }
}

// ln of the n-th summand of L_m^{(k)}(-y) for y > 0:
//   (m+k)! / ((m-n)! n! (k+n)!) * y^n
double log_negarg_term(int m, int k, int n, double log_y) {
  return log_factorial(m + k) - log_factorial(m - n) - log_factorial(n) -
         log_factorial(k + n) + n * log_y;
}

}  // namespace

LogValue LogValue::from_double(double value) {
  if (value == 0.0) return zero();
  return {std::log(std::abs(value)), value > 0 ? 1 : -1};
}

double LogValue::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

LogValue operator*(const LogValue& lhs, const LogValue& rhs) {
  if (lhs.sign == 0 || rhs.sign == 0) return LogValue::zero();
  return {lhs.log_magnitude + rhs.log_magnitude, lhs.sign * rhs.sign};
}

LogValue operator/(const LogValue& lhs, const LogValue& rhs) {
  if (rhs.sign == 0) throw ValidationError("LogValue: division by zero");
  if (lhs.sign == 0) return LogValue::zero();
  return {lhs.log_magnitude - rhs.log_magnitude, lhs.sign * rhs.sign};
}

double log_factorial(int n) {
  if (n < 0) throw ValidationError("log_factorial: negative argument");
  if (n < kFactorialTableSize) return factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw ValidationError("log_binomial: k outside [0, n]");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double laguerre(int degree, double x) {
  return assoc_laguerre(degree, 0, x);
}

double assoc_laguerre(int degree, int order, double x) {
  check_degree(degree, "assoc_laguerre");
  check_order(order, "assoc_laguerre");
  if (x <= 0.0) {
    // term_n = C(m+k, m-n) (-x)^n / n!, all nonnegative
    const double y = -x;
    double term = std::exp(log_factorial(degree + order) - log_factorial(degree) -
                           log_factorial(order));
    double sum = term;
    for (int n = 0; n < degree; ++n) {
      term *= y * (degree - n) / ((n + 1.0) * (order + n + 1.0));
      sum += term;
    }
    return sum;
  }
  double prev = 1.0;
  if (degree == 0) return prev;
  double curr = 1.0 + order - x;
  for (int n = 1; n < degree; ++n) {
    const double next = ((2.0 * n + 1.0 + order - x) * curr - (n + order) * prev) / (n + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

LogValue log_laguerre_negarg(int degree, double lambda_sq) {
  return log_assoc_laguerre_negarg(degree, 0, lambda_sq);
}

LogValue log_assoc_laguerre_negarg(int degree, int order, double lambda_sq) {
  if (degree < 0) return LogValue::zero();
  check_degree(degree, "log_assoc_laguerre_negarg");
  check_order(order, "log_assoc_laguerre_negarg");
  if (!(lambda_sq >= 0.0) || !std::isfinite(lambda_sq)) {
    throw ValidationError("log_assoc_laguerre_negarg: lambda_sq must be finite and >= 0");
  }
  if (lambda_sq == 0.0) {
    return LogValue::from_log(log_factorial(degree + order) - log_factorial(degree) -
                              log_factorial(order));
  }
  const double log_y = std::log(lambda_sq);
  std::vector<double> logs(static_cast<std::size_t>(degree) + 1);
  double peak = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= degree; ++n) {
    logs[n] = log_negarg_term(degree, order, n, log_y);
    peak = std::max(peak, logs[n]);
  }
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - peak);
  return LogValue::from_log(peak + std::log(sum));
}

}  // namespace ncstates
