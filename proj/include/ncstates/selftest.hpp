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

#include <string>
#include <vector>

namespace ncstates {

struct SelfTestOptions {
  /// Builds intermediate states with lambda -> -lambda, which should trip the
  /// eigenvalue check.
  bool flip_lambda_sign = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the invariant checks on reduced grids, always in the same order.
std::vector<CheckResult> run_selftest(const SelfTestOptions& options = {});

}  // namespace ncstates
