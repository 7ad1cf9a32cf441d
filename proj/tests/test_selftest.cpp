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

#include <doctest.h>

#include "ncstates/selftest.hpp"

using namespace ncstates;

TEST_CASE("selftest passes on a healthy build") {
  const auto results = run_selftest();
  REQUIRE(results.size() == 11);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK(r.seconds >= 0.0);
  }
  const auto again = run_selftest();
  for (std::size_t k = 0; k < results.size(); ++k) CHECK(results[k].name == again[k].name);
  CHECK(results.front().name == "special_fns.laguerre_recurrence");
}

TEST_CASE("an injected sign fault is caught") {
  SelfTestOptions opts;
  opts.flip_lambda_sign = true;
  bool eigen_check_failed = false;
  for (const auto& r : run_selftest(opts)) {
    if (r.name == "states.eigen_residual") eigen_check_failed = !r.passed;
    if (r.name.rfind("special_fns.", 0) == 0) CHECK(r.passed);
  }
  CHECK(eigen_check_failed);
}
