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

#include <cmath>

#include "ncstates/errors.hpp"
#include "ncstates/statistics.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace ncstates;

TEST_CASE("closed-form moments") {
  const MomentReport number = moments_closed(IntermediateParams::from_eta(1.0, 5));
  CHECK(number.mandel_q == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(number.mean_n == doctest::Approx(5.0));

  const MomentReport half = moments_closed(IntermediateParams::from_eta(0.5, 2));
  CHECK(half.mean_n == doctest::Approx(8.0 / 7.0).epsilon(1e-14));
  CHECK(half.mandel_q == doctest::Approx(-9.0 / 14.0).epsilon(1e-14));

  CHECK(std::abs(moments_closed(IntermediateParams::from_eta(1e-6, 1)).mandel_q) < 1e-3);

  const MomentReport r = moments_closed(IntermediateParams::from_eta(0.3, 6));
  CHECK(relative_error(r.mean_n, ref::kMeanN03_6) < 1e-13);
  CHECK(relative_error(r.mean_n2, ref::kMeanN2_03_6) < 1e-13);
  CHECK(relative_error(r.mandel_q, ref::kMandelQ03_6) < 1e-12);
  REQUIRE(r.g2.has_value());
  CHECK(relative_error(*r.g2, ref::kG2_03_6) < 1e-12);

  const MomentReport big = moments_closed(IntermediateParams::from_eta(0.05, 60));
  CHECK(relative_error(big.mean_n, ref::kMeanN005_60) < 1e-12);
  CHECK(relative_error(big.mandel_q, ref::kMandelQ005_60) < 1e-11);

  const MomentReport vac = moments_closed(IntermediateParams::from_eta(0.4, 0));
  CHECK(vac.mean_n == 0.0);
  CHECK_FALSE(vac.g2.has_value());
}

TEST_CASE("direct moments") {
  const MomentReport vac = moments_direct(FockVector::vacuum(4));
  CHECK(vac.mean_n == 0.0);
  CHECK(vac.mean_n2 == 0.0);
  CHECK_FALSE(vac.g2.has_value());
  const MomentReport four = moments_direct(FockVector::number_state(4, 6));
  CHECK(four.mean_n == 4.0);
  CHECK(four.mandel_q == doctest::Approx(-1.0));
  CHECK(std::abs(moments_direct(coherent_vector(2.0, 64)).mandel_q) < 1e-8);
}

TEST_CASE("closed-form quadratures") {
  const QuadratureReport vac = quadratures_closed(IntermediateParams::from_eta(1.0, 0));
  CHECK(vac.var_x == doctest::Approx(0.5));
  CHECK(vac.var_p == doctest::Approx(0.5));
  for (int m : {1, 4, 9}) {
    const QuadratureReport n = quadratures_closed(IntermediateParams::from_eta(1.0, m));
    CHECK(n.var_x == doctest::Approx(m + 0.5).epsilon(1e-14));
    CHECK(n.mean_x == 0.0);
  }
  const QuadratureReport half = quadratures_closed(IntermediateParams::from_eta(0.5, 2));
  CHECK(half.var_x == doctest::Approx(0.5 - 2.0 / 49.0).epsilon(1e-14));
  CHECK(half.var_p == doctest::Approx(0.5 + 6.0 / 7.0).epsilon(1e-14));
  CHECK(half.snr == doctest::Approx(3.2).epsilon(1e-13));

  const QuadratureReport r = quadratures_closed(IntermediateParams::from_eta(0.3, 6));
  CHECK(relative_error(r.mean_x, ref::kMeanX03_6) < 1e-13);
  CHECK(relative_error(r.var_x, ref::kVarX03_6) < 1e-12);
  CHECK(relative_error(r.var_p, ref::kVarP03_6) < 1e-13);
  CHECK(relative_error(r.snr, ref::kSnr03_6) < 1e-12);
  const QuadratureReport big = quadratures_closed(IntermediateParams::from_eta(0.05, 60));
  CHECK(relative_error(big.var_x, ref::kVarX005_60) < 1e-10);
  CHECK(relative_error(big.var_p, ref::kVarP005_60) < 1e-12);
}

TEST_CASE("direct quadratures") {
  const QuadratureReport coh = quadratures_direct(coherent_vector(1.5, 60).resized(64));
  CHECK(coh.var_x == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(coh.var_p == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(coh.snr == doctest::Approx(4 * 1.5 * 1.5).epsilon(1e-9));
  CHECK(quadratures_direct(FockVector::vacuum(4)).snr == 0.0);
  const QuadratureReport three = quadratures_direct(FockVector::number_state(3, 6));
  CHECK(three.mean_x == 0.0);
  CHECK(three.var_x == doctest::Approx(3.5));
  CHECK_THROWS_AS(quadratures_direct(FockVector::number_state(3, 5)), TruncationError);
}

TEST_CASE("binomial baseline") {
  PropertyRng rng(3);
  for (int m : {2, 50, 100}) {
    for (int trial = 0; trial < 20; ++trial) {
      const double eta = rng.uniform(0.01, 1.0);
      CHECK(std::abs(moments_direct(binomial_state(eta, m, m + 1)).mandel_q - binomial_mandel_q(eta)) < 1e-12);
    }
  }
}

TEST_CASE("property: closed forms agree with direct sums") {
  for (int ei = 1; ei <= 19; ++ei) {
    const double eta = 0.05 * ei;
    for (int m = 1; m <= 60; ++m) {
      const IntermediateParams p = IntermediateParams::from_eta(eta, m);
      const FockVector s = intermediate_state(p, m + 3);
      const MomentReport mc = moments_closed(p), md = moments_direct(s);
      const QuadratureReport qc = quadratures_closed(p), qd = quadratures_direct(s);
      CHECK(relative_error(mc.mean_n, md.mean_n) < 1e-9);
      CHECK(relative_error(mc.mean_n2, md.mean_n2) < 1e-9);
      CHECK(relative_error(mc.mandel_q, md.mandel_q) < 1e-9);
      CHECK(relative_error(*mc.g2, *md.g2) < 1e-9);
      CHECK(relative_error(qc.mean_x, qd.mean_x) < 1e-9);
      CHECK(relative_error(qc.var_x, qd.var_x) < 1e-9);
      CHECK(relative_error(qc.var_p, qd.var_p) < 1e-9);
      CHECK(std::abs(qd.mean_p) < 1e-12);
    }
  }
}

TEST_CASE("property: physical constraints on the grid") {
  for (int ei = 1; ei <= 20; ++ei) {
    const double eta = 0.05 * ei;
    for (int m : {1, 2, 5, 10, 30, 60}) {
      const IntermediateParams p = IntermediateParams::from_eta(eta, m);
      const MomentReport mr = moments_closed(p);
      const QuadratureReport q = quadratures_closed(p);
      CHECK(mr.mandel_q < 0.0);
      CHECK(mr.variance() >= -1e-12);
      CHECK(*mr.g2 - 1.0 == doctest::Approx(mr.mandel_q / mr.mean_n).epsilon(1e-10));
      CHECK(q.var_x > 0.0);
      CHECK(q.var_p > 0.0);
      CHECK(q.var_x * q.var_p >= 0.25 - 1e-10);
      CHECK(q.snr <= 4.0 * mr.mean_n * (mr.mean_n + 1.0) + 1e-9);
    }
  }
}

TEST_CASE("squeezing window for M = 10") {
  bool squeezed = false;
  for (int k = 1; k < 100; ++k) {
    if (quadratures_closed(IntermediateParams::from_eta(k / 100.0, 10)).var_x < 0.5) squeezed = true;
  }
  CHECK(squeezed);
  // Near eta = 0 the variance approaches the vacuum value 1/2 from below, as 1/2 - M eta.
  const double near_vacuum = quadratures_closed(IntermediateParams::from_eta(1e-6, 10)).var_x;
  CHECK(std::abs(near_vacuum - 0.5) < 1e-4);
  CHECK(near_vacuum - 0.5 == doctest::Approx(-10e-6).epsilon(1e-3));
  CHECK(quadratures_closed(IntermediateParams::from_eta(1.0, 10)).var_x >= 0.5);
}
