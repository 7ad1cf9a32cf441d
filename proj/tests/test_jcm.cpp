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
#include <numbers>

#include "ncstates/analysis.hpp"
#include "ncstates/errors.hpp"
#include "ncstates/jcm.hpp"
#include "ncstates/quasiprob.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace ncstates;

namespace {

constexpr double kPi = std::numbers::pi;
const JcmParams kUnit = JcmParams::make(1.0);

FockVector state(double eta, int m) { return intermediate_state(IntermediateParams::from_eta(eta, m)); }

}  // namespace

TEST_CASE("params") {
  CHECK(kUnit.rabi(0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(JcmParams::make(1.0, 3.0).detuned_rabi(1) == doctest::Approx(std::sqrt(2.25 + 6.0)));
  CHECK_THROWS_AS(JcmParams::make(0.0), ValidationError);
  CHECK_THROWS_AS(JcmParams::make(-1.0), ValidationError);
}

TEST_CASE("evolve") {
  const FockVector psi = state(0.3, 6);
  const JointAtomField start = evolve(kUnit, psi, 0.0);
  CHECK((start.e_branch.amplitudes() - psi.amplitudes()).norm() == 0.0);
  CHECK(start.ground_population() == 0.0);
  CHECK(start.g_branch.dim() == psi.dim() + 2);

  const int m = 5;
  const double t = kPi / (2.0 * kUnit.rabi(m));
  const JointAtomField flipped = evolve(kUnit, FockVector::number_state(m, m + 1), t);
  CHECK(flipped.excited_population() < 1e-28);
  CHECK(std::abs(flipped.g_branch[m + 2]) == doctest::Approx(1.0));

  PropertyRng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const JcmParams p = JcmParams::make(rng.uniform(0.2, 3.0), rng.uniform(-5.0, 5.0));
    const JointAtomField j = evolve(p, psi, rng.uniform(0.0, 20.0));
    CHECK(std::abs(j.excited_population() + j.ground_population() - 1.0) < 1e-12);
  }
}

TEST_CASE("small detuning approaches the resonant solution") {
  const FockVector psi = state(0.4, 8);
  const JointAtomField res = evolve(kUnit, psi, 1.3);
  const JointAtomField near = evolve(JcmParams::make(1.0, 1e-7), psi, 1.3);
  CHECK((res.e_branch.amplitudes() - near.e_branch.amplitudes()).norm() < 1e-6);
  CHECK((res.g_branch.amplitudes() - near.g_branch.amplitudes()).norm() < 1e-6);
}

TEST_CASE("inversion") {
  const FockVector psi = state(0.3, 6);
  CHECK(inversion(kUnit, psi, 0.0) == doctest::Approx(1.0));
  CHECK(relative_error(inversion(kUnit, psi, 0.7), ref::kInversion03_6) < 1e-12);
  const FockVector number = state(1.0, 4);
  for (double t : {0.1, 0.77, 2.5}) {
    CHECK(inversion(kUnit, number, t) == doctest::Approx(std::cos(2 * kUnit.rabi(4) * t)).epsilon(1e-13));
  }
  const FockVector big = state(0.8, 70);
  for (double tau : linspace(0.0, kPi, 2000)) {
    const JointAtomField j = evolve(kUnit, big, tau);
    CHECK(std::abs(inversion(kUnit, big, tau) - (j.excited_population() - j.ground_population())) < 1e-10);
  }
  const JcmParams det = JcmParams::make(1.0, 0.8);
  const JointAtomField j = evolve(det, psi, 0.9);
  CHECK(inversion(det, psi, 0.9) == doctest::Approx(j.excited_population() - j.ground_population()));
}

TEST_CASE("atomic density") {
  const FockVector psi = state(0.3, 6);
  const AtomicDensity zero = atomic_density(kUnit, psi, 0.0);
  CHECK(zero.rho22 == doctest::Approx(1.0));
  CHECK(zero.rho11 == 0.0);
  CHECK(zero.rho12 == Complex(0.0));

  const FockVector number = FockVector::number_state(4, 5);
  for (double t : {0.3, 1.1}) CHECK(std::abs(atomic_density(kUnit, number, t).rho12) == 0.0);

  for (double t : linspace(0.0, 5.0, 51)) {
    const AtomicDensity r = atomic_density(kUnit, psi, t);
    CHECK(std::abs(r.rho11 + r.rho22 - 1.0) < 1e-12);
    CHECK(std::norm(r.rho12) <= r.rho11 * r.rho22 + 1e-12);
    // The phase-free coherence is i times the branch coherence.
    CHECK(std::abs(atomic_coherence_literal(kUnit, psi, t) - Complex(0, 1) * r.rho12) < 1e-13);
  }
  CHECK_THROWS_AS(atomic_coherence_literal(JcmParams::make(1.0, 0.1), psi, 1.0), ValidationError);
}

TEST_CASE("entropy") {
  CHECK(entropy(AtomicDensity{0.0, 1.0, 0.0}) == 0.0);
  CHECK(entropy(AtomicDensity{0.5, 0.5, 0.0}) == doctest::Approx(std::log(2.0)));
  const int m = 4;
  const double t = kPi / (4.0 * kUnit.rabi(m));
  CHECK(std::abs(entropy(atomic_density(kUnit, FockVector::number_state(m, m + 1), t)) - std::log(2.0)) < 1e-6);
  const FockVector psi = state(0.3, 6);
  CHECK(relative_error(entropy(atomic_density(kUnit, psi, 0.7)), ref::kEntropy03_6) < 1e-11);
  CHECK(std::abs(entropy(atomic_density(kUnit, psi, 0.0))) < 1e-12);
  // Number state: S vanishes whenever |cos 2 Omega t| = 1.
  const double period = kPi / (2.0 * kUnit.rabi(m));
  for (int k = 1; k <= 3; ++k) {
    CHECK(entropy(atomic_density(kUnit, FockVector::number_state(m, m + 1), k * period)) < 1e-12);
  }
}

TEST_CASE("field entropy equals atomic entropy") {
  for (auto [eta, m] : {std::pair{0.3, 6}, {0.8, 20}, {0.1, 30}}) {
    const FockVector psi = state(eta, m);
    for (double tau : linspace(0.0, kPi, 41)) {
      const JointAtomField j = evolve(kUnit, psi, tau);
      CHECK(std::abs(field_entropy(j) - entropy(atomic_density(j))) < 1e-8);
    }
  }
}

TEST_CASE("field Q function") {
  const FockVector psi = state(0.3, 6);
  const Complex b(1.0, 0.5);
  CHECK(field_qfunction(kUnit, psi, 0.0, b) == doctest::Approx(husimi_direct(psi, b)).epsilon(1e-13));
  CHECK(relative_error(field_qfunction(kUnit, psi, 0.7, b), ref::kFieldQ03_6) < 1e-12);

  const JointAtomField j = evolve(kUnit, psi, 0.7);
  const OperatorMatrix rho = field_density_matrix(j);
  for (Complex beta : {Complex(0, 0), Complex(1.2, -0.4), Complex(-0.7, 0.9), Complex(2, 1), Complex(0.1, 2.2)}) {
    const FockVector coh = coherent_vector(beta, rho.rows() + 40).resized(rho.rows(), 1.0);
    const Complex expect = coh.amplitudes().dot(rho * coh.amplitudes()) / kPi;
    CHECK(std::abs(field_qfunction(kUnit, psi, 0.7, beta) - expect.real()) < 1e-10);
  }

  const FockVector big = state(0.8, 20);
  const ScalarField q = rasterize([&](Complex beta) { return field_qfunction(kUnit, big, kPi / 4, beta); },
                                  PhaseGrid::make(-9, 9, -9, 9, 121, 121));
  CHECK(integrate(q) == doctest::Approx(1.0).epsilon(5e-3));
  CHECK_THROWS_AS(field_qfunction(JcmParams::make(1.0, 1.0), psi, 0.1, b), ValidationError);
}

TEST_CASE("photon distribution") {
  const FockVector psi = state(0.3, 6);
  const std::vector<double> p0 = photon_distribution(kUnit, psi, 0.0);
  for (int n = 0; n < psi.dim(); ++n) CHECK(p0[n] == doctest::Approx(std::norm(psi[n])));
  const std::vector<double> p = photon_distribution(kUnit, psi, 0.7);
  CHECK(relative_error(p[4], ref::kPn4_03_6) < 1e-12);
  CHECK(relative_error(p[7], ref::kPn7_03_6) < 1e-12);

  const FockVector big = state(0.8, 70);
  for (double tau : linspace(0.0, kPi, 101)) {
    const std::vector<double> pt = photon_distribution(kUnit, big, tau);
    double total = 0.0;
    for (double v : pt) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
  const std::vector<double> start = photon_distribution(kUnit, big, 0.0);
  const std::vector<double> end = photon_distribution(kUnit, big, kPi);
  CHECK(total_variation(end, shift_up(start, 2)) < 0.05);
  const std::vector<double> mid = photon_distribution(kUnit, big, kPi / 2);
  CHECK(total_variation(mid, average(start, end)) < 0.05);
}

TEST_CASE("quarter-period approximation") {
  const IntermediateParams p = IntermediateParams::from_eta(0.8, 70);
  const std::vector<double> approx = approx_pn_quarter(p);
  for (double v : approx) CHECK(v > 0.0);
  const FockVector c = intermediate_state(p);
  const int n = 40;
  const double lam4 = std::pow(p.lambda_sq(), 2);
  const double ratio = lam4 * n * (n - 1.0) / std::pow((70 - n + 2.0) * (70 - n + 1.0), 2);
  CHECK(relative_error(std::norm(c[n - 2]) / std::norm(c[n]), ratio) < 1e-10);

  const std::vector<double> exact = photon_distribution(kUnit, c, kPi / 4);
  CHECK(band_relative_deviation(approx, exact, central_band(exact)) < 0.1);
}

TEST_CASE("perfect oscillation shift") {
  double previous = 1e9;
  for (int n = 1; n <= 200; ++n) {
    const double xi = perfect_oscillation_shift(n);
    CHECK(xi < previous);
    previous = xi;
    const double phase = (n - 0.5) * (kPi / 4 - xi);
    CHECK(std::abs(phase - (n - 1) * kPi / 4) < 1e-12 * std::max(1.0, phase));
  }
  CHECK_THROWS_AS(perfect_oscillation_shift(0), ValidationError);
  // No integer n puts the unshifted phase on a zero of sin^2.
  for (int n = 0; n < 1000; ++n) CHECK(std::abs(std::sin((n - 0.5) * kPi / 4)) > 0.3);
}

TEST_CASE("frequency splitting") {
  for (auto [n, tol] : {std::pair{1e3, 1e-3}, {1e6, 1e-6}}) {
    CHECK(std::abs(std::sqrt((n + 1) * (n + 2)) - (n + 1.5)) < tol);
  }
}
