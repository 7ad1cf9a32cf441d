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

#include "ncstates/generation.hpp"

#include <cmath>
#include <string>

#include "ncstates/errors.hpp"
#include "ncstates/special_functions.hpp"

namespace ncstates {
namespace {

// Leading block of U0^-1 a U0 and of D(-l) a D(l), both on dim levels.
struct ConjugatedLadder {
  OperatorMatrix heisenberg;
  OperatorMatrix displaced;
  int block;
};

ConjugatedLadder conjugated_ladder(const DriveParams& drive, double t, int dim) {
  const double lambda = drive.displacement();
  const int block = reliable_levels(dim, lambda);
  if (block < 1) {
    throw TruncationError("identity check: dim " + std::to_string(dim) +
                          " leaves no reliable levels for A/omega = " + std::to_string(lambda));
  }
  const LadderMatrices ops = ladder_matrices(dim);
  const Complex i(0.0, 1.0);
  const OperatorMatrix generator =
      -i * t * (drive.omega * ops.number + drive.amplitude * (ops.a + ops.a_dagger));
  const OperatorMatrix u0 = unitary_expm(generator);
  ConjugatedLadder out;
  out.heisenberg = u0.adjoint() * ops.a * u0;
  out.displaced = displacement_matrix(-lambda, dim) * ops.a * displacement_matrix(lambda, dim);
  out.block = block;
  return out;
}

void check_guard(const FockVector& v, double reference, const char* what) {
  double mass = 0.0;
  for (int n = v.dim() - kGuardBand; n < v.dim(); ++n) mass += std::norm(v[n]);
  if (mass > 1e-12 * reference) {
    throw TruncationError(std::string(what) + ": state reaches the top of a dim " +
                          std::to_string(v.dim()) + " space");
  }
}

}  // namespace

DriveParams DriveParams::make(double amplitude, double omega, double g, int photons) {
  if (!std::isfinite(amplitude) || amplitude < 0.0) throw ValidationError("A must be >= 0");
  if (!std::isfinite(omega) || !(omega > 0.0)) throw ValidationError("omega must be positive");
  if (!std::isfinite(g) || !(g > 0.0)) throw ValidationError("g must be positive");
  if (photons < 1) throw ValidationError("photon order must be >= 1");
  return DriveParams{amplitude, omega, g, photons};
}

double DriveParams::predicted_eta() const {
  return omega * omega / (amplitude * amplitude + omega * omega);
}

double displaced_frame_identity_defect(const DriveParams& drive, double t, int dim) {
  const ConjugatedLadder c = conjugated_ladder(drive, t, dim);
  const Complex rotation = std::exp(Complex(0.0, -drive.omega * t));
  return block_operator_defect(c.heisenberg, rotation * c.displaced, c.block);
}

double heisenberg_identity_defect(const DriveParams& drive, double t, int dim) {
  const ConjugatedLadder c = conjugated_ladder(drive, t, dim);
  const Complex rotation = std::exp(Complex(0.0, -drive.omega * t));
  const OperatorMatrix shift =
      drive.displacement() * OperatorMatrix::Identity(dim, dim);
  return block_operator_defect(c.heisenberg, rotation * c.displaced - shift, c.block);
}

DetectionOutcome generate_by_detection(const DriveParams& drive, double t, int dim) {
  const double lambda = drive.displacement();
  const int m = drive.photons;
  if (dim == 0) dim = working_dimension(m, lambda);
  if (dim < m + kGuardBand + 1) throw TruncationError("generate_by_detection: dim too small");

  const FockVector start = coherent_vector(lambda, dim);
  // Each |n, e> mixes only with |n + M, g>.
  Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(dim);
  double dropped = 0.0;
  for (int n = 0; n < dim; ++n) {
    const double coupling =
        std::exp(0.5 * (log_factorial(n + m) - log_factorial(n)));
    const Complex amp = Complex(0.0, -1.0) * std::sin(drive.g * t * coupling) * start[n];
    if (n + m < dim) {
      ground[n + m] = amp;
    } else {
      dropped += std::norm(amp);
    }
  }
  const double probability = ground.squaredNorm() + dropped;
  DetectionOutcome out;
  out.probability = probability;
  if (probability == 0.0) return out;
  if (dropped > 1e-12 * probability) {
    throw TruncationError("generate_by_detection: coupling pushes weight past dim " +
                          std::to_string(dim));
  }
  const FockVector field = apply_operator(displacement_matrix(-lambda, dim), FockVector(ground));
  check_guard(field, probability, "generate_by_detection");
  out.field = field.normalized();
  return out;
}

std::vector<GenerationRow> generation_sweep(const std::vector<double>& a_over_omega, double gt,
                                            int photons) {
  std::vector<GenerationRow> rows;
  rows.reserve(a_over_omega.size());
  for (double ratio : a_over_omega) {
    const DriveParams drive = DriveParams::make(ratio, 1.0, 1.0, photons);
    const DetectionOutcome outcome = generate_by_detection(drive, gt);
    const IntermediateParams target = IntermediateParams::from_lambda(ratio, photons);
    const double f = outcome.field ? fidelity(*outcome.field, intermediate_state(target)) : 0.0;
    rows.push_back({ratio, drive.predicted_eta(), f, outcome.probability});
  }
  return rows;
}

KerrParams KerrParams::make(double gamma, double lambda, int order) {
  if (!std::isfinite(gamma)) throw ValidationError("Kerr gamma must be finite");
  if (!std::isfinite(lambda) || lambda < 0.0) throw ValidationError("Kerr lambda must be >= 0");
  if (order < 1) throw ValidationError("Kerr order must be >= 1");
  return KerrParams{gamma, lambda, order};
}

bool KerrParams::first_order_reliable() const {
  return std::abs(gamma) * std::pow(lambda, 4) <= 0.1;
}

namespace {

// gamma / (S+1)! * n (n-1) ... (n-S).
double kerr_phase(const KerrParams& kerr, int n) {
  if (n <= kerr.order) return 0.0;
  return kerr.gamma * std::exp(log_binomial(n, kerr.order + 1));
}

int kerr_dim(const KerrParams& kerr, int dim) {
  return dim == 0 ? working_dimension(kerr.order + 1, kerr.lambda) : dim;
}

}  // namespace

FockVector kerr_output(const KerrParams& kerr, int dim) {
  dim = kerr_dim(kerr, dim);
  const FockVector input = coherent_vector(kerr.lambda, dim);
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n) v[n] = std::polar(1.0, kerr_phase(kerr, n)) * input[n];
  const FockVector out = apply_operator(displacement_matrix(-kerr.lambda, dim), FockVector(v));
  check_guard(out, 1.0, "kerr_output");
  return out;
}

Complex kerr_first_order_component(const KerrParams& kerr, int dim) {
  dim = kerr_dim(kerr, dim);
  const FockVector input = coherent_vector(kerr.lambda, dim);
  // (e^{i phi} - 1) written as 2 i sin(phi/2) e^{i phi/2} to keep small phases exact.
  Eigen::VectorXcd v(dim);
  for (int n = 0; n < dim; ++n) {
    const double half = 0.5 * kerr_phase(kerr, n);
    v[n] = Complex(0.0, 2.0 * std::sin(half)) * std::polar(1.0, half) * input[n];
  }
  const FockVector delta = apply_operator(displacement_matrix(-kerr.lambda, dim), FockVector(v));
  const IntermediateParams target = IntermediateParams::from_lambda(kerr.lambda, kerr.order + 1);
  return intermediate_state(target, dim).inner(delta);
}

Complex kerr_first_order_prediction(const KerrParams& kerr) {
  if (kerr.lambda == 0.0) return 0.0;
  const int k = kerr.order + 1;
  const double log_mag = -log_factorial(k) + k * std::log(kerr.lambda) +
                         0.5 * (log_factorial(k) +
                                log_laguerre_negarg(k, kerr.lambda * kerr.lambda).log_magnitude);
  return Complex(0.0, kerr.gamma * std::exp(log_mag));
}

}  // namespace ncstates
