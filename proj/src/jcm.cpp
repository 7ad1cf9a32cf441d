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

#include "ncstates/jcm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "ncstates/errors.hpp"

namespace ncstates {
namespace {

void require_resonant(const JcmParams& params, const char* what) {
  if (params.delta != 0.0) {
    throw ValidationError(std::string(what) + " is only available on resonance (delta = 0)");
  }
}

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace

JcmParams JcmParams::make(double g, double delta) {
  if (!std::isfinite(g) || !(g > 0.0)) throw ValidationError("coupling g must be positive");
  if (!std::isfinite(delta)) throw ValidationError("detuning must be finite");
  return JcmParams{g, delta};
}

double JcmParams::rabi(int n) const { return g * std::sqrt((n + 1.0) * (n + 2.0)); }

double JcmParams::detuned_rabi(int n) const {
  const double r = rabi(n);
  return std::sqrt(0.25 * delta * delta + r * r);
}

JointAtomField evolve(const JcmParams& params, const FockVector& initial, double t) {
  const int dim = initial.dim();
  const Complex i(0.0, 1.0);
  const Complex phase_e = std::exp(0.5 * i * params.delta * t);
  const Complex phase_g = std::conj(phase_e);
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(dim + 2);
  for (int n = 0; n < dim; ++n) {
    const Complex c = initial[n];
    if (c == 0.0) continue;
    const double dn = params.detuned_rabi(n);
    const double s = std::sin(dn * t);
    e[n] = c * (std::cos(dn * t) - i * (params.delta / (2.0 * dn)) * s) * phase_e;
    g[n + 2] = -i * c * (params.rabi(n) / dn) * s * phase_g;
  }
  return JointAtomField{FockVector(std::move(e)), FockVector(std::move(g)), t};
}

double inversion(const JcmParams& params, const FockVector& initial, double t) {
  if (params.delta != 0.0) {
    const JointAtomField joint = evolve(params, initial, t);
    return joint.excited_population() - joint.ground_population();
  }
  double w = 0.0;
  for (int n = 0; n < initial.dim(); ++n) {
    w += std::norm(initial[n]) * std::cos(2.0 * params.rabi(n) * t);
  }
  return w;
}

AtomicDensity atomic_density(const JointAtomField& joint) {
  AtomicDensity rho;
  rho.rho11 = joint.ground_population();
  rho.rho22 = joint.excited_population();
  // <E|G> over the common levels; E has fewer levels than G.
  Complex c = 0.0;
  for (int n = 0; n < joint.e_branch.dim(); ++n) c += std::conj(joint.e_branch[n]) * joint.g_branch[n];
  rho.rho12 = c;
  return rho;
}

AtomicDensity atomic_density(const JcmParams& params, const FockVector& initial, double t) {
  return atomic_density(evolve(params, initial, t));
}

Complex atomic_coherence_literal(const JcmParams& params, const FockVector& initial, double t) {
  require_resonant(params, "atomic_coherence_literal");
  Complex sum = 0.0;
  for (int n = 0; n + 2 < initial.dim(); ++n) {
    sum += std::conj(initial[n + 2]) * initial[n] * std::cos(params.rabi(n + 2) * t) *
           std::sin(params.rabi(n) * t);
  }
  return sum;
}

double entropy(const AtomicDensity& rho) {
  const double diff = rho.rho22 - rho.rho11;
  const double radius = std::sqrt(diff * diff + 4.0 * std::norm(rho.rho12));
  const double trace = rho.rho11 + rho.rho22;
  const double plus = 0.5 * (trace + radius);
  // The small eigenvalue from the determinant avoids cancellation in trace - radius.
  const double det = std::max(rho.rho11 * rho.rho22 - std::norm(rho.rho12), 0.0);
  const double minus = plus > 0.0 ? det / plus : 0.0;
  return plogp(plus) + plogp(minus);
}

OperatorMatrix field_density_matrix(const JointAtomField& joint) {
  const int dim = std::max(joint.e_branch.dim(), joint.g_branch.dim());
  const Eigen::VectorXcd e = joint.e_branch.resized(dim).amplitudes();
  const Eigen::VectorXcd g = joint.g_branch.resized(dim).amplitudes();
  return e * e.adjoint() + g * g.adjoint();
}

double field_entropy(const JointAtomField& joint) {
  const Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(field_density_matrix(joint),
                                                            Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("field_entropy: eigenvalue solver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  // Rank is at most two; the remaining eigenvalues are rounding noise.
  const Eigen::Index n = ev.size();
  double s = plogp(std::max(ev[n - 1], 0.0));
  if (n > 1) s += plogp(std::max(ev[n - 2], 0.0));
  return s;
}

double field_qfunction(const JcmParams& params, const FockVector& initial, double t,
                       Complex beta) {
  require_resonant(params, "field_qfunction");
  const Complex bc = std::conj(beta);
  // term_n = conj(beta)^n / sqrt(n!), advanced two steps ahead for the ground branch.
  Complex term = 1.0;
  Complex term2 = bc * bc / std::sqrt(2.0);
  Complex excited = 0.0;
  Complex ground = 0.0;
  for (int n = 0; n < initial.dim(); ++n) {
    if (n > 0) {
      term *= bc / std::sqrt(static_cast<double>(n));
      term2 *= bc / std::sqrt(n + 2.0);
    }
    const double omega_t = params.rabi(n) * t;
    excited += initial[n] * term * std::cos(omega_t);
    ground += initial[n] * term2 * std::sin(omega_t);
  }
  return std::exp(-std::norm(beta)) * (std::norm(excited) + std::norm(ground)) / std::numbers::pi;
}

std::vector<double> photon_distribution(const JcmParams& params, const FockVector& initial,
                                        double t) {
  require_resonant(params, "photon_distribution");
  const int dim = initial.dim();
  std::vector<double> p(dim + 2, 0.0);
  for (int n = 0; n < dim; ++n) {
    const double w = std::norm(initial[n]);
    const double c = std::cos(params.rabi(n) * t);
    p[n] += w * c * c;
    p[n + 2] += w * (1.0 - c * c);
  }
  return p;
}

std::vector<double> approx_pn_quarter(const IntermediateParams& params) {
  const int m = params.m();
  const double eta = params.eta();
  const FockVector c = intermediate_state(params, m + 1);
  const double quarter = std::numbers::pi / 4.0;
  std::vector<double> p(m + 3, 0.0);
  for (int n = 0; n <= m + 2; ++n) {
    const double s = std::sin((n - 0.5) * quarter);
    if (n <= m) {
      const double a = m - n + 2.0;
      const double b = m - n + 1.0;
      const double ratio = (1.0 - eta) * (1.0 - eta) * n * (n - 1.0) / (eta * eta * a * a * b * b);
      p[n] = (1.0 + ratio) * std::norm(c[n]) * s * s;
    } else {
      p[n] = std::norm(c[n - 2]) * s * s;
    }
  }
  return p;
}

double perfect_oscillation_shift(int n_band_center) {
  if (n_band_center < 1) throw ValidationError("perfect_oscillation_shift: n must be >= 1");
  return std::numbers::pi / (8.0 * (n_band_center - 0.5));
}

}  // namespace ncstates
