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

#include "ncstates/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "ncstates/fock_space.hpp"
#include "ncstates/generation.hpp"
#include "ncstates/jcm.hpp"
#include "ncstates/quasiprob.hpp"
#include "ncstates/special_functions.hpp"
#include "ncstates/states.hpp"
#include "ncstates/statistics.hpp"

namespace ncstates {
namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome within(double worst, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "worst " << worst << " (limit " << tol << ")";
  return {worst <= tol, os.str()};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

class Checks {
 public:
  explicit Checks(const SelfTestOptions& o) : options_(o) {}

  FockVector state(const IntermediateParams& p, int dim) const {
    FockVector s = intermediate_state(p, dim);
    if (!options_.flip_lambda_sign) return s;
    Eigen::VectorXcd v = s.amplitudes();
    for (int n = 0; n <= p.m(); ++n) {
      if ((p.m() - n) % 2 == 1) v[n] = -v[n];
    }
    return FockVector(v);
  }

  Outcome laguerre_recurrence() const {
    double worst = 0.0;
    for (double x = -20.0; x <= 20.0; x += 2.5) {
      for (int m = 1; m < 40; ++m) {
        const double lhs = (m + 1) * laguerre(m + 1, x);
        const double rhs = (2 * m + 1 - x) * laguerre(m, x) - m * laguerre(m - 1, x);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
    return within(worst, 1e-10);
  }

  Outcome log_laguerre() const {
    double worst = 0.0;
    for (int m : {0, 1, 5, 20, 60}) {
      for (double y : {0.0, 0.3, 2.0, 9.0}) {
        const double direct = laguerre(m, -y);
        worst = std::max(worst, std::abs(log_laguerre_negarg(m, y).to_double() - direct) / direct);
      }
    }
    return within(worst, 1e-10);
  }

  Outcome displacement_covariance() const {
    const int dim = 64;
    const double lambda = 1.0;
    const LadderMatrices ops = ladder_matrices(dim);
    const OperatorMatrix lhs =
        displacement_matrix(-lambda, dim) * ops.a_dagger * displacement_matrix(lambda, dim);
    const OperatorMatrix rhs = ops.a_dagger + lambda * OperatorMatrix::Identity(dim, dim);
    return within(block_operator_defect(lhs, rhs, reliable_levels(dim, lambda)), 1e-8);
  }

  Outcome eigen_residuals() const {
    double worst = 0.0;
    for (double eta : {0.1, 0.5, 0.9}) {
      for (int m : {1, 2, 5, 20}) {
        const IntermediateParams p = IntermediateParams::from_eta(eta, m);
        worst = std::max(worst, eigen_residual(state(p, m + 2), p));
      }
    }
    return within(worst, 1e-10);
  }

  Outcome lowering() const {
    double worst = 0.0;
    for (double eta : {0.2, 0.7}) {
      for (int m : {3, 8}) {
        const IntermediateParams p = IntermediateParams::from_eta(eta, m);
        const LadderMatrices ops = ladder_matrices(m + 1);
        FockVector v = state(p, m + 1);
        for (int k = 1; k <= m; ++k) {
          v = apply_operator(ops.a, v);
          const LoweringResult r = lower_k(p, k);
          const FockVector expected = intermediate_state(r.result, m + 1);
          worst = std::max(worst, (v.amplitudes() - r.coefficient * expected.amplitudes()).norm());
        }
      }
    }
    return within(worst, 1e-10);
  }

  Outcome statistics_agreement() const {
    double worst = 0.0;
    for (double eta : {0.05, 0.35, 0.65, 0.95}) {
      for (int m : {1, 4, 15, 40}) {
        const IntermediateParams p = IntermediateParams::from_eta(eta, m);
        const FockVector s = state(p, m + 3);
        const MomentReport mc = moments_closed(p), md = moments_direct(s);
        const QuadratureReport qc = quadratures_closed(p), qd = quadratures_direct(s);
        for (auto [a, b] : {std::pair{mc.mean_n, md.mean_n}, {mc.mean_n2, md.mean_n2},
                            {mc.mandel_q, md.mandel_q}, {qc.var_x, qd.var_x},
                            {qc.var_p, qd.var_p}, {qc.mean_x, qd.mean_x}}) {
          worst = std::max(worst, rel(a, b));
        }
      }
    }
    return within(worst, 1e-9);
  }

  Outcome snr_bound() const {
    double worst = -1e300;
    for (int m : {1, 2, 10, 50}) {
      for (int k = 1; k <= 20; ++k) {
        const IntermediateParams p = IntermediateParams::from_eta(k / 20.0, m);
        const double n = moments_closed(p).mean_n;
        worst = std::max(worst, quadratures_closed(p).snr - 4.0 * n * (n + 1.0));
      }
    }
    return {worst <= 1e-9, "max snr - 4<N>(<N>+1) = " + std::to_string(worst)};
  }

  Outcome quasiprob_agreement() const {
    double worst = 0.0;
    const Complex betas[] = {{0.0, 0.0}, {0.7, -0.4}, {-1.1, 0.9}};
    for (double eta : {0.3, 0.8}) {
      for (int m : {1, 3, 6}) {
        const IntermediateParams p = IntermediateParams::from_eta(eta, m);
        const FockVector s = state(p, m + 1);
        for (Complex b : betas) {
          worst = std::max(worst, std::abs(wigner_closed(p, b) - wigner_oracle(s, b)));
          worst = std::max(worst, std::abs(husimi_closed(p, b) - husimi_direct(s, b)));
        }
      }
    }
    return within(worst, 1e-8);
  }

  Outcome jcm_consistency() const {
    const JcmParams jp = JcmParams::make(1.0);
    const IntermediateParams p = IntermediateParams::from_eta(0.6, 12);
    const FockVector s = state(p, 13);
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) {
      const double t = 0.08 * k;
      const JointAtomField joint = evolve(jp, s, t);
      const AtomicDensity rho = atomic_density(joint);
      worst = std::max(worst, std::abs(rho.rho11 + rho.rho22 - 1.0));
      worst = std::max(worst, std::abs(inversion(jp, s, t) - (rho.rho22 - rho.rho11)));
      worst = std::max(worst, std::abs(entropy(rho) - field_entropy(joint)));
    }
    return within(worst, 1e-8);
  }

  Outcome generation_eta() const {
    double worst = 0.0;
    for (double ratio : {0.0, 0.5, 2.0}) {
      const DriveParams d = DriveParams::make(ratio, 1.0, 1.0);
      const DetectionOutcome out = generate_by_detection(d, 1e-3);
      const FockVector target = intermediate_state(IntermediateParams::from_lambda(ratio, 1));
      worst = std::max(worst, 1.0 - fidelity(*out.field, target));
    }
    return within(worst, 1e-4);
  }

  Outcome heisenberg_identity() const {
    const DriveParams d = DriveParams::make(0.5, 1.0, 1.0);
    return within(heisenberg_identity_defect(d, 1.0, 96), 1e-8);
  }

 private:
  SelfTestOptions options_;
};

}  // namespace

std::vector<CheckResult> run_selftest(const SelfTestOptions& options) {
  const Checks c(options);
  const std::pair<const char*, std::function<Outcome()>> suite[] = {
      {"special_fns.laguerre_recurrence", [&] { return c.laguerre_recurrence(); }},
      {"special_fns.log_domain", [&] { return c.log_laguerre(); }},
      {"fock_space.displacement_covariance", [&] { return c.displacement_covariance(); }},
      {"states.eigen_residual", [&] { return c.eigen_residuals(); }},
      {"states.lowering", [&] { return c.lowering(); }},
      {"statistics.closed_vs_direct", [&] { return c.statistics_agreement(); }},
      {"statistics.snr_bound", [&] { return c.snr_bound(); }},
      {"quasiprob.closed_vs_oracle", [&] { return c.quasiprob_agreement(); }},
      {"jcm.consistency", [&] { return c.jcm_consistency(); }},
      {"generation.predicted_eta", [&] { return c.generation_eta(); }},
      {"generation.heisenberg_identity", [&] { return c.heisenberg_identity(); }},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, run] : suite) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
      const Outcome o = run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ncstates
