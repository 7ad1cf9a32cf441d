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

// Command-line front end: every subcommand prints CSV to stdout unless --out
// names a file; `figure` writes a directory of CSV files.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncstates/analysis.hpp"
#include "ncstates/csv.hpp"
#include "ncstates/errors.hpp"
#include "ncstates/figures.hpp"
#include "ncstates/generation.hpp"
#include "ncstates/jcm.hpp"
#include "ncstates/quasiprob.hpp"
#include "ncstates/selftest.hpp"
#include "ncstates/states.hpp"
#include "ncstates/statistics.hpp"

namespace {

using namespace ncstates;

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

// Accepts plain numbers and multiples of pi such as "pi", "3pi/4", "-0.5*pi".
double parse_scalar(const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used == token.size()) return v;
  } catch (const std::logic_error&) {
  }
  static const std::regex pi_form(R"(^\s*([-+]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(\d+\.?\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(token, m, pi_form)) {
    double coef = 1.0;
    if (m[1].length() == 1 && (m[1] == "-" || m[1] == "+")) {
      coef = m[1] == "-" ? -1.0 : 1.0;
    } else if (m[1].length() > 0) {
      coef = std::stod(m[1]);
    }
    const double den = m[2].matched ? std::stod(m[2]) : 1.0;
    if (den == 0.0) throw ValidationError("division by zero in \"" + token + "\"");
    return coef * std::numbers::pi / den;
  }
  throw ValidationError("not a number: \"" + token + "\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// "a,b,c" or "start:stop:count".
std::vector<double> parse_values(const std::string& spec, const char* what) {
  if (spec.empty()) throw ValidationError(std::string(what) + " must not be empty");
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
      throw ValidationError(std::string(what) + " range must be start:stop:count");
    }
    const double count = parse_scalar(parts[2]);
    if (count < 1 || count != std::floor(count) || count > 1e7) {
      throw ValidationError(std::string(what) + " count must be a positive integer");
    }
    return linspace(parse_scalar(parts[0]), parse_scalar(parts[1]), static_cast<int>(count));
  }
  std::vector<double> out;
  for (const auto& p : split(spec, ',')) out.push_back(parse_scalar(p));
  return out;
}

void emit(const CsvTable& table, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << table.render();
  } else {
    write_csv(out, table);
  }
}

struct Common {
  double eta = 0.5;
  int m = 2;
  int dim = 0;
  std::string out;
  std::string format = "csv";
};

void add_state_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--eta", c.eta, "Interpolation parameter, 0 < eta <= 1");
  cmd->add_option("--m", c.m, "Photon number M");
  cmd->add_option("--dim", c.dim, "Fock-space dimension override");
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv"}));
}

int state_dim(const Common& c, int minimum) {
  if (c.dim == 0) return minimum;
  if (c.dim < minimum) {
    throw ValidationError("--dim " + std::to_string(c.dim) + " is below the required " +
                          std::to_string(minimum));
  }
  return c.dim;
}

void run_state(const Common& c, const std::string& family) {
  FockVector psi = FockVector::vacuum(1);
  if (family == "intermediate") {
    const IntermediateParams p = IntermediateParams::from_eta(c.eta, c.m);
    psi = intermediate_state(p, state_dim(c, c.m + 1));
  } else if (family == "binomial") {
    if (c.m < 0) throw ValidationError("--m must be >= 0");
    psi = binomial_state(c.eta, c.m, state_dim(c, c.m + 1));
  } else {
    const IntermediateParams p = IntermediateParams::from_eta(c.eta, c.m);
    psi = photon_added_coherent(p.lambda(), c.m, c.dim);
  }
  CsvTable t({"n", "re", "im"});
  for (int n = 0; n < psi.dim(); ++n) t.add_row({double(n), psi[n].real(), psi[n].imag()});
  emit(t, c.out);
}

void run_stats(const Common& c, const std::string& etas) {
  CsvTable t({"eta", "m", "mean_n", "mean_n2", "mandel_q", "g2", "mean_x", "mean_p", "var_x",
              "var_p", "snr"});
  for (double eta : parse_values(etas, "--eta")) {
    const IntermediateParams p = IntermediateParams::from_eta(eta, c.m);
    const MomentReport mr = moments_closed(p);
    const QuadratureReport q = quadratures_closed(p);
    t.add_row({eta, double(c.m), mr.mean_n, mr.mean_n2, mr.mandel_q,
               mr.g2.value_or(std::numeric_limits<double>::quiet_NaN()), q.mean_x, q.mean_p,
               q.var_x, q.var_p, q.snr});
  }
  emit(t, c.out);
}

void run_phase_space(const Common& c, const std::string& grid_spec, const std::string& method,
                     bool wigner) {
  const IntermediateParams p = IntermediateParams::from_eta(c.eta, c.m);
  const PhaseGrid grid = PhaseGrid::parse(grid_spec);
  std::function<double(Complex)> fn;
  std::optional<FockVector> psi;
  if (method == "closed") {
    fn = wigner ? std::function<double(Complex)>([&](Complex b) { return wigner_closed(p, b); })
                : [&](Complex b) { return husimi_closed(p, b); };
  } else {
    psi = intermediate_state(p, state_dim(c, c.m + 1));
    fn = wigner ? std::function<double(Complex)>([&](Complex b) { return wigner_oracle(*psi, b); })
                : [&](Complex b) { return husimi_direct(*psi, b); };
  }
  emit(field_table(rasterize(fn, grid)), c.out);
}

struct JcmOptions {
  double g = 1.0;
  double delta = 0.0;
  std::string tau = "0:pi:2001";
  std::string observable = "inversion";
  std::string grid = "-11,11,-11,11,111,111";
};

void run_jcm(const Common& c, const JcmOptions& o) {
  const IntermediateParams p = IntermediateParams::from_eta(c.eta, c.m);
  const JcmParams jp = JcmParams::make(o.g, o.delta);
  const FockVector psi = intermediate_state(p, state_dim(c, c.m + 1));
  const std::vector<double> taus = parse_values(o.tau, "--tau");
  auto single_tau = [&]() {
    if (taus.size() != 1) {
      throw ValidationError("--observable " + o.observable + " needs exactly one --tau value");
    }
    return taus.front() / o.g;
  };
  if (o.observable == "inversion" || o.observable == "entropy") {
    CsvTable t({"tau", o.observable});
    for (double tau : taus) {
      const double t_phys = tau / o.g;
      const double v = o.observable == "inversion" ? inversion(jp, psi, t_phys)
                                                   : entropy(atomic_density(jp, psi, t_phys));
      t.add_row({tau, v});
    }
    emit(t, c.out);
  } else if (o.observable == "pn") {
    const std::vector<double> pn = photon_distribution(jp, psi, single_tau());
    CsvTable t({"n", "p_n"});
    for (std::size_t n = 0; n < pn.size(); ++n) t.add_row({double(n), pn[n]});
    emit(t, c.out);
  } else {
    const double t_phys = single_tau();
    const ScalarField f = rasterize(
        [&](Complex b) { return field_qfunction(jp, psi, t_phys, b); }, PhaseGrid::parse(o.grid));
    emit(field_table(f, "q"), c.out);
  }
}

struct GenerateOptions {
  std::string mode = "detection";
  std::string ratios = "0,0.5,1,2,5";
  double gt = 1e-3;
  int photons = 1;
  double gamma = 1e-3;
  double lambda = 1.0;
  int order = 1;
};

void run_generate(const Common& c, const GenerateOptions& o) {
  if (o.mode == "detection") {
    if (!(o.gt > 0.0) || !std::isfinite(o.gt)) throw ValidationError("--gt must be positive");
    CsvTable t({"A_over_omega", "predicted_eta", "fidelity", "detection_probability"});
    for (const GenerationRow& r : generation_sweep(parse_values(o.ratios, "--ratios"), o.gt,
                                                   o.photons)) {
      t.add_row({r.a_over_omega, r.predicted_eta, r.fidelity, r.detection_probability});
    }
    emit(t, c.out);
    return;
  }
  const KerrParams k = KerrParams::make(o.gamma, o.lambda, o.order);
  const Complex comp = kerr_first_order_component(k, c.dim);
  const Complex pred = kerr_first_order_prediction(k);
  const FockVector out = kerr_output(k, c.dim);
  CsvTable t({"gamma", "lambda", "order", "vacuum_probability", "component_re", "component_im",
              "prediction_re", "prediction_im", "first_order_reliable"});
  t.add_row({k.gamma, k.lambda, double(k.order), std::norm(out[0]), comp.real(), comp.imag(),
             pred.real(), pred.imag(), k.first_order_reliable() ? 1.0 : 0.0});
  emit(t, c.out);
}

int run_selftest_command(bool inject) {
  SelfTestOptions options;
  options.flip_lambda_sign = inject;
  const auto results = run_selftest(options);
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%-4s %-36s %8.3fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    ok = ok && r.passed;
  }
  std::printf("%s\n", ok ? "selftest passed" : "selftest FAILED");
  return ok ? 0 : kExitNumerical;
}

int run_figure(const std::string& id, const std::string& out, const FigureOptions& options) {
  std::string dir = out;
  if (dir.empty()) {
    const char* env = std::getenv("NCSTATES_OUT_DIR");
    dir = env && *env ? env : "figures";
  }
  std::vector<std::string> ids;
  if (id == "all") {
    ids = figure_ids();
  } else {
    ids.push_back(id);
  }
  for (const auto& one : ids) {
    for (const auto& path : write_figure(one, dir, options)) std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intermediate number-coherent states: construction, statistics, phase space, "
               "two-photon JCM dynamics and generation schemes"};
  app.require_subcommand(1);

  Common common;

  std::string family = "intermediate";
  auto* state = app.add_subcommand("state", "Fock amplitudes of a state");
  add_state_options(state, common);
  state->add_option("--family", family, "intermediate | binomial | photon-added")
      ->check(CLI::IsMember({"intermediate", "binomial", "photon-added"}));

  std::string etas = "0.5";
  auto* stats = app.add_subcommand("stats", "Closed-form photon statistics and quadratures");
  stats->add_option("--eta", etas, "eta value, list a,b,c or range start:stop:count");
  stats->add_option("--m", common.m, "Photon number M");
  stats->add_option("--out", common.out, "Output file (default stdout)");
  stats->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv"}));

  std::string grid = "-6,6,-6,6,121,121";
  std::string method = "closed";
  auto* qfunc = app.add_subcommand("qfunc", "Husimi Q function on a grid");
  add_state_options(qfunc, common);
  qfunc->add_option("--grid", grid, "xmin,xmax,ymin,ymax,nx,ny");
  qfunc->add_option("--method", method, "closed | direct")
      ->check(CLI::IsMember({"closed", "direct"}));

  auto* wigner = app.add_subcommand("wigner", "Wigner function on a grid");
  add_state_options(wigner, common);
  wigner->add_option("--grid", grid, "xmin,xmax,ymin,ymax,nx,ny");
  wigner->add_option("--method", method, "closed | oracle")
      ->check(CLI::IsMember({"closed", "oracle"}));

  JcmOptions jo;
  auto* jcm = app.add_subcommand("jcm", "Two-photon Jaynes-Cummings dynamics (tau = g t)");
  add_state_options(jcm, common);
  jcm->add_option("--g", jo.g, "Two-photon coupling g");
  jcm->add_option("--delta", jo.delta, "Detuning");
  jcm->add_option("--tau", jo.tau, "Scaled times: list a,b,c or start:stop:count; pi allowed");
  jcm->add_option("--observable", jo.observable, "inversion | entropy | pn | qfunc")
      ->check(CLI::IsMember({"inversion", "entropy", "pn", "qfunc"}));
  jcm->add_option("--grid", jo.grid, "Grid for qfunc: xmin,xmax,ymin,ymax,nx,ny");

  GenerateOptions go;
  auto* gen = app.add_subcommand("generate", "Detection-conditioned and Kerr generation schemes");
  gen->add_option("--mode", go.mode, "detection | kerr")
      ->check(CLI::IsMember({"detection", "kerr"}));
  gen->add_option("--ratios", go.ratios, "A/omega values for the detection sweep");
  gen->add_option("--gt", go.gt, "Coupling time g t");
  gen->add_option("--m", go.photons, "Photon order of the coupling");
  gen->add_option("--gamma", go.gamma, "Kerr phase strength");
  gen->add_option("--lambda", go.lambda, "Kerr input amplitude");
  gen->add_option("--order", go.order, "Kerr order S");
  gen->add_option("--dim", common.dim, "Fock-space dimension override (kerr)");
  gen->add_option("--out", common.out, "Output file (default stdout)");
  gen->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv"}));

  std::string figure_id;
  std::string figure_out;
  FigureOptions fo;
  auto* figure = app.add_subcommand("figure", "Write figure datasets as CSV");
  figure->add_option("id", figure_id, "fig1 .. fig9 or all")->required();
  figure->add_option("--out", figure_out,
                     "Output directory (default $NCSTATES_OUT_DIR, else ./figures)");
  figure->add_option("--eta-points", fo.eta_points, "Points in eta sweeps");
  figure->add_option("--tau-points", fo.tau_points, "Points in tau sweeps");
  figure->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv"}));

  bool inject = false;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant checks");
  selftest->add_flag("--inject-lambda-sign-fault", inject,
                     "Flip the sign of lambda in constructed states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*state) run_state(common, family);
    if (*stats) run_stats(common, etas);
    if (*qfunc) run_phase_space(common, grid, method, false);
    if (*wigner) run_phase_space(common, grid, method, true);
    if (*jcm) run_jcm(common, jo);
    if (*gen) run_generate(common, go);
    if (*figure) {
      const auto& ids = figure_ids();
      if (figure_id != "all" && std::find(ids.begin(), ids.end(), figure_id) == ids.end()) {
        throw ValidationError("unknown figure \"" + figure_id + "\" (expected fig1 .. fig9 or all)");
      }
      return run_figure(figure_id, figure_out, fo);
    }
    if (*selftest) return run_selftest_command(inject);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
