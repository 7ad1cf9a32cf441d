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

#include "ncstates/figures.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "ncstates/analysis.hpp"
#include "ncstates/errors.hpp"
#include "ncstates/jcm.hpp"
#include "ncstates/quasiprob.hpp"
#include "ncstates/statistics.hpp"

namespace ncstates {
namespace {

constexpr double kPi = std::numbers::pi;

// A parameter value paired with the text used for it in file names.
struct Labeled {
  double value;
  const char* label;
};

struct Case {
  int m;
  Labeled eta;
};

struct Snapshot {
  double tau;
  const char* label;
};

const Snapshot kSnapshots[] = {
    {0.0, "0"}, {kPi / 4, "pi4"}, {kPi / 2, "pi2"}, {3 * kPi / 4, "3pi4"}, {kPi, "pi"}};

std::string case_suffix(const Case& c) {
  return "m" + std::to_string(c.m) + "_eta" + c.eta.label;
}

std::vector<double> eta_grid(const FigureOptions& o) { return linspace(0.0, 1.0, o.eta_points); }

// Columns of statistics at every eta; eta = 0 uses the vacuum limit.
CsvTable eta_sweep(const FigureOptions& o, std::vector<std::string> header,
                   const std::function<std::vector<double>(double)>& row_at,
                   const std::vector<double>& vacuum_row) {
  CsvTable table(std::move(header));
  for (double eta : eta_grid(o)) {
    std::vector<double> row{eta};
    const std::vector<double> rest = eta > 0.0 ? row_at(eta) : vacuum_row;
    row.insert(row.end(), rest.begin(), rest.end());
    table.add_row(row);
  }
  return table;
}

std::vector<NamedTable> fig1(const FigureOptions& o) {
  const int ms[] = {2, 50, 100};
  CsvTable t = eta_sweep(
      o, {"eta", "q_m2", "q_m50", "q_m100", "q_binomial"},
      [&](double eta) {
        std::vector<double> row;
        for (int m : ms) row.push_back(moments_closed(IntermediateParams::from_eta(eta, m)).mandel_q);
        row.push_back(0.0 - eta);
        return row;
      },
      {0.0, 0.0, 0.0, 0.0});
  return {{"fig1_mandel_q.csv", std::move(t)}};
}

std::vector<NamedTable> fig2(const FigureOptions& o) {
  const int ms[] = {2, 20, 50, 200};
  CsvTable t = eta_sweep(
      o, {"eta", "var_x_m2", "var_x_m20", "var_x_m50", "var_x_m200"},
      [&](double eta) {
        std::vector<double> row;
        for (int m : ms) row.push_back(quadratures_closed(IntermediateParams::from_eta(eta, m)).var_x);
        return row;
      },
      {0.5, 0.5, 0.5, 0.5});
  return {{"fig2_var_x.csv", std::move(t)}};
}

std::vector<NamedTable> fig3(const FigureOptions& o) {
  const int ms[] = {2, 10, 20, 50};
  CsvTable a = eta_sweep(
      o, {"eta", "snr_m2", "snr_m10", "snr_m20", "snr_m50"},
      [&](double eta) {
        std::vector<double> row;
        for (int m : ms) row.push_back(quadratures_closed(IntermediateParams::from_eta(eta, m)).snr);
        return row;
      },
      {0.0, 0.0, 0.0, 0.0});
  CsvTable b = eta_sweep(
      o, {"eta", "snr", "four_n_n_plus_1", "four_n", "var_x"},
      [](double eta) {
        const IntermediateParams p = IntermediateParams::from_eta(eta, 10);
        const double n = moments_closed(p).mean_n;
        const QuadratureReport q = quadratures_closed(p);
        return std::vector<double>{q.snr, 4.0 * n * (n + 1.0), 4.0 * n, q.var_x};
      },
      {0.0, 0.0, 0.0, 0.5});
  std::vector<NamedTable> out;
  out.push_back({"fig3a_snr.csv", std::move(a)});
  out.push_back({"fig3b_snr_m10.csv", std::move(b)});
  return out;
}

std::vector<NamedTable> fig4(const FigureOptions&) {
  const Labeled etas[] = {{0.1, "0.1"}, {0.4, "0.4"}, {0.7, "0.7"}, {1.0, "1"}};
  const PhaseGrid grid = PhaseGrid::make(-4, 4, -4, 4, 101, 101);
  std::vector<NamedTable> out;
  for (const Labeled& eta : etas) {
    const IntermediateParams p = IntermediateParams::from_eta(eta.value, 3);
    const ScalarField f = rasterize([&](Complex b) { return wigner_closed(p, b); }, grid);
    out.push_back({"fig4_wigner_" + case_suffix({3, eta}) + ".csv", field_table(f)});
  }
  return out;
}

std::vector<NamedTable> fig5(const FigureOptions&) {
  const Labeled etas[] = {{0.05, "0.05"}, {0.2, "0.2"}, {0.4, "0.4"},
                          {0.6, "0.6"},   {0.8, "0.8"}, {0.95, "0.95"}};
  const PhaseGrid grid = PhaseGrid::make(-6, 6, -6, 6, 121, 121);
  std::vector<NamedTable> out;
  for (const Labeled& eta : etas) {
    const IntermediateParams p = IntermediateParams::from_eta(eta.value, 10);
    const ScalarField f = rasterize([&](Complex b) { return husimi_closed(p, b); }, grid);
    out.push_back({"fig5_husimi_" + case_suffix({10, eta}) + ".csv", field_table(f)});
  }
  return out;
}

std::vector<NamedTable> tau_series(const FigureOptions& o, const std::vector<Case>& cases,
                                   const std::string& prefix, const std::string& column,
                                   const std::function<double(const FockVector&, double)>& fn) {
  std::vector<NamedTable> out;
  for (const Case& c : cases) {
    const FockVector psi = intermediate_state(IntermediateParams::from_eta(c.eta.value, c.m));
    CsvTable t({"tau", column});
    for (double tau : linspace(0.0, kPi, o.tau_points)) t.add_row({tau, fn(psi, tau)});
    out.push_back({prefix + case_suffix(c) + ".csv", std::move(t)});
  }
  return out;
}

std::vector<NamedTable> fig6(const FigureOptions& o) {
  const JcmParams jp = JcmParams::make(1.0);
  return tau_series(o,
                    {{4, {0.999, "0.999"}}, {70, {0.8, "0.8"}}, {70, {0.1, "0.1"}},
                     {200, {0.001, "0.001"}}},
                    "fig6_inversion_", "inversion",
                    [&](const FockVector& psi, double tau) { return inversion(jp, psi, tau); });
}

std::vector<NamedTable> fig7(const FigureOptions& o) {
  const JcmParams jp = JcmParams::make(1.0);
  return tau_series(o,
                    {{4, {0.9999, "0.9999"}}, {70, {0.8, "0.8"}}, {70, {0.1, "0.1"}},
                     {200, {0.005, "0.005"}}},
                    "fig7_entropy_", "entropy", [&](const FockVector& psi, double tau) {
                      return entropy(atomic_density(jp, psi, tau));
                    });
}

const Labeled kJcmEtas[] = {{0.1, "0.1"}, {0.8, "0.8"}};

std::vector<NamedTable> fig8(const FigureOptions&) {
  const JcmParams jp = JcmParams::make(1.0);
  const PhaseGrid grid = PhaseGrid::make(-11, 11, -11, 11, 111, 111);
  std::vector<NamedTable> out;
  for (const Labeled& eta : kJcmEtas) {
    const FockVector psi = intermediate_state(IntermediateParams::from_eta(eta.value, 70));
    for (const Snapshot& s : kSnapshots) {
      const ScalarField f =
          rasterize([&](Complex b) { return field_qfunction(jp, psi, s.tau, b); }, grid);
      out.push_back({"fig8_field_q_" + case_suffix({70, eta}) + "_tau" + s.label + ".csv",
                     field_table(f, "q")});
    }
  }
  return out;
}

std::vector<NamedTable> fig9(const FigureOptions&) {
  const JcmParams jp = JcmParams::make(1.0);
  const double xi[] = {1.0 / 140.0, 1.0 / 180.0};
  std::vector<NamedTable> out;
  for (int k = 0; k < 2; ++k) {
    const Labeled& eta = kJcmEtas[k];
    const FockVector psi = intermediate_state(IntermediateParams::from_eta(eta.value, 70));
    std::vector<Snapshot> times(std::begin(kSnapshots), std::end(kSnapshots));
    times.push_back({kPi / 4 - xi[k], "pi4_minus_xi"});
    times.push_back({3 * kPi / 4 - xi[k], "3pi4_minus_xi"});
    for (const Snapshot& s : times) {
      CsvTable t({"n", "p_n"});
      const std::vector<double> p = photon_distribution(jp, psi, s.tau);
      for (std::size_t n = 0; n < p.size(); ++n) t.add_row({static_cast<double>(n), p[n]});
      out.push_back({"fig9_pn_" + case_suffix({70, eta}) + "_tau" + s.label + ".csv",
                     std::move(t)});
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4", "fig5",
                                            "fig6", "fig7", "fig8", "fig9"};
  return ids;
}

std::vector<NamedTable> build_figure(const std::string& id, const FigureOptions& options) {
  if (options.eta_points < 2) throw ValidationError("eta sweep needs at least 2 points");
  if (options.tau_points < 2) throw ValidationError("tau sweep needs at least 2 points");
  using Builder = std::vector<NamedTable> (*)(const FigureOptions&);
  static const std::pair<const char*, Builder> builders[] = {
      {"fig1", fig1}, {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4}, {"fig5", fig5},
      {"fig6", fig6}, {"fig7", fig7}, {"fig8", fig8}, {"fig9", fig9}};
  for (const auto& [name, build] : builders) {
    if (id == name) return build(options);
  }
  throw ValidationError("unknown figure \"" + id + "\" (expected fig1 .. fig9)");
}

std::vector<std::filesystem::path> write_figure(const std::string& id,
                                                const std::filesystem::path& out_dir,
                                                const FigureOptions& options) {
  const std::vector<NamedTable> tables = build_figure(id, options);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir.string());
  std::vector<std::filesystem::path> written;
  for (const NamedTable& t : tables) {
    const std::filesystem::path path = out_dir / t.file_name;
    write_csv(path, t.table);
    written.push_back(path);
  }
  return written;
}

}  // namespace ncstates
