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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncstates/analysis.hpp"
#include "ncstates/csv.hpp"
#include "ncstates/errors.hpp"

using namespace ncstates;

namespace {

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("ncstates_unit_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-1.5) == "-1.5");
  CHECK(format_number(0.1) == "0.10000000000000001");
  for (double v : {M_PI, 1e-300, -2.5e17, 1.0 / 3.0}) {
    CHECK(std::stod(format_number(v)) == v);
  }
}

TEST_CASE("csv table") {
  CsvTable t({"a", "b"});
  t.add_row({1.0, 2.5});
  t.add_row({-3.0, 0.25});
  CHECK(t.rows() == 2);
  CHECK(t.render() == "a,b\n1,2.5\n-3,0.25\n");
  CHECK_THROWS_AS(t.add_row({1.0}), ValidationError);
  CHECK_THROWS_AS(CsvTable({}), ValidationError);
}

TEST_CASE("atomic file writes") {
  const auto dir = scratch_dir("csv");
  CsvTable t({"x"});
  t.add_row({4.0});
  t.add_row({5.0});
  write_csv(dir / "out.csv", t);
  CHECK(read_all(dir / "out.csv") == "x\n4\n5\n");
  CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
  write_file_atomic(dir / "out.csv", "replaced\n");
  CHECK(read_all(dir / "out.csv") == "replaced\n");
  CHECK_THROWS_AS(write_csv(dir / "missing" / "out.csv", t), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("field table ordering") {
  const PhaseGrid g = PhaseGrid::make(0, 1, 0, 2, 2, 3);
  const ScalarField f = rasterize([](Complex b) { return b.real() + 10 * b.imag(); }, g);
  const CsvTable t = field_table(f, "q");
  CHECK(t.header() == std::vector<std::string>{"x", "y", "q"});
  CHECK(t.render() == "x,y,q\n0,0,0\n0,1,10\n0,2,20\n1,0,1\n1,1,11\n1,2,21\n");
}

TEST_CASE("distribution helpers") {
  CHECK(total_variation({0.5, 0.5}, {0.5, 0.5}) == 0.0);
  CHECK(total_variation({1.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(shift_up({0.2, 0.8}, 2) == std::vector<double>{0.0, 0.0, 0.2, 0.8});
  CHECK_THROWS_AS(shift_up({1.0}, -1), ValidationError);
  CHECK(average({1.0}, {0.0, 1.0}) == std::vector<double>{0.5, 0.5});

  std::vector<double> p(41, 0.0);
  for (int n = 0; n < 41; ++n) p[n] = std::exp(-0.5 * (n - 20.0) * (n - 20.0) / 4.0);
  const Band b = central_band(p, 2.9);
  CHECK(b.lo == 15);
  CHECK(b.hi == 25);
  CHECK_THROWS_AS(central_band(std::vector<double>(3, 0.0)), ValidationError);
}

TEST_CASE("minimum ratios") {
  const std::vector<double> comb{1.0, 0.1, 2.0, 0.4, 1.0, 0.05, 3.0};
  const auto r = worst_minimum_ratio(comb, {0, 6});
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(0.4));
  CHECK_FALSE(worst_minimum_ratio({1.0, 2.0, 3.0}, {0, 2}).has_value());
  CHECK(band_relative_deviation({1.1, 2.0}, {1.0, 2.0}, {0, 1}) == doctest::Approx(0.1 / 3.0));
}

TEST_CASE("revival detection") {
  const std::vector<double> tau = linspace(0.0, 1.5 * M_PI, 4001);
  std::vector<double> w;
  for (double t : tau) {
    const double envelope = std::exp(-t * t / 0.02) + 0.6 * std::exp(-(t - 3.0) * (t - 3.0) / 0.05);
    w.push_back(envelope * std::cos(60.0 * t));
  }
  const RevivalReport r = detect_revival(tau, w, 80);
  CHECK(r.collapse_tau < 0.3);
  CHECK(r.collapse_floor < 0.05);
  CHECK(r.revival_tau == doctest::Approx(3.0).epsilon(0.02));
  CHECK(r.revival_peak == doctest::Approx(0.6).epsilon(0.05));

  std::vector<double> steady(tau.size(), 1.0);
  CHECK_THROWS_AS(detect_revival(tau, steady, 10), NumericalError);
  CHECK_THROWS_AS(detect_revival(tau, {1.0}, 10), ValidationError);
}

TEST_CASE("contour widths of a Gaussian") {
  const double sx = 0.7, sy = 1.3;
  const PhaseGrid g = PhaseGrid::make(-6, 6, -6, 6, 241, 241);
  const ScalarField f = rasterize(
      [&](Complex b) {
        return std::exp(-0.5 * (b.real() * b.real() / (sx * sx) + b.imag() * b.imag() / (sy * sy)));
      },
      g);
  const ContourWidths w = contour_widths(f);
  const double fwhm = 2.0 * std::sqrt(2.0 * std::log(2.0));
  CHECK(w.x_width == doctest::Approx(fwhm * sx).epsilon(2e-3));
  CHECK(w.y_width == doctest::Approx(fwhm * sy).epsilon(2e-3));

  const ScalarField flat = rasterize([](Complex) { return 1.0; }, g);
  CHECK_THROWS_AS(contour_widths(flat), NumericalError);
}

TEST_CASE("linspace") {
  const std::vector<double> v = linspace(0.0, 1.0, 5);
  CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), ValidationError);
}
