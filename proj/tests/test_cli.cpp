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

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + NCSTATES_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("state output") {
  const Run r = run("state --eta 0.5 --m 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,re,im\n0,0.3779644730092272", 0) == 0);
  CHECK(run("state --eta 0.5 --m 2 --dim 5").out.find("\n4,0,0\n") != std::string::npos);
  const Run b = run("state --family binomial --eta 0.25 --m 2");
  CHECK(b.out.rfind("n,re,im\n0,0.75,0\n1,0.612372435695794", 0) == 0);
  CHECK(b.out.find("\n2,0.25,0\n") != std::string::npos);
}

TEST_CASE("stats output") {
  const Run r = run("stats --eta 0.5 --m 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eta,m,mean_n,mean_n2,mandel_q,g2,mean_x,mean_p,var_x,var_p,snr\n", 0) == 0);
  CHECK(r.out.find("0.5,2,1.1428571428571428,") != std::string::npos);
  const Run range = run("stats --eta 0.1:0.9:5 --m 3");
  CHECK(std::count(range.out.begin(), range.out.end(), '\n') == 6);
  CHECK(run("stats --eta 0.3 --m 0").out.find(",nan,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("stats --eta 0 --m 2").code == 1);
  CHECK(run("stats --eta 1.5 --m 2").code == 1);
  CHECK(run("state --eta 0.5 --m 2 --bogus").code == 1);
  CHECK(run("state --format json").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("figure fig99 --out /tmp/ncstates_unused").code == 1);
  // photon-added state that does not fit in the requested space
  CHECK(run("state --family photon-added --eta 0.1 --m 1 --dim 5").code == 2);
  CHECK(run("selftest").code == 0);
  CHECK(run("selftest --inject-lambda-sign-fault").code == 2);
}

TEST_CASE("phase space and dynamics commands") {
  const Run q = run("qfunc --eta 0.5 --m 2 --grid -1,1,-1,1,3,3");
  CHECK(q.code == 0);
  CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 10);
  CHECK(run("qfunc --eta 0.5 --m 2 --grid -1,1,-1,1,3,3 --method direct").code == 0);
  CHECK(run("wigner --eta 0.5 --m 2 --grid -1,1,-1,1,3").code == 1);
  const Run w = run("wigner --eta 0.5 --m 2 --grid 0,1,0,1,2,2 --method oracle");
  CHECK(w.out.rfind("x,y,value\n0,0,", 0) == 0);
  CHECK(run("wigner --eta 0.5 --m 2 --grid 0,0,0,0,1,1").code == 1);

  const Run inv = run("jcm --eta 0.999 --m 4 --tau 0:pi:3");
  CHECK(inv.code == 0);
  CHECK(inv.out.rfind("tau,inversion\n0,", 0) == 0);
  CHECK(std::stod(inv.out.substr(16)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(run("jcm --eta 0.5 --m 2 --tau 0,0.5 --observable entropy").out.rfind("tau,entropy\n0,", 0) == 0);
  CHECK(run("jcm --eta 0.5 --m 2 --tau 0.5 --observable pn").code == 0);
  CHECK(run("jcm --eta 0.5 --m 2 --tau 0.5 --observable qfunc --grid -1,1,-1,1,2,2").code == 0);
  CHECK(run("jcm --eta 0.5 --m 2 --tau 0.5 --observable pn --delta 0.3").code == 1);
  CHECK(run("jcm --eta 0.5 --m 2 --tau 0:1:5 --delta 0.3").code == 0);

  CHECK(run("generate --mode detection --ratios 0,0.5 --gt 0.001").code == 0);
  CHECK(run("generate --mode kerr --gamma 0.01 --lambda 1").code == 0);
}

TEST_CASE("figure command honours --out and the environment") {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "ncstates_unit_cli";
  fs::remove_all(base);
  const Run a = run("figure fig1 --eta-points 11 --out " + (base / "a").string());
  CHECK(a.code == 0);
  CHECK(a.out == (base / "a" / "fig1_mandel_q.csv").string() + "\n");
  setenv("NCSTATES_OUT_DIR", (base / "env").string().c_str(), 1);
  const Run b = run("figure fig1 --eta-points 11");
  unsetenv("NCSTATES_OUT_DIR");
  CHECK(b.code == 0);
  REQUIRE(fs::exists(base / "env" / "fig1_mandel_q.csv"));
  CHECK(read_all(base / "a" / "fig1_mandel_q.csv") == read_all(base / "env" / "fig1_mandel_q.csv"));
  fs::remove_all(base);
}

TEST_CASE("output file matches stdout") {
  namespace fs = std::filesystem;
  const fs::path file = fs::temp_directory_path() / "ncstates_unit_cli_stats.csv";
  const Run to_file = run("stats --eta 0.2,0.7 --m 5 --out " + file.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_all(file) == run("stats --eta 0.2,0.7 --m 5").out);
  fs::remove(file);
}
