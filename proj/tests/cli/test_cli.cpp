// Copyright 2026 The jbtoy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the installed command-line tool and re-validates what it prints.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string cli(const std::string& args) { return std::string(JBTOY_CLI_PATH) + " " + args; }

oracle::ProcessResult ok(const std::string& args) {
  const auto r = oracle::run(cli(args));
  INFO("command: ", args);
  REQUIRE(r.exit_code == 0);
  return r;
}

// stdout and stderr together, for message checks.
oracle::ProcessResult both(const std::string& args) { return oracle::run(cli(args) + " 2>&1"); }

fs::path scratch(const std::string& name) {
  const fs::path dir = JBTOY_CLI_SCRATCH;
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

double num(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  REQUIRE(used == s.size());
  return v;
}

// Square matrix from the c1..cN columns.
oracle::Matrix matrix_of(const oracle::Csv& csv, int n) {
  oracle::Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = num(csv.rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(csv.column("c" + std::to_string(j + 1)))));
    }
  }
  return m;
}

oracle::Matrix matrix_of(const Json& rows) {
  const auto n = static_cast<int>(rows.size());
  oracle::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get<double>();
  return m;
}

double max_abs(const oracle::Matrix& m) { return m.cwiseAbs().maxCoeff(); }

bool contains(const std::string& s, const std::string& fragment) {
  return s.find(fragment) != std::string::npos;
}

}  // namespace

TEST_CASE("hamiltonian dumps") {
  const auto r = ok("hamiltonian --n 2 --tau 0.5");
  CHECK(r.out == "row,c1,c2\n1,-1,0.5\n2,-0.5,1\n");

  const auto csv = oracle::parse_csv(ok("hamiltonian --n 4 --tau 0").out);
  CHECK(max_abs(matrix_of(csv, 4) - oracle::published_hamiltonian(4, 0.0)) == 0.0);

  const Json j = Json::parse(ok("hamiltonian --n 3 --tau 0.6 --format json").out);
  CHECK(j["n"] == 3);
  CHECK(j["tau"] == 0.6);
  CHECK(j["meta"]["model-version"].is_string());
  CHECK(max_abs(matrix_of(j["matrix"]) - oracle::published_hamiltonian(3, 0.6)) == 0.0);
  const auto want = oracle::energies_closed(3, 0.6L);
  for (size_t k = 0; k < 3; ++k)
    CHECK(std::abs(j["eigenvalues"][k].get<double>() - static_cast<double>(want[k])) <= 1e-12);

  const auto bad = both("hamiltonian --n 1 --tau 0.5");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "n must be ≥ 2"));
}

TEST_CASE("spectrum table") {
  const auto csv = oracle::parse_csv(ok("spectrum --n 5 --tau 0.4").out);
  REQUIRE(csv.header == std::vector<std::string>{"k", "energy", "theta"});
  REQUIRE(csv.rows.size() == 5);
  const auto e = oracle::energies_closed(5, 0.4L);
  const auto theta = oracle::metric_eigenvalues_product(5, 0.4);
  for (size_t k = 0; k < 5; ++k) {
    CHECK(std::abs(num(csv.rows[k][1]) - static_cast<double>(e[k])) <= 1e-12);
    CHECK(std::abs(num(csv.rows[k][2]) - theta[k]) <= 1e-12);
  }
  CHECK(both("spectrum --n 3 --tau 1.5").exit_code == 2);
}

TEST_CASE("metric dumps round-trip") {
  const auto csv = oracle::parse_csv(ok("metric --n 3 --tau 0.5").out);
  REQUIRE(csv.header.back() == "positive");
  const oracle::Matrix theta = matrix_of(csv, 3);
  CHECK(max_abs(theta - oracle::published_metric(3, 0.5)) <= 1e-12);
  CHECK(oracle::compatibility_residual(theta, 0.5) <= 1e-9);
  const double want[3] = {0.25, 0.75, 2.25};
  for (size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(num(csv.rows[k][static_cast<size_t>(csv.column("eigenvalue"))]) - want[k]) <= 1e-12);
    CHECK(csv.rows[k].back() == "1");
  }

  const auto pos = [](const std::string& args) {
    const auto c = oracle::parse_csv(ok(args).out);
    int negatives = 0;
    for (const auto& row : c.rows) negatives += row.back() == "0";
    return negatives;
  };
  CHECK(pos("metric --n 3 --tau 0.85 --g 0.8") == 0);
  CHECK(pos("metric --n 3 --tau 0.88 --g 0.8") == 1);

  const Json a = Json::parse(ok("metric --n 2 --tau 0.6 --alpha 0.5236 --format json").out);
  CHECK(a["family"] == "alpha");
  CHECK(max_abs(matrix_of(a["matrix"]) - oracle::published_metric_alpha(0.6, 0.5236)) <= 1e-12);
  CHECK(a["positive"] == true);

  const Json m4 = Json::parse(ok("metric --n 4 --tau 0.9 --format json").out);
  CHECK(max_abs(matrix_of(m4["matrix"]) - oracle::published_metric(4, 0.9)) <= 1e-12);

  CHECK(both("metric --n 2 --tau 0.5 --g 1").exit_code == 2);
  CHECK(both("metric --n 3 --tau 0.5 --alpha 1").exit_code == 2);
  CHECK(both("metric --n 3 --tau 0.5 --g 1 --alpha 1").exit_code == 2);
}

TEST_CASE("pascal tables") {
  const auto csv = oracle::parse_csv(ok("pascal --n 8").out);
  REQUIRE(csv.rows.size() == 8);
  for (int k = 1; k <= 4; ++k) {
    const auto want = oracle::published_table_row(k, 8);
    for (int m = 0; m < 8; ++m)
      CHECK(std::stoll(csv.rows[static_cast<size_t>(k - 1)][static_cast<size_t>(m + 1)]) == want[static_cast<size_t>(m)]);
  }
  CHECK(ok("pascal --n 1").out == "k,c1\n1,1\n");

  const auto big = oracle::parse_csv(ok("pascal --n 12").out);
  for (size_t k = 1; k < 12; ++k) {
    long long sum = 0;
    for (size_t m = 1; m <= 12; ++m) sum += std::stoll(big.rows[k][m]);
    CHECK(sum == 0);
  }
}

TEST_CASE("scan reproduces the closed-form curves") {
  for (int n : {3, 4}) {
    const auto csv = oracle::parse_csv(
        ok("scan --n " + std::to_string(n) + " --what metric-eigs --tau-min 0 --tau-max 1 --steps 40").out);
    REQUIRE(csv.header == std::vector<std::string>{"tau", "series", "value"});
    REQUIRE(csv.rows.size() == static_cast<size_t>(41 * n));
    double worst = 0.0;
    for (size_t i = 0; i < 41; ++i) {
      const double t = num(csv.rows[i * static_cast<size_t>(n)][0]);
      const auto want = oracle::metric_eigenvalues_product(n, t);
      for (size_t k = 0; k < static_cast<size_t>(n); ++k) {
        const auto& row = csv.rows[i * static_cast<size_t>(n) + k];
        CHECK(row[1] == "theta" + std::to_string(k + 1));
        worst = std::max(worst, std::abs(num(row[2]) - want[k]));
      }
    }
    CHECK(worst <= 1e-10);
    CHECK(num(csv.rows.back()[0]) == 1.0);
  }

  const Json g12 = Json::parse(ok("scan --n 3 --what metric-eigs --g 1.2 --tau-max 0.5 --steps 5 --format json").out);
  REQUIRE(g12["tau"].size() == 6);
  CHECK(std::abs(g12["series"]["theta1"][0].get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(g12["series"]["theta2"][0].get<double>() - 1.0) <= 1e-12);
  CHECK(std::abs(g12["series"]["theta3"][0].get<double>() - 1.4) <= 1e-12);

  // g = 1: strictly positive on the open interval.
  const Json g1 = Json::parse(ok("scan --n 3 --what metric-eigs --g 1 --tau-min 0.01 --tau-max 0.99 --steps 98 --format json").out);
  for (const auto& v : g1["series"]["theta1"]) CHECK(v.get<double>() > 0.0);
}

TEST_CASE("scan of derived quantities") {
  const Json a = Json::parse(ok("scan --n 3 --what anisotropy --tau-max 0.9 --steps 9 --format json").out);
  for (size_t i = 0; i < a["tau"].size(); ++i) {
    const double t = a["tau"][i].get<double>();
    CHECK(a["series"]["anisotropy"][i].get<double>() ==
          doctest::Approx(oracle::minimal_anisotropy(3, t)).epsilon(1e-9));
  }

  const Json c = Json::parse(ok("scan --n 2 --what coriolis-norm --tau-max 0.9 --steps 3 --format json").out);
  for (size_t i = 0; i < c["tau"].size(); ++i) {
    const double t = c["tau"][i].get<double>();
    const oracle::Matrix s = oracle::published_coriolis_n2(t);
    CHECK(std::abs(c["series"]["coriolis-norm"][i].get<double>() - oracle::norm_inf(s)) <= 1e-12);
  }

  const auto d = oracle::parse_csv(ok("scan --n 4 --what defectiveness --tau-max 0.95 --steps 19").out);
  for (size_t i = 1; i < d.rows.size(); ++i) CHECK(num(d.rows[i][2]) < num(d.rows[i - 1][2]));

  const auto horizon = both("scan --n 3 --what anisotropy --tau-max 1");
  CHECK(horizon.exit_code == 2);
  CHECK(contains(horizon.out, "metric-eigs"));
  CHECK(both("scan --n 3 --what coriolis-norm --g 1").exit_code == 2);
  CHECK(both("scan --n 3 --what metric-eigs --steps 0").exit_code == 2);
  CHECK(both("scan --n 3 --what volume").exit_code == 2);
}

TEST_CASE("coriolis matrices") {
  for (double t : {0.0, 0.7}) {
    const auto csv = oracle::parse_csv(ok("coriolis --n 2 --tau " + std::to_string(t)).out);
    CHECK(max_abs(matrix_of(csv, 2) - oracle::published_coriolis_n2(t)) <= 1e-12);
  }
  const auto fd = oracle::parse_csv(ok("coriolis --n 5 --tau 0.4 --numeric 1e-5").out);
  const auto sp = oracle::parse_csv(ok("coriolis --n 5 --tau 0.4").out);
  CHECK(max_abs(matrix_of(fd, 5) - matrix_of(sp, 5)) <= 1e-6);
  CHECK(both("coriolis --n 2 --tau 1").exit_code == 2);
}

TEST_CASE("evolution tables") {
  const auto full = oracle::parse_csv(
      ok("evolve --n 2 --frame s-full --tau0 0 --tau1 0.9 --step 1e-4 --stride 100").out);
  REQUIRE(full.header == std::vector<std::string>{"tau", "re1", "im1", "re2", "im2", "phys_norm"});
  REQUIRE(full.rows.size() == 91);
  CHECK(num(full.rows.back()[0]) == 0.9);
  const double n0 = num(full.rows.front().back());
  double drift = 0.0;
  for (const auto& row : full.rows) drift = std::max(drift, std::abs(num(row.back()) - n0) / n0);
  CHECK(drift <= 1e-8);

  const auto adiabatic = oracle::parse_csv(
      ok("evolve --n 2 --frame s-adiabatic --tau0 0 --tau1 0.9 --step 1e-3").out);
  const double a0 = num(adiabatic.rows.front().back());
  CHECK(std::abs(num(adiabatic.rows.back().back()) - a0) / a0 > 1e-2);

  const Json p = Json::parse(ok("evolve --n 3 --frame p-frame --tau1 0.5 --step 0.01 --format json").out);
  CHECK(p["tau"].size() == 51);
  CHECK(p["psi"][0].size() == 6);
  CHECK(p["max-drift"].get<double>() <= 1e-8);

  const fs::path psi0 = scratch("psi0.txt");
  std::ofstream(psi0) << "0.6 0\n0 0.8\n";
  const auto custom = oracle::parse_csv(
      ok("evolve --n 2 --frame p-frame --tau1 0.2 --step 0.01 --psi0 " + psi0.string()).out);
  CHECK(custom.rows.front()[1] == "0.59999999999999998");
  CHECK(num(custom.rows.front()[4]) == 0.8);

  std::ofstream(scratch("short.txt")) << "1 0 1\n";
  CHECK(both("evolve --n 2 --frame p-frame --tau1 0.2 --step 0.01 --psi0 " +
             scratch("short.txt").string()).exit_code == 2);

  const auto horizon = both("evolve --n 2 --frame s-full --tau0 0 --tau1 1.0 --step 0.01");
  CHECK(horizon.exit_code == 2);
  CHECK(contains(horizon.out, "horizon excluded"));

  const auto unstable = both("evolve --n 12 --frame s-full --tau1 0.99 --step 0.099");
  CHECK(unstable.exit_code == 1);
  CHECK(contains(unstable.out, "smaller step"));
  CHECK(both("evolve --n 2 --frame q-frame --tau1 0.5 --step 0.01").exit_code == 2);
}

TEST_CASE("verify report") {
  const auto good = oracle::run(cli("verify --n-max 7"));
  CHECK(good.exit_code == 0);
  const auto csv = oracle::parse_csv(good.out);
  REQUIRE(csv.header == std::vector<std::string>{"check", "status", "detail"});
  CHECK(csv.rows.size() == 16);
  for (const auto& row : csv.rows) CHECK(row[1] == "pass");

  CHECK(oracle::run(cli("verify --n-max 2")).exit_code == 0);

  const auto bad = both("verify --n-max 4 --corrupt-coefficients");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "coefficient-arrays,fail"));
  CHECK(contains(bad.out, "verification failed: coefficient-arrays"));

  const Json j = Json::parse(oracle::run(cli("verify --n-max 3 --format json")).out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 16);
}

TEST_CASE("output plumbing is byte-stable") {
  const fs::path csv1 = scratch("a.csv"), csv2 = scratch("b.csv");
  const fs::path svg1 = scratch("a.svg"), svg2 = scratch("b.svg");
  const std::string args = "scan --n 3 --what metric-eigs --g 1 --tau-min 0 --tau-max 1 --steps 100";
  ok(args + " --out " + csv1.string() + " --svg " + svg1.string());
  ok(args + " --out " + csv2.string() + " --svg " + svg2.string());
  const std::string a = slurp(csv1);
  CHECK(a == slurp(csv2));
  CHECK(slurp(svg1) == slurp(svg2));
  CHECK(a == ok(args).out);
  CHECK(a.find('\r') == std::string::npos);

  const std::string svg = slurp(svg1);
  CHECK(svg.rfind("<?xml", 0) == 0);
  size_t polylines = 0;
  for (size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;
  CHECK(polylines == 3);
  for (const char* name : {">theta1<", ">theta2<", ">theta3<", ">tau<"}) CHECK(contains(svg, name));

  const fs::path evo = scratch("evo.svg");
  ok("evolve --n 2 --frame s-adiabatic --tau1 0.5 --step 0.01 --svg " + evo.string());
  CHECK(contains(slurp(evo), "phys_norm"));

  CHECK(both("pascal --n 3 --svg " + scratch("no.svg").string()).exit_code == 2);
  CHECK(both("hamiltonian --n 2 --tau 0.5 --format xml").exit_code == 2);
  CHECK(both("bogus").exit_code == 2);
  CHECK(oracle::run(cli("--help > /dev/null")).exit_code == 0);
}
