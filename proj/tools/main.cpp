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


// Command-line front end. Talks to the library only through its C interface.

#include <jbtoy/jbtoy.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace {

using jbtoy_cli::format_double;
using jbtoy_cli::PlotLabels;
using jbtoy_cli::Series;
using jbtoy_cli::Table;
using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw Failure{code, std::move(message)};
}

int exit_code(jbt_status s) {
  switch (s) {
    case JBT_OK:
      return 0;
    case JBT_ERR_CONTRACT:
    case JBT_ERR_CONVERGENCE:
    case JBT_ERR_INSTABILITY:
    case JBT_ERR_INTERNAL:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

void check(jbt_status s) {
  if (s != JBT_OK) fail(exit_code(s), jbt_last_error());
}

void require_n(int n) {
  if (n < 2) fail(kExitUsage, "n must be ≥ 2");
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) fail(kExitUsage, std::string(name) + " must be finite");
}

// Everything a command produces; written out by main().
struct Result {
  Table table;
  Json doc;
  std::vector<Series> plot;
  PlotLabels labels;
  int code = 0;
  std::string message;
};

Json meta() { return Json{{"model-version", jbt_version()}}; }

std::vector<double> square(int n) { return std::vector<double>(static_cast<size_t>(n) * n); }

std::vector<std::string> matrix_header(int n) {
  std::vector<std::string> h{"row"};
  for (int j = 1; j <= n; ++j) h.push_back("c" + std::to_string(j));
  return h;
}

std::vector<std::string> matrix_row(int n, const std::vector<double>& m, int i) {
  std::vector<std::string> row{std::to_string(i + 1)};
  for (int j = 0; j < n; ++j) row.push_back(format_double(m[static_cast<size_t>(i * n + j)]));
  return row;
}

Json matrix_json(int n, const std::vector<double>& m) {
  Json rows = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(m[static_cast<size_t>(i * n + j)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void plain_matrix(Result& r, int n, const std::vector<double>& m) {
  r.table.header = matrix_header(n);
  for (int i = 0; i < n; ++i) r.table.add_row(matrix_row(n, m, i));
}

// ---- hamiltonian, spectrum, pascal, coriolis

struct PointArgs {
  int n = 0;
  double tau = 0.0;
};

Result cmd_hamiltonian(const PointArgs& a) {
  require_n(a.n);
  require_finite(a.tau, "tau");
  auto h = square(a.n);
  check(jbt_hamiltonian(a.n, a.tau, h.data(), h.size()));
  Result r;
  plain_matrix(r, a.n, h);
  r.doc = {{"n", a.n}, {"tau", a.tau}, {"matrix", matrix_json(a.n, h)}};
  // Real spectrum only on [0, 1].
  if (a.tau >= 0.0 && a.tau <= 1.0) {
    std::vector<double> e(static_cast<size_t>(a.n));
    check(jbt_energies(a.n, a.tau, e.data(), e.size()));
    r.doc["eigenvalues"] = e;
  } else {
    r.doc["eigenvalues"] = nullptr;
  }
  r.doc["meta"] = meta();
  return r;
}

Result cmd_spectrum(const PointArgs& a) {
  require_n(a.n);
  require_finite(a.tau, "tau");
  std::vector<double> e(static_cast<size_t>(a.n)), theta(e.size());
  check(jbt_energies(a.n, a.tau, e.data(), e.size()));
  check(jbt_metric_eigenvalues_closed(a.n, a.tau, theta.data(), theta.size()));
  std::sort(theta.begin(), theta.end());
  Result r;
  r.table.header = {"k", "energy", "theta"};
  for (size_t k = 0; k < e.size(); ++k) {
    r.table.add_row({std::to_string(k + 1), format_double(e[k]), format_double(theta[k])});
  }
  r.doc = {{"n", a.n}, {"tau", a.tau}, {"eigenvalues", e}, {"metric-eigenvalues", theta},
           {"meta", meta()}};
  return r;
}

Result cmd_pascal(int n) {
  if (n < 1) fail(kExitUsage, "n must be ≥ 1");
  std::vector<int64_t> c(static_cast<size_t>(n) * n);
  check(jbt_pascal_table(n, c.data(), c.size()));
  Result r;
  r.table.header = {"k"};
  for (int m = 1; m <= n; ++m) r.table.header.push_back("c" + std::to_string(m));
  Json rows = Json::array();
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> row{std::to_string(k + 1)};
    Json jrow = Json::array();
    for (int m = 0; m < n; ++m) {
      const int64_t v = c[static_cast<size_t>(k * n + m)];
      row.push_back(std::to_string(v));
      jrow.push_back(v);
    }
    r.table.add_row(std::move(row));
    rows.push_back(std::move(jrow));
  }
  r.doc = {{"n", n}, {"matrix", rows}, {"meta", meta()}};
  return r;
}

struct Dyson {
  jbt_dyson* handle = nullptr;
  explicit Dyson(int n) { check(jbt_dyson_create(n, &handle)); }
  ~Dyson() { jbt_dyson_free(handle); }
  Dyson(const Dyson&) = delete;
  Dyson& operator=(const Dyson&) = delete;
};

Result cmd_coriolis(const PointArgs& a, std::optional<double> numeric_h) {
  require_n(a.n);
  require_finite(a.tau, "tau");
  const Dyson d(a.n);
  auto s = square(a.n);
  if (numeric_h) {
    require_finite(*numeric_h, "numeric step");
    check(jbt_dyson_coriolis_numeric(d.handle, a.tau, *numeric_h, s.data(), s.size()));
  } else {
    check(jbt_dyson_coriolis(d.handle, a.tau, s.data(), s.size()));
  }
  Result r;
  plain_matrix(r, a.n, s);
  r.doc = {{"n", a.n},
           {"tau", a.tau},
           {"method", numeric_h ? "finite-difference" : "spectral"},
           {"matrix", matrix_json(a.n, s)},
           {"meta", meta()}};
  return r;
}

// ---- metric families

struct FamilyArgs {
  std::optional<double> g;
  std::optional<double> alpha;
};

class MetricSource {
 public:
  MetricSource(int n, const FamilyArgs& f) : n_(n), family_(f) {
    if (f.g && n != 3) fail(kExitUsage, "--g selects the N = 3 family and needs n = 3");
    if (f.alpha && n != 2) fail(kExitUsage, "--alpha selects the N = 2 family and needs n = 2");
    if (f.g) require_finite(*f.g, "g");
    if (f.alpha) require_finite(*f.alpha, "alpha");
    if (!f.g && !f.alpha) check(jbt_metric_poly_solve(n, &poly_));
  }
  ~MetricSource() { jbt_metric_poly_free(poly_); }
  MetricSource(const MetricSource&) = delete;
  MetricSource& operator=(const MetricSource&) = delete;

  // Theta(tau) and its ascending eigenvalues.
  void sample(double tau, std::vector<double>& theta, std::vector<double>& eig) const {
    theta.assign(static_cast<size_t>(n_) * n_, 0.0);
    eig.assign(static_cast<size_t>(n_), 0.0);
    if (family_.g) {
      check(jbt_metric_n3_gfamily(tau, *family_.g, theta.data(), eig.data()));
    } else if (family_.alpha) {
      check(jbt_metric_n2_alpha(tau, *family_.alpha, theta.data(), eig.data()));
    } else {
      check(jbt_metric_poly_assemble(poly_, tau, theta.data(), eig.data(), theta.size()));
    }
    std::sort(eig.begin(), eig.end());
  }

  std::string name() const { return family_.g ? "g" : family_.alpha ? "alpha" : "minimal"; }

  void describe(Json& doc) const {
    doc["family"] = name();
    if (family_.g) doc["g"] = *family_.g;
    if (family_.alpha) doc["alpha"] = *family_.alpha;
  }

 private:
  int n_;
  FamilyArgs family_;
  jbt_metric_poly* poly_ = nullptr;
};

Result cmd_metric(const PointArgs& a, const FamilyArgs& f) {
  require_n(a.n);
  require_finite(a.tau, "tau");
  const MetricSource src(a.n, f);
  std::vector<double> theta, eig;
  src.sample(a.tau, theta, eig);

  Result r;
  r.table.header = matrix_header(a.n);
  r.table.header.push_back("eigenvalue");
  r.table.header.push_back("positive");
  bool positive = true;
  for (int i = 0; i < a.n; ++i) {
    auto row = matrix_row(a.n, theta, i);
    const double e = eig[static_cast<size_t>(i)];
    row.push_back(format_double(e));
    row.push_back(e > 0.0 ? "1" : "0");
    positive = positive && e > 0.0;
    r.table.add_row(std::move(row));
  }
  r.doc = {{"n", a.n}, {"tau", a.tau}};
  src.describe(r.doc);
  r.doc["matrix"] = matrix_json(a.n, theta);
  r.doc["eigenvalues"] = eig;
  r.doc["positive"] = positive;
  r.doc["meta"] = meta();
  return r;
}

// ---- scan

struct ScanArgs {
  int n = 0;
  std::string what;
  double tau_min = 0.0;
  double tau_max = 0.95;
  int steps = 100;
};

double row_sum_norm(int n, const std::vector<double>& m) {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::abs(m[static_cast<size_t>(i * n + j)]);
    best = std::max(best, s);
  }
  return best;
}

Result cmd_scan(const ScanArgs& a, const FamilyArgs& f) {
  require_n(a.n);
  require_finite(a.tau_min, "tau-min");
  require_finite(a.tau_max, "tau-max");
  if (a.steps < 1) fail(kExitUsage, "steps must be ≥ 1");
  if (a.tau_min < 0.0 || a.tau_max > 1.0 || a.tau_min > a.tau_max) {
    fail(kExitUsage, "need 0 ≤ tau-min ≤ tau-max ≤ 1");
  }
  const bool eigs = a.what == "metric-eigs";
  if (!eigs && a.tau_max >= 1.0) {
    fail(kExitUsage, "tau = 1 is only available for metric-eigs; choose tau-max < 1");
  }
  if ((f.g || f.alpha) && !eigs && a.what != "anisotropy") {
    fail(kExitUsage, "--g and --alpha apply to metric-eigs and anisotropy only");
  }

  std::vector<double> taus(static_cast<size_t>(a.steps) + 1);
  for (int i = 0; i <= a.steps; ++i) {
    taus[static_cast<size_t>(i)] =
        i == a.steps ? a.tau_max : a.tau_min + (a.tau_max - a.tau_min) * i / a.steps;
  }

  std::vector<std::string> names;
  if (eigs) {
    for (int k = 1; k <= a.n; ++k) names.push_back("theta" + std::to_string(k));
  } else {
    names.push_back(a.what);
  }
  std::vector<std::vector<double>> values(names.size());

  std::optional<MetricSource> src;
  std::optional<Dyson> dyson;
  if (eigs || a.what == "anisotropy") src.emplace(a.n, f);
  if (a.what == "coriolis-norm") dyson.emplace(a.n);

  std::vector<double> theta, eig, s = square(a.n);
  for (double t : taus) {
    if (eigs) {
      src->sample(t, theta, eig);
      for (int k = 0; k < a.n; ++k) values[static_cast<size_t>(k)].push_back(eig[static_cast<size_t>(k)]);
    } else if (a.what == "anisotropy") {
      src->sample(t, theta, eig);
      double v = 0.0;
      check(jbt_anisotropy(a.n, theta.data(), &v));
      values[0].push_back(v);
    } else if (a.what == "coriolis-norm") {
      check(jbt_dyson_coriolis(dyson->handle, t, s.data(), s.size()));
      values[0].push_back(row_sum_norm(a.n, s));
    } else {
      double v = 0.0;
      check(jbt_defectiveness_gauge(a.n, t, &v));
      values[0].push_back(v);
    }
  }

  Result r;
  r.table.header = {"tau", "series", "value"};
  for (size_t i = 0; i < taus.size(); ++i) {
    for (size_t k = 0; k < names.size(); ++k) {
      r.table.add_row({format_double(taus[i]), names[k], format_double(values[k][i])});
    }
  }
  Json series = Json::object();
  for (size_t k = 0; k < names.size(); ++k) {
    series[names[k]] = values[k];
    r.plot.push_back({names[k], taus, values[k]});
  }
  r.doc = {{"n", a.n}, {"what", a.what}};
  if (src) src->describe(r.doc);
  r.doc["tau"] = taus;
  r.doc["series"] = series;
  r.doc["meta"] = meta();

  std::string title = a.what + ", N = " + std::to_string(a.n);
  if (f.g) title += ", g = " + format_double(*f.g);
  if (f.alpha) title += ", alpha = " + format_double(*f.alpha);
  r.labels = {title, "tau", a.what};
  return r;
}

// ---- evolve

struct EvolveArgs {
  int n = 0;
  std::string frame;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double step = 0.0;
  std::string psi0_path;
  int stride = 1;
};

// 2N numbers (re im per component), separated by whitespace or commas.
std::vector<double> read_state(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) fail(kExitUsage, "cannot read initial state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream tokens(text);
  tokens.imbue(std::locale::classic());
  std::vector<double> psi;
  std::string token;
  while (tokens >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) fail(kExitUsage, "initial state: not a number: '" + token + "'");
    psi.push_back(v);
  }
  if (psi.size() != 2 * static_cast<size_t>(n)) {
    fail(kExitUsage, "initial state needs " + std::to_string(2 * n) +
                         " numbers (re im per component), got " + std::to_string(psi.size()));
  }
  return psi;
}

jbt_frame parse_frame(const std::string& name) {
  if (name == "s-full") return JBT_FRAME_S_FULL;
  if (name == "s-adiabatic") return JBT_FRAME_S_ADIABATIC;
  return JBT_FRAME_P;
}

Result cmd_evolve(const EvolveArgs& a) {
  require_n(a.n);
  if (a.stride < 1) fail(kExitUsage, "stride must be ≥ 1");
  std::vector<double> psi0;
  if (!a.psi0_path.empty()) psi0 = read_state(a.psi0_path, a.n);

  const jbt_evolution_config config{a.n, a.tau0, a.tau1, a.step, parse_frame(a.frame)};
  jbt_trajectory* traj = nullptr;
  check(jbt_evolve(&config, psi0.empty() ? nullptr : psi0.data(), &traj));
  const std::unique_ptr<jbt_trajectory, void (*)(jbt_trajectory*)> owner(traj,
                                                                         jbt_trajectory_free);

  Result r;
  r.table.header = {"tau"};
  for (int k = 1; k <= a.n; ++k) {
    r.table.header.push_back("re" + std::to_string(k));
    r.table.header.push_back("im" + std::to_string(k));
  }
  r.table.header.push_back("phys_norm");

  const size_t len = jbt_trajectory_length(traj);
  std::vector<double> psi(2 * static_cast<size_t>(a.n));
  std::vector<double> taus, norms;
  std::vector<std::vector<double>> populations(static_cast<size_t>(a.n));
  Json states = Json::array();
  for (size_t i = 0; i < len; ++i) {
    if (i % static_cast<size_t>(a.stride) != 0 && i + 1 != len) continue;
    double tau = 0.0, norm = 0.0;
    check(jbt_trajectory_point(traj, i, &tau, psi.data(), &norm));
    std::vector<std::string> row{format_double(tau)};
    for (double v : psi) row.push_back(format_double(v));
    row.push_back(format_double(norm));
    r.table.add_row(std::move(row));
    taus.push_back(tau);
    norms.push_back(norm);
    for (size_t k = 0; k < populations.size(); ++k) {
      populations[k].push_back(psi[2 * k] * psi[2 * k] + psi[2 * k + 1] * psi[2 * k + 1]);
    }
    states.push_back(psi);
  }

  r.doc = {{"n", a.n},          {"frame", a.frame}, {"tau0", a.tau0},
           {"tau1", a.tau1},    {"step", a.step},   {"tau", taus},
           {"psi", states},     {"phys_norm", norms},
           {"max-drift", jbt_trajectory_max_drift(traj)}, {"meta", meta()}};

  r.plot.push_back({"phys_norm", taus, norms});
  for (size_t k = 0; k < populations.size(); ++k) {
    r.plot.push_back({"|psi" + std::to_string(k + 1) + "|^2", taus, populations[k]});
  }
  r.labels = {a.frame + " evolution, N = " + std::to_string(a.n), "tau", "norm"};
  return r;
}

// ---- verify

Result cmd_verify(int n_max, bool corrupt) {
  jbt_verify_report* report = nullptr;
  check(jbt_verify(n_max, corrupt ? JBT_VERIFY_CORRUPT_COEFFICIENTS : 0u, &report));
  const std::unique_ptr<jbt_verify_report, void (*)(jbt_verify_report*)> owner(
      report, jbt_verify_free);

  Result r;
  r.table.header = {"check", "status", "detail"};
  Json checks = Json::array();
  std::string failed;
  for (size_t i = 0; i < jbt_verify_count(report); ++i) {
    const std::string name = jbt_verify_name(report, i);
    const bool pass = jbt_verify_passed(report, i) != 0;
    const std::string detail = jbt_verify_detail(report, i);
    r.table.add_row({name, pass ? "pass" : "fail", detail});
    checks.push_back({{"check", name}, {"passed", pass}, {"detail", detail}});
    if (!pass) failed += (failed.empty() ? "" : ", ") + name;
  }
  r.doc = {{"n-max", n_max}, {"passed", failed.empty()}, {"checks", checks}, {"meta", meta()}};
  if (!failed.empty()) {
    r.code = kExitFailure;
    r.message = "verification failed: " + failed;
  }
  return r;
}

// ---- output

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content) || !out.flush()) fail(kExitUsage, "cannot write '" + path + "'");
}

void emit(const Result& r, const std::string& format, const std::string& out_path,
          const std::string& svg_path) {
  std::ostringstream body;
  if (format == "json") {
    body << r.doc.dump(2) << '\n';
  } else {
    jbtoy_cli::write_csv(body, r.table);
  }
  if (out_path.empty()) {
    std::cout << body.str() << std::flush;
  } else {
    write_file(out_path, body.str());
  }
  if (!svg_path.empty()) write_file(svg_path, jbtoy_cli::render_svg(r.labels, r.plot));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exactly solvable N-level PT-symmetric toy model: tables, scans and checks"};
  app.set_version_flag("--version", std::string(jbt_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv", out_path, svg_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the table here instead of standard output");
  app.add_option("--svg", svg_path, "Also write an SVG plot (scan and evolve)");

  PointArgs point;
  FamilyArgs family;
  const auto add_point = [&point](CLI::App* sub) {
    sub->add_option("--n", point.n, "Matrix dimension N")->required();
    sub->add_option("--tau", point.tau, "Time of fall tau")->required();
  };
  const auto add_family = [&family](CLI::App* sub) {
    auto* g = sub->add_option("--g", family.g, "N = 3 family parameter");
    auto* alpha = sub->add_option("--alpha", family.alpha, "N = 2 family angle");
    g->excludes(alpha);
  };

  auto* ham = app.add_subcommand("hamiltonian", "Dump H(tau)");
  add_point(ham);
  auto* spectrum = app.add_subcommand("spectrum", "Energies and closed-form metric eigenvalues");
  add_point(spectrum);
  auto* met = app.add_subcommand("metric", "Metric matrix, eigenvalues and positivity");
  add_point(met);
  add_family(met);

  int pascal_n = 0;
  auto* pas = app.add_subcommand("pascal", "Integer coefficient table of the metric spectrum");
  pas->add_option("--n", pascal_n, "Matrix dimension N")->required();

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Sample a quantity on a tau grid");
  sc->add_option("--n", scan.n, "Matrix dimension N")->required();
  sc->add_option("--what", scan.what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"metric-eigs", "anisotropy", "coriolis-norm", "defectiveness"}));
  sc->add_option("--tau-min", scan.tau_min, "First grid point")->capture_default_str();
  sc->add_option("--tau-max", scan.tau_max, "Last grid point")->capture_default_str();
  sc->add_option("--steps", scan.steps, "Number of grid intervals")->capture_default_str();
  add_family(sc);

  std::optional<double> numeric_h;
  auto* cor = app.add_subcommand("coriolis", "Coriolis matrix S, with Sigma = i S");
  add_point(cor);
  cor->add_option("--numeric", numeric_h, "Use a central difference with this step");

  EvolveArgs ev;
  auto* evo = app.add_subcommand("evolve", "Integrate the state from tau0 to tau1");
  evo->add_option("--n", ev.n, "Matrix dimension N")->required();
  evo->add_option("--frame", ev.frame, "Frame")
      ->required()
      ->check(CLI::IsMember({"s-full", "s-adiabatic", "p-frame"}));
  evo->add_option("--tau0", ev.tau0, "Start time")->capture_default_str();
  evo->add_option("--tau1", ev.tau1, "End time (< 1)")->required();
  evo->add_option("--step", ev.step, "RK4 step")->required();
  evo->add_option("--psi0", ev.psi0_path, "Initial state file: re im per component");
  evo->add_option("--stride", ev.stride, "Emit every k-th grid point")->capture_default_str();

  int n_max = 7;
  bool corrupt = false;
  auto* ver = app.add_subcommand("verify", "Run every invariant check");
  ver->add_option("--n-max", n_max, "Largest N checked")->capture_default_str();
  ver->add_flag("--corrupt-coefficients", corrupt, "Tamper with one coefficient (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Result r;
    const bool plots = app.got_subcommand(sc) || app.got_subcommand(evo);
    if (!svg_path.empty() && !plots) fail(kExitUsage, "--svg is supported by scan and evolve only");

    if (app.got_subcommand(ham)) r = cmd_hamiltonian(point);
    else if (app.got_subcommand(spectrum)) r = cmd_spectrum(point);
    else if (app.got_subcommand(met)) r = cmd_metric(point, family);
    else if (app.got_subcommand(pas)) r = cmd_pascal(pascal_n);
    else if (app.got_subcommand(sc)) r = cmd_scan(scan, family);
    else if (app.got_subcommand(cor)) r = cmd_coriolis(point, numeric_h);
    else if (app.got_subcommand(evo)) r = cmd_evolve(ev);
    else r = cmd_verify(n_max, corrupt);

    emit(r, format, out_path, svg_path);
    if (r.code != 0) std::cerr << "jbtoy: " << r.message << '\n';
    return r.code;
  } catch (const Failure& f) {
    std::cerr << "jbtoy: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "jbtoy: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}
