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

#include "evolution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "errors.hpp"
#include "maps.hpp"
#include "metric.hpp"
#include "model.hpp"

namespace jbtoy {

namespace {

constexpr double kDriftLimit = 1e-3;

using GeneratorFn = std::function<ComplexMatrix(double)>;

GeneratorFn make_generator(const DysonFactorization& f, Frame frame) {
  switch (frame) {
    case Frame::SFull:
      return [&f](double t) { return generator(f, t, true).g; };
    case Frame::SAdiabatic:
      return [&f](double t) { return generator(f, t, false).g; };
    case Frame::PFrame:
      return [&f](double t) {
        return ComplexMatrix(dyson_hamiltonian(f, t).cast<std::complex<double>>());
      };
  }
  fail(ErrorKind::Argument, "unknown frame");
}

double physical_norm(const DysonFactorization& f, Frame frame, double tau,
                     const ComplexVector& psi) {
  if (frame == Frame::PFrame) return psi.squaredNorm();
  const ComplexMatrix theta = f.metric(tau).cast<std::complex<double>>();
  return psi.dot(theta * psi).real();
}

}  // namespace

const char* frame_name(Frame f) noexcept {
  switch (f) {
    case Frame::SFull: return "s-full";
    case Frame::SAdiabatic: return "s-adiabatic";
    case Frame::PFrame: return "p-frame";
  }
  return "unknown";
}

bool parse_frame(std::string_view name, Frame& out) noexcept {
  for (Frame f : {Frame::SFull, Frame::SAdiabatic, Frame::PFrame}) {
    if (name == frame_name(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

void validate(const EvolutionConfig& c) {
  require(c.n >= 2, ErrorKind::Argument, "n must be >= 2");
  require(std::isfinite(c.tau0) && std::isfinite(c.tau1) && std::isfinite(c.step),
          ErrorKind::Argument, "evolution parameters must be finite");
  require(c.tau1 < 1.0, ErrorKind::Domain, "horizon excluded: tau1 must be < 1");
  require(c.tau1 <= kEvolutionCeiling, ErrorKind::Domain,
          "tau1 exceeds the integration ceiling 0.99");
  require(c.tau0 >= 0.0 && c.tau0 < c.tau1, ErrorKind::Domain,
          "need 0 <= tau0 < tau1");
  require(c.step > 0.0, ErrorKind::Argument, "step must be positive");
  require(c.step <= (c.tau1 - c.tau0) / 10.0 * (1.0 + 1e-12), ErrorKind::Argument,
          "step must not exceed (tau1 - tau0) / 10");
}

double EvolutionTrajectory::max_relative_drift() const {
  if (phys_norm.empty()) return 0.0;
  const double ref = phys_norm.front();
  double worst = 0.0;
  for (double v : phys_norm) worst = std::max(worst, std::abs(v - ref));
  return worst / ref;
}

ComplexVector default_initial_state(int n, double tau0) {
  const BiorthogonalSystem sys = biorthogonal_system(n, tau0);
  return sys.rights.col(0).cast<std::complex<double>>();
}

EvolutionTrajectory evolve(const EvolutionConfig& config, const ComplexVector& psi0) {
  validate(config);
  require(psi0.size() == config.n, ErrorKind::Argument,
          "initial state must have N components");
  require(psi0.allFinite() && psi0.norm() > 0.0, ErrorKind::Argument,
          "initial state must be finite and non-zero");

  const DysonFactorization factor(config.n);
  const GeneratorFn gen = make_generator(factor, config.frame);
  const bool conserved = config.frame != Frame::SAdiabatic;

  const double span = config.tau1 - config.tau0;
  const auto steps = static_cast<long>(std::ceil(span / config.step - 1e-9));
  const double h = span / static_cast<double>(steps);

  EvolutionTrajectory traj;
  traj.n = config.n;
  traj.frame = config.frame;
  traj.taus.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.phys_norm.reserve(steps + 1);

  ComplexVector psi = psi0;
  traj.taus.push_back(config.tau0);
  traj.states.push_back(psi);
  traj.phys_norm.push_back(physical_norm(factor, config.frame, config.tau0, psi));
  const double norm0 = traj.phys_norm.front();

  const std::complex<double> minus_i{0.0, -1.0};
  ComplexMatrix g_start = gen(config.tau0);
  for (long i = 0; i < steps; ++i) {
    const double t = config.tau0 + h * static_cast<double>(i);
    const double t_next = (i + 1 == steps) ? config.tau1
                                           : config.tau0 + h * static_cast<double>(i + 1);
    const ComplexMatrix g_mid = gen(t + 0.5 * h);
    const ComplexMatrix g_end = gen(t_next);

    const ComplexVector k1 = minus_i * (g_start * psi);
    const ComplexVector k2 = minus_i * (g_mid * (psi + (0.5 * h) * k1));
    const ComplexVector k3 = minus_i * (g_mid * (psi + (0.5 * h) * k2));
    const ComplexVector k4 = minus_i * (g_end * (psi + h * k3));
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    g_start = g_end;

    const double norm = physical_norm(factor, config.frame, t_next, psi);
    if (!psi.allFinite() || !std::isfinite(norm) ||
        (conserved && std::abs(norm - norm0) > kDriftLimit * norm0)) {
      std::ostringstream msg;
      msg << "integration became unstable at tau = " << t_next
          << " (norm " << norm << " vs " << norm0 << "); try a smaller step";
      fail(ErrorKind::Instability, msg.str());
    }
    traj.taus.push_back(t_next);
    traj.states.push_back(psi);
    traj.phys_norm.push_back(norm);
  }
  return traj;
}

EvolutionTrajectory frame_transport(const EvolutionTrajectory& s) {
  require(s.frame == Frame::SFull, ErrorKind::Argument,
          "frame transport needs an s-full trajectory");
  const DysonFactorization factor(s.n);
  EvolutionTrajectory p;
  p.n = s.n;
  p.frame = Frame::PFrame;
  p.taus = s.taus;
  p.states.reserve(s.states.size());
  p.phys_norm.reserve(s.states.size());
  for (std::size_t i = 0; i < s.states.size(); ++i) {
    const ComplexMatrix omega = factor.omega(s.taus[i]).cast<std::complex<double>>();
    p.states.push_back(omega * s.states[i]);
    p.phys_norm.push_back(p.states.back().squaredNorm());
  }
  return p;
}

std::vector<HorizonRow> horizon_approach_report(int n, double tau_max, int steps) {
  require(n >= 2, ErrorKind::Argument, "n must be >= 2");
  require(steps >= 1, ErrorKind::Argument, "steps must be >= 1");
  require(std::isfinite(tau_max) && tau_max >= 0.0 && tau_max < 1.0,
          ErrorKind::Domain, "tau_max must lie in [0, 1)");

  const DysonFactorization factor(n);
  std::vector<HorizonRow> rows;
  rows.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    HorizonRow row;
    row.tau = tau_max * i / steps;
    const double t = row.tau;
    row.anisotropy = std::pow((1.0 + t) / (1.0 - t), n - 1);
    row.min_theta = std::pow(1.0 - t, n - 1);
    row.coriolis_norm = norm_inf(coriolis_spectral(factor, t).imag);
    row.defectiveness = defectiveness_gauge(n, t);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jbtoy
