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

#pragma once

// Fixed-step RK4 integration of the Schroedinger equation in the
// non-Hermitian S-frame (generator H - Sigma, or the adiabatic H) and in the
// Hermitian P-frame (generator Omega H Omega^-1).

#include <string_view>
#include <vector>

#include "densecore.hpp"

namespace jbtoy {

enum class Frame { SFull, SAdiabatic, PFrame };

const char* frame_name(Frame f) noexcept;  // "s-full", "s-adiabatic", "p-frame"
bool parse_frame(std::string_view name, Frame& out) noexcept;

inline constexpr double kEvolutionCeiling = 0.99;

struct EvolutionConfig {
  int n = 2;
  double tau0 = 0.0;
  double tau1 = 0.5;
  double step = 1e-3;
  Frame frame = Frame::SFull;
};

// Argument / domain errors for invalid configurations.
void validate(const EvolutionConfig& config);

struct EvolutionTrajectory {
  int n = 0;
  Frame frame = Frame::SFull;
  std::vector<double> taus;
  std::vector<ComplexVector> states;
  // <psi|Theta(tau)|psi> in the S-frames, <psi|psi> in the P-frame.
  std::vector<double> phys_norm;

  double max_relative_drift() const;
};

// Unit ground-state right eigenvector of H(tau0).
ComplexVector default_initial_state(int n, double tau0);

// The grid is tau0 + i (tau1 - tau0) / M with M = ceil((tau1 - tau0) / step),
// so the last point is exactly tau1. Throws an instability error when the
// conserved norm of S_FULL / P_FRAME drifts by more than 1e-3.
EvolutionTrajectory evolve(const EvolutionConfig& config, const ComplexVector& psi0);

// psi_P(tau) = Omega(tau) psi_S(tau) for an S_FULL trajectory.
EvolutionTrajectory frame_transport(const EvolutionTrajectory& s_trajectory);

struct HorizonRow {
  double tau = 0.0;
  double anisotropy = 1.0;
  double coriolis_norm = 0.0;
  double defectiveness = 1.0;
  double min_theta = 1.0;
};

// Closed-form diagnostics on tau_i = tau_max * i / steps, i = 0..steps.
std::vector<HorizonRow> horizon_approach_report(int n, double tau_max, int steps = 100);

}  // namespace jbtoy
