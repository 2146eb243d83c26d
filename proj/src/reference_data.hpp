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

// Published closed-form matrices and coefficient tables the model is checked
// against at runtime by `verify`.

#include <cstdint>
#include <vector>

#include "densecore.hpp"

namespace jbtoy::reference {

// H^(N)(tau) for N = 2, 3, 4 written out entry by entry.
RealMatrix hamiltonian_literal(int n, double tau);

// Minimal metrics for N = 2, 3, 4 written out entry by entry.
RealMatrix metric_literal(int n, double tau);

// Rows C_k1 .. C_kN of the Pascal-type tables for k = 1..4, N = k..8.
// Returns an empty vector when (k, N) is outside the published range.
std::vector<std::int64_t> pascal_row(int k, int n);

}  // namespace jbtoy::reference
