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

#include <string>
#include <vector>

namespace jbtoy {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 7;
  // Test hook: perturbs the tabulated coefficient arrays before they are
  // compared with the solver so the failure path can be exercised.
  bool corrupt_coefficients = false;
};

// One-shot run of the model's invariants for 2 <= N <= n_max.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace jbtoy
