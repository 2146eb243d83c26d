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

#include "errors.hpp"

namespace jbtoy {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Positivity: return "positivity";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::NotTabulated: return "not-tabulated";
    case ErrorKind::Instability: return "instability";
  }
  return "unknown";
}

}  // namespace jbtoy
