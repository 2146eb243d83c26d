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

#include <stdexcept>
#include <string>
#include <vector>

namespace jbtoy {

enum class ErrorKind {
  Argument,
  Domain,
  Contract,
  Singular,
  Degenerate,
  Positivity,
  Convergence,
  NotTabulated,
  Instability,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error thrown by the core. The C API maps `kind()` onto its
// status codes, so new kinds must be mirrored there.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double smallest_singular_value)
      : Error(ErrorKind::Singular, what), sigma_min_(smallest_singular_value) {}
  double smallest_singular_value() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best)
      : Error(ErrorKind::Convergence, what), best_(std::move(best)) {}
  const std::vector<double>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<double> best_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace jbtoy
