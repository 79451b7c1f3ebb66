// Copyright 2026 The hierdemand Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hierdemand {

// Base of every error raised by the library. The CLI maps the subclasses to
// process exit codes (config -> 1, data/metric -> 2, solver -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or invalid arguments supplied by a caller.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural contract (ragged panel, bad hierarchy, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// A metric is undefined for its input (zero scale, all-zero actuals, ...).
class MetricError : public DataError {
 public:
  using DataError::DataError;
};

// An optimization or factorization could not produce a certified answer.
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace hierdemand
