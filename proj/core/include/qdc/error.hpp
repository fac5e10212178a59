// Copyright 2026 The qdcavity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched or overlapping subsystem layouts.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Operation needs a nonzero state (normalization, measurement).
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// A linear map or routing rule has no image for a reachable label.
class IncompleteMapError : public Error {
 public:
  using Error::Error;
};

class SingularParameterError : public Error {
 public:
  using Error::Error;
};

class InvalidCoefficientError : public Error {
 public:
  using Error::Error;
};

class ScheduleExhaustedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid user configuration. `field()` names the offending setting.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A simulation produced a state that breaks a circuit invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qdc
