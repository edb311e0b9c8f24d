// Copyright 2026 The minmodel Authors
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

#ifndef MINMODEL_ERROR_H_
#define MINMODEL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace minmodel {

enum class ErrorKind {
  kParseError,
  kValidationError,
  kAssociativityViolation,
  kIdentityViolation,
  kIncompleteTable,
  kFunctorialityViolation,
  kMissingAction,
  kNaturalityViolation,
  kNonComposable,
  kBaseMismatch,
  kCoconeMismatch,
  kNonCommutingSquare,
  kIncompatibleOnRelativePart,
  kReplayMismatch,
  kFuelExhausted,
  kLimitExceeded,
  kDuplicateName,
  kUnknownName,
  kUnknownCommand,
  kImplementationInvariantBroken,
};

std::string_view ErrorKindName(ErrorKind kind);

// All recoverable failures of the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Thrown when a fuel-bounded construction (cylinder, path object) could not
// complete. Checkers turn this into an Inconclusive verdict.
class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(const std::string& message)
      : Error(ErrorKind::kFuelExhausted, message) {}
};

}  // namespace minmodel

#endif  // MINMODEL_ERROR_H_
