//  Copyright 2026 The partlogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partlogic {

enum class ErrorCode {
  // partition construction
  EmptyBlock,
  OverlappingBlocks,
  MissingElement,
  ElementOutOfRange,
  NotEquivalence,
  UniverseMismatch,
  // connectives and formulas
  UnknownConnective,
  ArityMismatch,
  SyntaxError,
  UnbalancedParens,
  UnboundVariable,
  UniverseTooSmall,
  TooManyVariables,
  // limits
  ResourceLimit,
  // mechanisms
  InvalidThreshold,
  NonPositiveFitness,
  InvalidFitness,
  AlreadySet,
  IndexOutOfRange,
  // malformed text input that is not a formula
  InvalidFormat,
  InvalidArgument,
};

/// Broad class of an error, used to pick process exit codes and C status codes.
enum class ErrorCategory { Usage, Domain, Resource };

const char* to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

/// Raised by the formula parser; carries the 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace partlogic
