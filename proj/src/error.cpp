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

#include "partlogic/error.hpp"

namespace partlogic {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::MissingElement: return "MissingElement";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::UnknownConnective: return "UnknownConnective";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::NonPositiveFitness: return "NonPositiveFitness";
    case ErrorCode::InvalidFitness: return "InvalidFitness";
    case ErrorCode::AlreadySet: return "AlreadySet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnbalancedParens:
    case ErrorCode::InvalidFormat:
    case ErrorCode::InvalidArgument:
      return ErrorCategory::Usage;
    case ErrorCode::ResourceLimit:
    case ErrorCode::TooManyVariables:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Domain;
  }
}

}  // namespace partlogic
