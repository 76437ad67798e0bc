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

#include "partlogic/connective.hpp"

#include <string>

#include "partlogic/error.hpp"

namespace partlogic {

std::size_t arity(Connective c) noexcept {
  switch (c) {
    case Connective::Top:
    case Connective::Bottom:
      return 0;
    case Connective::Not:
      return 1;
    default:
      return 2;
  }
}

std::string_view name_of(Connective c) noexcept {
  switch (c) {
    case Connective::Top: return "top";
    case Connective::Bottom: return "bottom";
    case Connective::Not: return "not";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Implies: return "implies";
    case Connective::Iff: return "iff";
  }
  return "?";
}

Connective connective_from_name(std::string_view name) {
  for (auto c : {Connective::Top, Connective::Bottom, Connective::Not, Connective::And,
                 Connective::Or, Connective::Implies, Connective::Iff}) {
    if (name_of(c) == name) return c;
  }
  throw Error(ErrorCode::UnknownConnective,
              "unknown connective '" + std::string(name) + "'");
}

}  // namespace partlogic
