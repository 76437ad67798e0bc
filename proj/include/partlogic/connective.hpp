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
#include <string_view>

namespace partlogic {

/// The closed connective set shared by both logics.
enum class Connective { Top, Bottom, Not, And, Or, Implies, Iff };

std::size_t arity(Connective c) noexcept;
/// Lower-case name: "top", "bottom", "not", "and", "or", "implies", "iff".
std::string_view name_of(Connective c) noexcept;
/// Inverse of name_of; throws Error{UnknownConnective}.
Connective connective_from_name(std::string_view name);

}  // namespace partlogic
