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
#include <string>

#include <json.hpp>

#include "partlogic/formula.hpp"
#include "partlogic/lattice.hpp"
#include "partlogic/mechanisms.hpp"
#include "partlogic/text_format.hpp"
#include "partlogic/validity.hpp"

// JSON and DOT renderings. Key order is fixed (nlohmann::ordered_json), so equal
// inputs always serialize to identical bytes.

namespace partlogic {

using Json = nlohmann::ordered_json;

/// {"kind": "and", "children": [...]}; variables carry "name", constants "value".
Json to_json(const Formula& f);

/// {"logic", "valid", "n_min", "n_checked", "assignments_checked", "counterexample"}
/// where counterexample is null or {"n", "assignment": {var: text}, "value"}.
Json to_json(const Verdict& v, const ElementNames& names = {});

/// {"kind", "n", "nodes": [{"id", "label"}], "edges": [[lower, upper], ...]}.
Json lattice_json(LatticeKind kind, std::size_t n, const Limits& limits = {},
                  const ElementNames& names = {});
/// Hasse diagram in Graphviz syntax, bottom element at the bottom.
std::string lattice_dot(LatticeKind kind, std::size_t n, const Limits& limits = {},
                        const ElementNames& names = {});

namespace mech {

// Trace documents share the layout
//   {"mechanism", "k", "n", "steps": [{"index", "event", "state"}], "final"}
// where "k" is null for mechanisms without switches.

Json to_json(const SelectionTrace& t, std::size_t k);
Json to_json(const GenerativeTrace& t);
Json to_json(const IdentificationTrace& t, const ElementNames& names = {});
Json to_json(const CreationTrace& t, const ElementNames& names = {});
Json to_json(const QuestionTrace& t, std::size_t k);
/// {"k", "target", "margin", "threshold", "agreement", "selectionist", "generative"}.
Json to_json(const Comparison& c);
/// [{"scheme", "arrow", "from", "to", "dual", "opposite", "dual_opposite"}, ...].
Json scheme_relations_json();

}  // namespace mech

}  // namespace partlogic
