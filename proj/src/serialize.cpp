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

#include "partlogic/serialize.hpp"

#include <sstream>

#include "partlogic/error.hpp"

namespace partlogic {

namespace {

std::string_view kind_name(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Variable: return "var";
    case Formula::Kind::Constant: return "const";
    case Formula::Kind::Not: return "not";
    case Formula::Kind::And: return "and";
    case Formula::Kind::Or: return "or";
    case Formula::Kind::Implies: return "implies";
    case Formula::Kind::Iff: return "iff";
  }
  return "?";
}

std::string_view logic_name(Logic l) {
  switch (l) {
    case Logic::TruthTable: return "truth-table";
    case Logic::Subset: return "subset";
    case Logic::Partition: return "partition";
  }
  return "?";
}

std::string value_text(const LogicValue& v, const ElementNames& names) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "1" : "0";
  if (const auto* s = std::get_if<Subset>(&v)) return format_subset(*s, names);
  return format_partition(std::get<Partition>(v), names);
}

std::string node_label(LatticeKind kind, std::size_t index, std::size_t n,
                       const std::vector<Partition>& parts, const ElementNames& names) {
  if (kind == LatticeKind::Partition) return format_partition(parts[index], names);
  Subset s(n);
  for (std::size_t u = 0; u < n; ++u) {
    if ((index >> u) & 1u) s.insert(u);
  }
  return format_subset(s, names);
}

struct LatticeData {
  std::vector<std::string> labels;
  std::vector<CoverEdge> edges;
};

LatticeData lattice_data(LatticeKind kind, std::size_t n, const Limits& limits,
                         const ElementNames& names) {
  LatticeData data;
  data.edges = hasse_cover_edges(kind, n, limits);
  std::vector<Partition> parts;
  std::size_t count = 0;
  if (kind == LatticeKind::Partition) {
    parts = enumerate_partitions(n, limits);
    count = parts.size();
  } else {
    count = std::size_t{1} << n;
  }
  for (std::size_t i = 0; i < count; ++i) {
    data.labels.push_back(node_label(kind, i, n, parts, names));
  }
  return data;
}

}  // namespace

Json to_json(const Formula& f) {
  Json j;
  j["kind"] = kind_name(f.kind());
  if (f.kind() == Formula::Kind::Variable) {
    j["name"] = f.name();
  } else if (f.kind() == Formula::Kind::Constant) {
    j["value"] = f.value() ? "T" : "F";
  } else {
    j["children"] = Json::array();
    for (std::size_t i = 0; i < f.child_count(); ++i) j["children"].push_back(to_json(f.child(i)));
  }
  return j;
}

Json to_json(const Verdict& v, const ElementNames& names) {
  Json j;
  j["logic"] = logic_name(v.logic);
  j["valid"] = v.valid;
  j["n_min"] = v.n_min;
  j["n_checked"] = v.n_max;
  j["assignments_checked"] = v.assignments_checked;
  if (v.counterexample) {
    const auto& cx = *v.counterexample;
    Json assignment = Json::object();
    for (const auto& [name, value] : cx.assignment) assignment[name] = value_text(value, names);
    j["counterexample"] = {{"n", cx.n},
                           {"assignment", std::move(assignment)},
                           {"value", value_text(cx.value, names)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json lattice_json(LatticeKind kind, std::size_t n, const Limits& limits,
                  const ElementNames& names) {
  const auto data = lattice_data(kind, n, limits, names);
  Json j;
  j["kind"] = kind == LatticeKind::Subset ? "subset" : "partition";
  j["n"] = n;
  j["nodes"] = Json::array();
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    j["nodes"].push_back({{"id", i}, {"label", data.labels[i]}});
  }
  j["edges"] = Json::array();
  for (const auto& e : data.edges) j["edges"].push_back({e.lower, e.upper});
  return j;
}

std::string lattice_dot(LatticeKind kind, std::size_t n, const Limits& limits,
                        const ElementNames& names) {
  const auto data = lattice_data(kind, n, limits, names);
  std::ostringstream out;
  out << "digraph " << (kind == LatticeKind::Subset ? "subsets" : "partitions") << " {\n";
  out << "  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    out << "  n" << i << " [label=\"" << data.labels[i] << "\"];\n";
  }
  for (const auto& e : data.edges) out << "  n" << e.lower << " -> n" << e.upper << ";\n";
  out << "}\n";
  return out.str();
}

namespace mech {

namespace {

Json variant_list(const VariantSpace& space, const Subset& s) {
  Json out = Json::array();
  for (auto v : s.elements()) out.push_back(space.render(static_cast<Variant>(v)));
  return out;
}

Json side_json(SwitchState s) { return s == SwitchState::One ? 1 : 0; }

std::string_view option_name(SwitchState s) { return s == SwitchState::One ? "right" : "left"; }

template <class TraceT, class StateFn, class EventFn>
Json trace_json(std::string_view mechanism, Json k, std::size_t n, const TraceT& t,
                StateFn&& state_json, EventFn&& event_json) {
  Json j;
  j["mechanism"] = mechanism;
  j["k"] = std::move(k);
  j["n"] = n;
  j["steps"] = Json::array();
  for (const auto& step : t.steps) {
    j["steps"].push_back({{"index", step.index},
                          {"event", step.event ? event_json(*step.event) : Json(nullptr)},
                          {"state", state_json(step.state)}});
  }
  j["final"] = state_json(t.final_state());
  return j;
}

}  // namespace

Json to_json(const SelectionTrace& t, std::size_t k) {
  const VariantSpace space(k);
  auto state = [&](const SelectionState& s) {
    Json weights = Json::object();
    for (Variant v = 0; v < s.weights.size(); ++v) weights[space.render(v)] = s.weights[v];
    Json survivors = Json::array();
    for (auto v : s.survivors()) survivors.push_back(space.render(v));
    return Json{{"weights", std::move(weights)}, {"survivors", std::move(survivors)}};
  };
  auto event = [](const AmplifyEvent&) { return Json{{"type", "amplify"}}; };
  return trace_json("selectionist", k, space.size(), t, state, event);
}

Json to_json(const GenerativeTrace& t) {
  const std::size_t k = t.initial().k();
  const VariantSpace space(k);
  auto state = [&](const SwitchBank& b) {
    const auto block = consistent_block(b);
    return Json{{"switches", b.render()},
                {"block", variant_list(space, block)},
                {"block_size", block.count()}};
  };
  auto event = [](const SetSwitchEvent& e) {
    return Json{{"type", "set_switch"},
                {"switch", e.index},
                {"value", side_json(e.value)},
                {"option", option_name(e.value)}};
  };
  return trace_json("generative", k, space.size(), t, state, event);
}

Json to_json(const IdentificationTrace& t, const ElementNames& names) {
  auto state = [&](const Partition& p) { return Json(format_partition(p, names)); };
  auto event = [&](const IdentifyEvent& e) {
    return Json{{"type", "identify"}, {"pair", {names.name(e.first), names.name(e.second)}}};
  };
  return trace_json("identification", nullptr, t.initial().universe_size(), t, state, event);
}

Json to_json(const CreationTrace& t, const ElementNames& names) {
  auto state = [&](const Subset& s) { return Json(format_subset(s, names)); };
  auto event = [&](const CreateEvent& e) {
    return Json{{"type", "create"}, {"element", names.name(e.element)}, {"duplicate", e.duplicate}};
  };
  return trace_json("creationist", nullptr, t.initial().universe_size(), t, state, event);
}

Json to_json(const QuestionTrace& t, std::size_t k) {
  const VariantSpace space(k);
  auto state = [&](const QuestionState& s) {
    Json blocks = Json::array();
    for (const auto& b : s.partition.blocks()) {
      Json block = Json::array();
      for (auto v : b) block.push_back(space.render(static_cast<Variant>(v)));
      blocks.push_back(std::move(block));
    }
    return Json{{"partition", std::move(blocks)},
                {"block", variant_list(space, s.block)},
                {"block_size", s.block.count()}};
  };
  auto event = [](const AnswerEvent& e) {
    return Json{{"type", "answer"}, {"switch", e.index}, {"side", side_json(e.side)}};
  };
  return trace_json("twenty-questions", k, space.size(), t, state, event);
}

Json to_json(const Comparison& c) {
  const VariantSpace space(c.k);
  Json j;
  j["k"] = c.k;
  j["target"] = space.render(c.target);
  j["margin"] = c.margin;
  j["threshold"] = c.threshold;
  j["agreement"] = c.agreement;
  j["selectionist"] = to_json(c.selection, c.k);
  j["generative"] = to_json(c.generative);
  return j;
}

Json scheme_relations_json() {
  Json out = Json::array();
  for (const auto& s : scheme_relations()) {
    out.push_back({{"scheme", s.name},
                   {"arrow", s.arrow},
                   {"from", s.from},
                   {"to", s.to},
                   {"dual", info(dual(s.scheme)).name},
                   {"opposite", info(opposite(s.scheme)).name},
                   {"dual_opposite", info(dual(opposite(s.scheme))).name}});
  }
  return out;
}

}  // namespace mech

}  // namespace partlogic
