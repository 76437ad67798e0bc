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

#include "partlogic/text_format.hpp"

#include <charconv>
#include <set>

#include "partlogic/error.hpp"

namespace partlogic {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::size_t> parse_number(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  for (char c : s) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

std::string join_elements(const std::vector<std::size_t>& elements, const ElementNames& names) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += names.name(elements[i]);
  }
  return out;
}

mech::SwitchState parse_side(std::string_view token) {
  if (token == "0" || token == "L" || token == "l") return mech::SwitchState::Zero;
  if (token == "1" || token == "R" || token == "r") return mech::SwitchState::One;
  throw Error(ErrorCode::InvalidFormat,
              "switch side must be 0, 1, L or R, got '" + std::string(token) + "'");
}

}  // namespace

ElementNames::ElementNames(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) {
      throw Error(ErrorCode::InvalidFormat, "element name '" + n + "' is not an identifier");
    }
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::InvalidFormat, "element name '" + n + "' given twice");
    }
  }
}

ElementNames ElementNames::parse(std::string_view list) {
  std::vector<std::string> names;
  if (!trim(list).empty()) {
    for (auto token : split(list, ',')) names.emplace_back(token);
  }
  return ElementNames(std::move(names));
}

std::string ElementNames::name(std::size_t u) const {
  if (u < names_.size()) return names_[u];
  return std::to_string(u);
}

std::size_t ElementNames::lookup(std::string_view token) const {
  for (std::size_t u = 0; u < names_.size(); ++u) {
    if (names_[u] == token) return u;
  }
  if (auto v = parse_number(token)) return *v;
  throw Error(ErrorCode::InvalidFormat, "unknown element '" + std::string(token) + "'");
}

std::string format_partition(const Partition& p, const ElementNames& names) {
  std::string out;
  const auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '|';
    out += join_elements(blocks[b], names);
  }
  return out;
}

std::string format_partition_rgs(const Partition& p) {
  std::string out = "rgs:";
  const auto rgs = p.rgs();
  for (std::size_t u = 0; u < rgs.size(); ++u) {
    if (u) out += ',';
    out += std::to_string(rgs[u]);
  }
  return out;
}

Partition parse_partition(std::size_t n, std::string_view text, const ElementNames& names) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::InvalidFormat, "empty partition text");
  if (text.starts_with("rgs:")) {
    std::vector<std::uint32_t> rgs;
    for (auto token : split(text.substr(4), ',')) {
      auto v = parse_number(token);
      if (!v) {
        throw Error(ErrorCode::InvalidFormat, "bad restricted-growth entry '" +
                                                  std::string(token) + "'");
      }
      rgs.push_back(static_cast<std::uint32_t>(*v));
    }
    if (rgs.size() != n) {
      throw Error(ErrorCode::InvalidFormat, "restricted-growth sequence has " +
                                                std::to_string(rgs.size()) +
                                                " entries, universe has " + std::to_string(n));
    }
    try {
      return Partition::from_rgs(std::move(rgs));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidFormat, e.what());
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (auto block_text : split(text, '|')) {
    std::vector<std::size_t> block;
    if (!block_text.empty()) {
      for (auto token : split(block_text, ',')) {
        if (token.empty()) {
          throw Error(ErrorCode::InvalidFormat,
                      "empty element in block '" + std::string(block_text) + "'");
        }
        block.push_back(names.lookup(token));
      }
    }
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(n, blocks);
}

std::string format_subset(const Subset& s, const ElementNames& names) {
  return "{" + join_elements(s.elements(), names) + "}";
}

Subset parse_subset(std::size_t n, std::string_view text, const ElementNames& names) {
  text = trim(text);
  if (text.starts_with('{') != text.ends_with('}') || text == "{" ) {
    throw Error(ErrorCode::InvalidFormat, "unbalanced braces in subset '" + std::string(text) + "'");
  }
  if (text.starts_with('{')) text = trim(text.substr(1, text.size() - 2));
  Subset s(n);
  if (text.empty()) return s;
  for (auto token : split(text, ',')) {
    if (token.empty()) throw Error(ErrorCode::InvalidFormat, "empty element in subset");
    s.insert(names.lookup(token));
  }
  return s;
}

std::string format_relation(const PairRelation& r, const ElementNames& names) {
  std::string out;
  for (const auto& p : r.pairs()) {
    if (!out.empty()) out += ' ';
    out += names.name(p.first) + "," + names.name(p.second);
  }
  return out;
}

PairRelation parse_relation(std::size_t n, std::string_view text, const ElementNames& names) {
  PairRelation r(n);
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const auto start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    const auto token = text.substr(start, i - start);
    const auto parts = split(token, ',');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
      throw Error(ErrorCode::InvalidFormat, "bad pair '" + std::string(token) + "'");
    }
    r.insert(names.lookup(parts[0]), names.lookup(parts[1]));
  }
  return r;
}

namespace mech {

std::vector<SetSwitchEvent> parse_events(std::string_view text) {
  std::vector<SetSwitchEvent> out;
  if (trim(text).empty()) return out;
  for (auto token : split(text, ',')) {
    const auto eq = token.find('=');
    const auto index = eq == std::string_view::npos ? std::nullopt : parse_number(trim(token.substr(0, eq)));
    if (!index) {
      throw Error(ErrorCode::InvalidFormat, "bad event '" + std::string(token) +
                                                "', expected switch=side");
    }
    out.push_back({*index, parse_side(trim(token.substr(eq + 1)))});
  }
  return out;
}

std::vector<ElementPair> parse_pairs(std::string_view text, const ElementNames& names) {
  std::vector<ElementPair> out;
  if (trim(text).empty()) return out;
  for (auto token : split(text, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == token.size()) {
      throw Error(ErrorCode::InvalidFormat, "bad pair '" + std::string(token) + "', expected u-v");
    }
    out.push_back({names.lookup(trim(token.substr(0, dash))),
                   names.lookup(trim(token.substr(dash + 1)))});
  }
  return out;
}

std::vector<std::size_t> parse_elements(std::string_view text, const ElementNames& names) {
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (auto token : split(text, ',')) {
    if (token.empty()) throw Error(ErrorCode::InvalidFormat, "empty element in list");
    out.push_back(names.lookup(token));
  }
  return out;
}

std::vector<SwitchState> parse_answers(std::string_view text) {
  std::vector<SwitchState> out;
  if (trim(text).empty()) return out;
  for (auto token : split(text, ',')) out.push_back(parse_side(token));
  return out;
}

}  // namespace mech

}  // namespace partlogic
