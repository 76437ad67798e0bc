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
#include <string_view>
#include <vector>

#include "partlogic/mechanisms.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/relation.hpp"
#include "partlogic/subset.hpp"

// Text formats used by the command line and the test fixtures.
//
//   partition   blocks joined by '|', elements by ',':   0,1|2
//               or restricted-growth form:              rgs:0,0,1
//   subset      braces around a comma list:             {0,2}   {}
//   relation    sorted "u,v" pairs separated by spaces:  0,2 2,0
//
// Output is canonical: blocks ordered by smallest element, elements ascending.

namespace partlogic {

/// Optional element-name table. Empty means elements print as integers.
class ElementNames {
 public:
  ElementNames() = default;
  /// Throws InvalidFormat on duplicates or names that are not identifiers.
  explicit ElementNames(std::vector<std::string> names);
  /// Comma-separated list, e.g. "a,b,c".
  static ElementNames parse(std::string_view list);

  bool empty() const noexcept { return names_.empty(); }
  std::size_t size() const noexcept { return names_.size(); }
  std::string name(std::size_t u) const;
  /// Index of a name or decimal integer token. Throws InvalidFormat.
  std::size_t lookup(std::string_view token) const;

 private:
  std::vector<std::string> names_;
};

std::string format_partition(const Partition& p, const ElementNames& names = {});
std::string format_partition_rgs(const Partition& p);
/// Accepts both forms. Throws InvalidFormat or a partition construction error.
Partition parse_partition(std::size_t n, std::string_view text,
                          const ElementNames& names = {});

std::string format_subset(const Subset& s, const ElementNames& names = {});
/// "{0,2}", "0,2", "{}" and "" are accepted.
Subset parse_subset(std::size_t n, std::string_view text, const ElementNames& names = {});

std::string format_relation(const PairRelation& r, const ElementNames& names = {});
/// Pairs separated by whitespace or ';'.
PairRelation parse_relation(std::size_t n, std::string_view text,
                            const ElementNames& names = {});

namespace mech {

/// "1=0,2=1,3=0": switch index = side, side being 0/1 or L/R.
std::vector<SetSwitchEvent> parse_events(std::string_view text);
/// "0-1,1-2".
std::vector<ElementPair> parse_pairs(std::string_view text, const ElementNames& names = {});
/// "2,0".
std::vector<std::size_t> parse_elements(std::string_view text, const ElementNames& names = {});
/// "0,1,0": sides for switch 1, 2, 3, ...
std::vector<SwitchState> parse_answers(std::string_view text);

}  // namespace mech

}  // namespace partlogic
