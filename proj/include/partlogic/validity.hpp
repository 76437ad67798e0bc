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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "partlogic/formula.hpp"
#include "partlogic/limits.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/subset.hpp"

namespace partlogic {

enum class Logic { TruthTable, Subset, Partition };

/// A value in one of the three semantics.
using LogicValue = std::variant<bool, Subset, Partition>;

struct Counterexample {
  /// Universe size; 1 for truth tables.
  std::size_t n = 1;
  /// Variables in sorted order with the values that falsify the formula.
  std::vector<std::pair<std::string, LogicValue>> assignment;
  /// What the formula evaluated to (never the top element).
  LogicValue value;
};

/// Outcome of a finite validity check. `valid` means "valid on every universe
/// size in [n_min, n_max]"; nothing is claimed beyond n_max.
struct Verdict {
  Logic logic = Logic::TruthTable;
  bool valid = false;
  std::optional<Counterexample> counterexample;
  std::size_t n_min = 1;
  /// Last universe size examined (the counterexample's, on failure).
  std::size_t n_max = 1;
  /// Assignments in enumeration order up to and including the counterexample,
  /// or all of them when valid. Independent of the thread count.
  std::uint64_t assignments_checked = 0;
};

/// Every 0/1 assignment. Throws TooManyVariables above limits.max_truth_table_vars.
Verdict truth_table_tautology(const Formula& f, const Limits& limits = {});

/// Every subset assignment on every universe 1..n_max. Throws TooManyVariables,
/// ResourceLimit, InvalidArgument (n_max < 1).
Verdict subset_valid(const Formula& f, std::size_t n_max, const Limits& limits = {});

/// Every partition assignment on every universe 2..n_max. Valid iff each one
/// evaluates to the discrete partition. The reported counterexample is the
/// least by (n, lexicographic tuple of per-variable enumeration indices), with
/// variables in sorted order. Throws ResourceLimit naming the exceeded budget,
/// UniverseTooSmall (n_max < 2).
Verdict partition_tautology(const Formula& f, std::size_t n_max,
                            const Limits& limits = {});

}  // namespace partlogic
