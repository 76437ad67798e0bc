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

namespace partlogic {

/// Size caps shared by the checkers, the lattice export and the simulators.
/// Every field can be overridden from the command line or a config file.
struct Limits {
  /// Largest universe for relation-table work (evaluation, tautology search).
  std::size_t max_relation_n = 12;
  /// Largest universe for full-lattice enumeration and Hasse export.
  std::size_t max_lattice_n = 10;
  /// Largest universe a single partition or subset may live on.
  std::size_t max_universe = 4096;
  /// Free-variable cap for truth tables and subset checks.
  std::size_t max_truth_table_vars = 16;
  /// Largest Bell(n)^vars the partition search may visit for one n.
  std::uint64_t partition_assignment_budget = 3375;
  /// Largest (2^n)^vars the subset search may visit for one n.
  std::uint64_t subset_assignment_budget = std::uint64_t{1} << 24;
  /// Step cap for the selectionist runner.
  std::size_t max_steps = 10000;
  /// Worker threads for the tautology searches; results never depend on it.
  unsigned threads = 1;
};

}  // namespace partlogic
