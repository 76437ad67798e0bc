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
#include <vector>

#include "partlogic/limits.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/subset.hpp"

namespace partlogic {

/// Bell(n) for n <= 25 (the largest that fits in 64 bits).
std::uint64_t bell_number(std::size_t n);

/// Restartable stream over every partition of {0..n-1} in lexicographic
/// restricted-growth order. Holds only its own cursor.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::size_t n);

  /// Next partition, or nullopt once the stream is exhausted.
  std::optional<Partition> next();
  void reset();

 private:
  std::size_t n_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::uint32_t> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

/// All partitions of {0..n-1} in lexicographic restricted-growth order.
/// Throws ResourceLimit when n exceeds limits.max_lattice_n.
std::vector<Partition> enumerate_partitions(std::size_t n, const Limits& limits = {});
/// All subsets of {0..n-1}, ordered by their bitmask value.
std::vector<Subset> enumerate_subsets(std::size_t n, const Limits& limits = {});

enum class LatticeKind { Subset, Partition };

/// A covering pair (lower, upper): lower < upper with nothing strictly between.
/// Indices refer to the enumeration order of the chosen lattice.
struct CoverEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

/// Covering relation of the subset lattice (inclusion) or the partition lattice
/// (refinement, discrete on top). Edges are sorted.
std::vector<CoverEdge> hasse_cover_edges(LatticeKind kind, std::size_t n,
                                         const Limits& limits = {});

}  // namespace partlogic
