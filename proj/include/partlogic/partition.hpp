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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "partlogic/connective.hpp"
#include "partlogic/relation.hpp"

namespace partlogic {

/// A partition of {0, ..., n-1} in restricted-growth form.
///
/// `rgs()[u]` is the block index of element u. Block indices appear in order of
/// each block's smallest element, so two partitions with the same blocks have
/// identical sequences and equality is plain sequence equality. n = 1 is allowed;
/// there the discrete and indiscrete partitions coincide.
class Partition {
 public:
  /// Throws Error{InvalidArgument} unless `rgs` is a restricted-growth sequence.
  static Partition from_rgs(std::vector<std::uint32_t> rgs);
  /// Throws EmptyBlock, OverlappingBlocks, MissingElement or ElementOutOfRange.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<std::size_t>>& blocks);
  /// Canonicalizes an arbitrary labelling: elements with equal labels share a block.
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Blocks are the classes of `r`; throws Error{NotEquivalence} with a witness.
  static Partition from_equivalence(const PairRelation& r);

  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);

  std::size_t universe_size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t u) const { return rgs_.at(u); }
  std::span<const std::uint32_t> rgs() const noexcept { return rgs_; }
  std::vector<std::vector<std::size_t>> blocks() const;

  bool is_discrete() const noexcept { return blocks_ == rgs_.size(); }
  bool is_indiscrete() const noexcept { return blocks_ == 1; }
  /// |dit(p)|, the number of ordered distinctions.
  std::size_t dit_count() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the restricted-growth sequence (enumeration order).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  explicit Partition(std::vector<std::uint32_t> rgs);

  std::vector<std::uint32_t> rgs_;
  std::size_t blocks_ = 0;
};

/// Ordered pairs whose endpoints lie in different blocks.
PairRelation dit(const Partition& p);
/// U x U minus dit(p); the equivalence relation of p.
PairRelation indit(const Partition& p);

/// The partition whose ditset is int(s), i.e. whose classes are those of cl(s^c).
Partition partition_of_interior(const PairRelation& s);

/// True iff every block of p lies inside a block of q ("p refines q").
bool refines(const Partition& p, const Partition& q);
/// Same relation, decided as dit(q) ⊆ dit(p).
bool refines_by_ditsets(const Partition& p, const Partition& q);

/// Least upper bound: the nonempty pairwise block intersections.
Partition join(const Partition& p, const Partition& q);
/// Same result, built from dit(p) ∪ dit(q).
Partition join_by_ditsets(const Partition& p, const Partition& q);

/// Greatest lower bound, with dit(p ∧ q) = int[dit(p) ∩ dit(q)].
Partition meet(const Partition& p, const Partition& q);
/// Same result, as connected components of indit(p) ∪ indit(q).
Partition meet_by_components(const Partition& p, const Partition& q);

/// Applies the subset form of `conn` to the operands' ditsets inside U x U and
/// returns the partition of the interior of the result. Operand count must match
/// the connective's arity; the nullary TOP/BOTTOM need the explicit-n overload.
Partition lift_connective(Connective conn, std::span<const Partition> operands);
Partition lift_connective(Connective conn, std::size_t n,
                          std::span<const Partition> operands);

}  // namespace partlogic
