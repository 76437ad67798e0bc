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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace partlogic {

struct ElementPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// The first equivalence axiom a relation breaks, with the pair that breaks it.
/// For transitivity `witness` is (u, w) where (u, v) and (v, w) are present.
struct EquivalenceViolation {
  enum class Axiom { Reflexivity, Symmetry, Transitivity };
  Axiom axiom;
  ElementPair witness;
  std::size_t via = 0;  // middle element, transitivity only

  std::string describe() const;
};

/// A set of ordered pairs over U x U held as a dense n x n bit table.
///
/// Ditsets, inditsets and the arguments of the closure and interior operators
/// all use this type. Whether a given relation is an equivalence relation or a
/// partition relation is checked on demand, never assumed.
class PairRelation {
 public:
  explicit PairRelation(std::size_t n);

  static PairRelation full(std::size_t n);
  static PairRelation diagonal(std::size_t n);
  static PairRelation of(std::size_t n, std::span<const ElementPair> pairs);

  std::size_t universe_size() const noexcept { return n_; }

  bool contains(std::size_t u, std::size_t v) const;
  void insert(std::size_t u, std::size_t v);
  void erase(std::size_t u, std::size_t v);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  /// All pairs in lexicographic order.
  std::vector<ElementPair> pairs() const;

  /// Complement within U x U (the diagonal included).
  PairRelation complement() const;
  PairRelation symmetrized() const;
  bool is_subset_of(const PairRelation& other) const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const { return !find_equivalence_violation(); }
  /// Anti-reflexive, symmetric, and its complement is an equivalence relation.
  bool is_partition_relation() const;
  std::optional<EquivalenceViolation> find_equivalence_violation() const;

  friend PairRelation operator|(const PairRelation& a, const PairRelation& b);
  friend PairRelation operator&(const PairRelation& a, const PairRelation& b);
  friend PairRelation operator-(const PairRelation& a, const PairRelation& b);
  friend bool operator==(const PairRelation& a, const PairRelation& b) = default;

 private:
  std::size_t words_per_row() const noexcept { return stride_; }
  void check_index(std::size_t u, std::size_t v) const;
  void check_same_universe(const PairRelation& other) const;
  void clear_padding() noexcept;

  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

/// Smallest equivalence relation containing `s` (reflexive-symmetric-transitive
/// closure). Not a topological closure: unions of closed sets need not be closed.
PairRelation rst_closure(const PairRelation& s);

/// Complement of the closure of the complement. Always the ditset of a partition.
/// Defined for arbitrary pair sets, including non-symmetric ones.
PairRelation interior(const PairRelation& s);

}  // namespace partlogic
