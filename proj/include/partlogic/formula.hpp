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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "partlogic/connective.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/subset.hpp"

namespace partlogic {

/// Immutable propositional formula. Copies share structure.
///
/// Concrete syntax, loosest binding last:
///
///     ~  &  |  ->  <->
///
/// `->` associates to the right, `&`, `|` and `<->` to the left. `T` and `F`
/// are the constants; variables match [a-zA-Z][a-zA-Z0-9_]* other than T, F.
class Formula {
 public:
  enum class Kind { Variable, Constant, Not, And, Or, Implies, Iff };

  static Formula variable(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula child);
  static Formula binary(Kind kind, Formula left, Formula right);

  Kind kind() const noexcept;
  /// Variable name; empty for other kinds.
  const std::string& name() const noexcept;
  /// Constant value; false for other kinds.
  bool value() const noexcept;
  /// Operand `i` (0 for Not, 0..1 for binary kinds).
  const Formula& child(std::size_t i) const;
  std::size_t child_count() const noexcept;

  Connective connective() const noexcept;
  std::set<std::string> variables() const;
  std::size_t node_count() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError (code SyntaxError or UnbalancedParens) with a 0-based offset.
Formula parse(std::string_view text);
/// Minimal-parenthesis rendering; parse(format(f)) == f.
std::string format(const Formula& f);

bool is_valid_variable_name(std::string_view name) noexcept;

struct SubsetAssignment {
  std::size_t n = 1;
  std::map<std::string, Subset, std::less<>> values;
};

struct PartitionAssignment {
  std::size_t n = 2;
  std::map<std::string, Partition, std::less<>> values;
};

/// Boolean set semantics; NOT is complement in U and p -> q is p^c ∪ q.
/// Throws UnboundVariable, UniverseMismatch.
Subset eval_subset(const Formula& f, const SubsetAssignment& a);

/// Partition semantics: every connective goes through lift_connective; T is the
/// discrete partition and F the indiscrete one. Throws UnboundVariable,
/// UniverseMismatch, UniverseTooSmall (n < 2).
Partition eval_partition(const Formula& f, const PartitionAssignment& a);

/// Two-valued semantics for truth tables.
bool eval_truth(const Formula& f, const std::map<std::string, bool, std::less<>>& a);

}  // namespace partlogic
