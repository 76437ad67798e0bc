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

#include "partlogic/formula.hpp"

#include <algorithm>
#include <vector>

#include "partlogic/error.hpp"

namespace partlogic {

struct Formula::Node {
  Kind kind = Kind::Constant;
  std::string name;
  bool value = false;
  std::vector<Formula> children;
};

Formula Formula::variable(std::string name) {
  if (!is_valid_variable_name(name)) {
    throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = value;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children.push_back(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  if (kind == Kind::Variable || kind == Kind::Constant || kind == Kind::Not) {
    throw Error(ErrorCode::ArityMismatch, "not a binary connective");
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
bool Formula::value() const noexcept { return node_->value; }

const Formula& Formula::child(std::size_t i) const {
  if (i >= node_->children.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "formula has no operand " + std::to_string(i));
  }
  return node_->children[i];
}

std::size_t Formula::child_count() const noexcept { return node_->children.size(); }

Connective Formula::connective() const noexcept {
  switch (kind()) {
    case Kind::Constant: return value() ? Connective::Top : Connective::Bottom;
    case Kind::Not: return Connective::Not;
    case Kind::And: return Connective::And;
    case Kind::Or: return Connective::Or;
    case Kind::Implies: return Connective::Implies;
    case Kind::Iff: return Connective::Iff;
    case Kind::Variable: break;
  }
  return Connective::Top;
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const auto* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::Variable) out.insert(f->name());
    for (const auto& c : f->node_->children) stack.push_back(&c);
  }
  return out;
}

std::size_t Formula::node_count() const {
  std::size_t count = 1;
  for (const auto& c : node_->children) count += c.node_count();
  return count;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
  return d;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.value() != b.value()) return false;
  return a.node_->children == b.node_->children;
}

bool is_valid_variable_name(std::string_view name) noexcept {
  if (name.empty() || name == "T" || name == "F") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

// Evaluation

namespace {

template <class Map>
const auto& lookup(const Map& values, const std::string& name) {
  auto it = values.find(name);
  if (it == values.end()) {
    throw Error(ErrorCode::UnboundVariable, "variable '" + name + "' has no value");
  }
  return it->second;
}

Subset eval_subset_node(const Formula& f, const SubsetAssignment& a) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::Variable: {
      const auto& s = lookup(a.values, f.name());
      if (s.universe_size() != a.n) {
        throw Error(ErrorCode::UniverseMismatch,
                    "value of '" + f.name() + "' lives on a universe of size " +
                        std::to_string(s.universe_size()) + ", expected " +
                        std::to_string(a.n));
      }
      return s;
    }
    case Kind::Constant:
      return f.value() ? Subset::full(a.n) : Subset(a.n);
    case Kind::Not:
      return eval_subset_node(f.child(0), a).complement();
    default:
      break;
  }
  const auto l = eval_subset_node(f.child(0), a);
  const auto r = eval_subset_node(f.child(1), a);
  switch (f.kind()) {
    case Kind::And: return l & r;
    case Kind::Or: return l | r;
    case Kind::Implies: return l.complement() | r;
    default: return (l.complement() | r) & (r.complement() | l);
  }
}

Partition eval_partition_node(const Formula& f, const PartitionAssignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Variable: {
      const auto& p = lookup(a.values, f.name());
      if (p.universe_size() != a.n) {
        throw Error(ErrorCode::UniverseMismatch,
                    "value of '" + f.name() + "' lives on a universe of size " +
                        std::to_string(p.universe_size()) + ", expected " +
                        std::to_string(a.n));
      }
      return p;
    }
    case Formula::Kind::Constant:
      return lift_connective(f.connective(), a.n, {});
    default:
      break;
  }
  std::vector<Partition> operands;
  operands.reserve(f.child_count());
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    operands.push_back(eval_partition_node(f.child(i), a));
  }
  return lift_connective(f.connective(), a.n, operands);
}

}  // namespace

Subset eval_subset(const Formula& f, const SubsetAssignment& a) {
  if (a.n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  return eval_subset_node(f, a);
}

Partition eval_partition(const Formula& f, const PartitionAssignment& a) {
  if (a.n < 2) {
    throw Error(ErrorCode::UniverseTooSmall,
                "partition semantics needs a universe of at least 2 elements, got " +
                    std::to_string(a.n));
  }
  return eval_partition_node(f, a);
}

bool eval_truth(const Formula& f, const std::map<std::string, bool, std::less<>>& a) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::Variable: return lookup(a, f.name());
    case Kind::Constant: return f.value();
    case Kind::Not: return !eval_truth(f.child(0), a);
    default: break;
  }
  const bool l = eval_truth(f.child(0), a);
  const bool r = eval_truth(f.child(1), a);
  switch (f.kind()) {
    case Kind::And: return l && r;
    case Kind::Or: return l || r;
    case Kind::Implies: return !l || r;
    default: return l == r;
  }
}

}  // namespace partlogic
