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

#include "partlogic/partition.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "partlogic/error.hpp"
#include "union_find.hpp"

namespace partlogic {

namespace {

void check_same_universe(const Partition& p, const Partition& q) {
  if (p.universe_size() != q.universe_size()) {
    throw Error(ErrorCode::UniverseMismatch,
                "partitions on universes of size " + std::to_string(p.universe_size()) +
                    " and " + std::to_string(q.universe_size()));
  }
}

std::size_t count_blocks(const std::vector<std::uint32_t>& rgs) {
  std::uint32_t top = 0;
  for (auto b : rgs) top = std::max(top, b);
  return rgs.empty() ? 0 : top + 1;
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> rgs)
    : rgs_(std::move(rgs)), blocks_(count_blocks(rgs_)) {}

Partition Partition::from_rgs(std::vector<std::uint32_t> rgs) {
  if (rgs.empty()) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  std::uint32_t next = 0;
  for (std::size_t u = 0; u < rgs.size(); ++u) {
    if (rgs[u] > next) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a restricted-growth sequence: entry " + std::to_string(u) + " is " +
                      std::to_string(rgs[u]) + ", at most " + std::to_string(next) +
                      " allowed");
    }
    if (rgs[u] == next) ++next;
  }
  return Partition(std::move(rgs));
}

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& blocks) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  std::vector<std::size_t> owner(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw Error(ErrorCode::EmptyBlock, "block " + std::to_string(b) + " is empty");
    }
    for (auto u : blocks[b]) {
      if (u >= n) {
        throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(u) +
                                                      " outside universe of size " +
                                                      std::to_string(n));
      }
      if (owner[u] != blocks.size()) {
        throw Error(ErrorCode::OverlappingBlocks,
                    "element " + std::to_string(u) + " appears in blocks " +
                        std::to_string(owner[u]) + " and " + std::to_string(b));
      }
      owner[u] = b;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (owner[u] == blocks.size()) {
      throw Error(ErrorCode::MissingElement,
                  "element " + std::to_string(u) + " is in no block");
    }
  }
  return from_labels(owner);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  if (labels.empty()) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  std::map<std::size_t, std::uint32_t> relabel;
  std::vector<std::uint32_t> rgs(labels.size());
  for (std::size_t u = 0; u < labels.size(); ++u) {
    auto [it, inserted] =
        relabel.try_emplace(labels[u], static_cast<std::uint32_t>(relabel.size()));
    rgs[u] = it->second;
  }
  return Partition(std::move(rgs));
}

Partition Partition::from_equivalence(const PairRelation& r) {
  if (auto violation = r.find_equivalence_violation()) {
    throw Error(ErrorCode::NotEquivalence, violation->describe());
  }
  const auto n = r.universe_size();
  detail::UnionFind sets(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (r.contains(u, v)) sets.unite(u, v);
    }
  }
  return Partition(sets.canonical_labels());
}

Partition Partition::discrete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  std::vector<std::uint32_t> rgs(n);
  for (std::size_t u = 0; u < n; ++u) rgs[u] = static_cast<std::uint32_t>(u);
  return Partition(std::move(rgs));
}

Partition Partition::indiscrete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  return Partition(std::vector<std::uint32_t>(n, 0));
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(blocks_);
  for (std::size_t u = 0; u < rgs_.size(); ++u) out[rgs_[u]].push_back(u);
  return out;
}

std::size_t Partition::dit_count() const noexcept {
  std::vector<std::size_t> sizes(blocks_, 0);
  for (auto b : rgs_) ++sizes[b];
  std::size_t same = 0;
  for (auto s : sizes) same += s * s;
  return rgs_.size() * rgs_.size() - same;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.rgs_.size() <=> b.rgs_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.rgs_.begin(), a.rgs_.end(),
                                                b.rgs_.begin(), b.rgs_.end());
}

PairRelation dit(const Partition& p) {
  const auto n = p.universe_size();
  PairRelation r(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (p.block_of(u) != p.block_of(v)) r.insert(u, v);
    }
  }
  return r;
}

PairRelation indit(const Partition& p) { return dit(p).complement(); }

Partition partition_of_interior(const PairRelation& s) {
  // int(s) = cl(s^c)^c, so the blocks are the classes of cl(s^c).
  const auto n = s.universe_size();
  detail::UnionFind sets(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!s.contains(u, v)) sets.unite(u, v);
    }
  }
  return Partition::from_rgs(sets.canonical_labels());
}

bool refines(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  // Each block of p must map into a single block of q.
  std::vector<std::int64_t> target(p.block_count(), -1);
  for (std::size_t u = 0; u < p.universe_size(); ++u) {
    auto& t = target[p.block_of(u)];
    const auto qb = static_cast<std::int64_t>(q.block_of(u));
    if (t < 0) {
      t = qb;
    } else if (t != qb) {
      return false;
    }
  }
  return true;
}

bool refines_by_ditsets(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  return dit(q).is_subset_of(dit(p));
}

Partition join(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  const auto n = p.universe_size();
  std::vector<std::size_t> labels(n);
  for (std::size_t u = 0; u < n; ++u) labels[u] = p.block_of(u) * n + q.block_of(u);
  return Partition::from_labels(labels);
}

Partition join_by_ditsets(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  // A union of partition relations is again one; its complement is the indit.
  return Partition::from_equivalence((dit(p) | dit(q)).complement());
}

Partition meet(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  return partition_of_interior(dit(p) & dit(q));
}

Partition meet_by_components(const Partition& p, const Partition& q) {
  check_same_universe(p, q);
  const auto n = p.universe_size();
  const auto joined = indit(p) | indit(q);
  detail::UnionFind sets(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (joined.contains(u, v)) sets.unite(u, v);
    }
  }
  return Partition::from_rgs(sets.canonical_labels());
}

Partition lift_connective(Connective conn, std::span<const Partition> operands) {
  if (operands.empty()) {
    throw Error(ErrorCode::ArityMismatch, "connective '" + std::string(name_of(conn)) +
                                              "' needs an explicit universe size");
  }
  return lift_connective(conn, operands.front().universe_size(), operands);
}

Partition lift_connective(Connective conn, std::size_t n,
                          std::span<const Partition> operands) {
  if (operands.size() != arity(conn)) {
    throw Error(ErrorCode::ArityMismatch,
                "connective '" + std::string(name_of(conn)) + "' takes " +
                    std::to_string(arity(conn)) + " operands, got " +
                    std::to_string(operands.size()));
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  for (const auto& p : operands) {
    if (p.universe_size() != n) check_same_universe(p, Partition::indiscrete(n));
  }

  PairRelation result(n);
  switch (conn) {
    case Connective::Top:
      result = PairRelation::full(n);
      break;
    case Connective::Bottom:
      break;
    case Connective::Not:
      result = dit(operands[0]).complement();
      break;
    case Connective::And:
      result = dit(operands[0]) & dit(operands[1]);
      break;
    case Connective::Or:
      result = dit(operands[0]) | dit(operands[1]);
      break;
    case Connective::Implies:
      result = dit(operands[0]).complement() | dit(operands[1]);
      break;
    case Connective::Iff: {
      const auto a = dit(operands[0]);
      const auto b = dit(operands[1]);
      result = (a.complement() | b) & (b.complement() | a);
      break;
    }
  }
  return partition_of_interior(result);
}

}  // namespace partlogic
