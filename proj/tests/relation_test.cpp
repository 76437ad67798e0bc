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

#include <gtest/gtest.h>

#include <random>

#include "partlogic/error.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/relation.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

namespace partlogic {
namespace {

using ::bridge::random_rel;
using ::bridge::to_rel;
using ::bridge::to_relation;

TEST(PairRelation, BasicAlgebra) {
  PairRelation r(3);
  r.insert(0, 2);
  EXPECT_TRUE(r.contains(0, 2));
  EXPECT_FALSE(r.contains(2, 0));
  EXPECT_EQ(r.symmetrized().count(), 2u);
  EXPECT_EQ(r.complement().count(), 8u);
  EXPECT_EQ((r | r.complement()), PairRelation::full(3));
  r.erase(0, 2);
  EXPECT_TRUE(r.empty());
  EXPECT_THROW(r.insert(3, 0), Error);
  EXPECT_THROW((void)(PairRelation(2) | PairRelation(3)), Error);
}

TEST(PairRelation, ComplementIgnoresPaddingBits) {
  // n = 65 spans two words per row; the complement must not leak bits past n.
  const auto full = PairRelation(65).complement();
  EXPECT_EQ(full.count(), 65u * 65u);
  EXPECT_EQ(full, PairRelation::full(65));
}

TEST(EquivalenceViolation, ReportsAxiomAndWitness) {
  const std::vector<ElementPair> pairs{{0, 0}, {1, 1}, {2, 2}, {0, 1}};
  const auto v = PairRelation::of(3, pairs).find_equivalence_violation();
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->axiom, EquivalenceViolation::Axiom::Symmetry);
  EXPECT_EQ(v->witness, (ElementPair{0, 1}));

  auto t = PairRelation::diagonal(3);
  for (auto [a, b] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}}) t.insert(a, b);
  const auto w = t.find_equivalence_violation();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->axiom, EquivalenceViolation::Axiom::Transitivity);
  EXPECT_FALSE(w->describe().empty());
}

TEST(ClosureLaws, AgainstFixpointOracleOnRandomRelations) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const double density = 0.05 + 0.1 * (trial % 7);
    const auto a = random_rel(rng, n, density);
    const auto b = oracle::unite(a, random_rel(rng, n, density / 2));  // a ⊆ b
    const auto ra = to_relation(a), rb = to_relation(b);

    const auto cl = rst_closure(ra);
    ASSERT_EQ(to_rel(cl), oracle::closure(a));
    ASSERT_TRUE(cl.is_equivalence());
    ASSERT_EQ(rst_closure(cl), cl);                          // idempotent
    ASSERT_TRUE(ra.is_subset_of(cl));                        // extensive
    ASSERT_TRUE(cl.is_subset_of(rst_closure(rb)));           // monotone

    const auto in = interior(ra);
    ASSERT_EQ(to_rel(in), oracle::interior(a));
    ASSERT_EQ(interior(in), in);                             // idempotent
    ASSERT_TRUE(in.is_subset_of(ra));                        // intensive
    ASSERT_TRUE(in.is_subset_of(interior(rb)));              // monotone
    ASSERT_TRUE(in.is_partition_relation());
    ASSERT_TRUE(in.complement().is_equivalence());
  }
}

TEST(ClosureLaws, UnionOfEquivalencesNeedNotBeEquivalence) {
  const auto e1 = indit(Partition::from_blocks(3, {{0, 1}, {2}}));
  const auto e2 = indit(Partition::from_blocks(3, {{0}, {1, 2}}));
  ASSERT_TRUE(e1.is_equivalence());
  ASSERT_TRUE(e2.is_equivalence());
  const auto u = e1 | e2;
  const auto v = u.find_equivalence_violation();
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->axiom, EquivalenceViolation::Axiom::Transitivity);
  EXPECT_NE(rst_closure(u), u);
}

}  // namespace
}  // namespace partlogic
