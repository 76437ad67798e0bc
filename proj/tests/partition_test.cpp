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
#include "partlogic/lattice.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/text_format.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

namespace partlogic {
namespace {

using ::bridge::labels_of;
using ::bridge::to_partition;
using ::bridge::to_rel;
using ::bridge::to_relation;

Partition P(std::size_t n, std::string_view text) { return parse_partition(n, text); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(PartitionFromBlocks, CanonicalAssignment) {
  const auto p = Partition::from_blocks(3, {{0, 1}, {2}});
  EXPECT_EQ(labels_of(p), (oracle::Labels{0, 0, 1}));
  EXPECT_EQ(Partition::from_blocks(3, {{2}, {1, 0}}), p);
  EXPECT_EQ(Partition::from_blocks(3, {{0}, {1}, {2}}), Partition::discrete(3));
}

TEST(PartitionFromBlocks, Errors) {
  EXPECT_EQ(code_of([] { Partition::from_blocks(3, {{0, 1}, {1, 2}}); }),
            ErrorCode::OverlappingBlocks);
  EXPECT_EQ(code_of([] { Partition::from_blocks(3, {{0, 1}, {}, {2}}); }), ErrorCode::EmptyBlock);
  EXPECT_EQ(code_of([] { Partition::from_blocks(3, {{0, 1}}); }), ErrorCode::MissingElement);
  EXPECT_EQ(code_of([] { Partition::from_blocks(3, {{0, 1}, {2, 3}}); }),
            ErrorCode::ElementOutOfRange);
}

TEST(Partition, DiscreteAndIndiscrete) {
  EXPECT_EQ(Partition::discrete(3).blocks(),
            (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
  EXPECT_EQ(Partition::indiscrete(3).blocks(), (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));
  EXPECT_EQ(Partition::discrete(1), Partition::indiscrete(1));
  EXPECT_TRUE(Partition::discrete(1).is_discrete());
  EXPECT_TRUE(Partition::discrete(1).is_indiscrete());
}

TEST(Ditset, Examples) {
  const auto d = dit(P(3, "0,1|2"));
  EXPECT_EQ(d.pairs(), (std::vector<ElementPair>{{0, 2}, {1, 2}, {2, 0}, {2, 1}}));
  EXPECT_TRUE(dit(Partition::indiscrete(3)).empty());
  EXPECT_EQ(dit(Partition::discrete(3)), PairRelation::full(3) - PairRelation::diagonal(3));
  EXPECT_EQ(P(3, "0,1|2").dit_count(), 4u);
}

TEST(Indit, Examples) {
  EXPECT_EQ(indit(Partition::discrete(3)), PairRelation::diagonal(3));
  EXPECT_EQ(indit(Partition::indiscrete(3)).count(), 9u);
  auto expected = PairRelation::diagonal(3);
  expected.insert(0, 1);
  expected.insert(1, 0);
  EXPECT_EQ(indit(P(3, "0,1|2")), expected);
}

TEST(FromEquivalence, Examples) {
  EXPECT_EQ(Partition::from_equivalence(PairRelation::diagonal(3)), Partition::discrete(3));
  EXPECT_EQ(Partition::from_equivalence(PairRelation::full(3)), Partition::indiscrete(3));
  const std::vector<ElementPair> pairs{{0, 1}};
  try {
    Partition::from_equivalence(PairRelation::of(3, pairs));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEquivalence);
    EXPECT_NE(std::string(e.what()).find("reflexiv"), std::string::npos) << e.what();
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(rst_closure(PairRelation(3)), PairRelation::diagonal(3));
  const std::vector<ElementPair> one{{0, 2}};
  auto expected = PairRelation::diagonal(3);
  expected.insert(0, 2);
  expected.insert(2, 0);
  EXPECT_EQ(rst_closure(PairRelation::of(3, one)), expected);
  const std::vector<ElementPair> chain{{0, 1}, {1, 2}};
  EXPECT_EQ(rst_closure(PairRelation::of(3, chain)), PairRelation::full(3));
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(PairRelation::full(3)), PairRelation::full(3) - PairRelation::diagonal(3));
  EXPECT_TRUE(interior(PairRelation(3)).empty());
  const std::vector<ElementPair> pairs{{0, 2}, {2, 0}};
  EXPECT_TRUE(interior(PairRelation::of(3, pairs)).empty());
}

TEST(Refines, Examples) {
  for (const auto& q : enumerate_partitions(3)) {
    EXPECT_TRUE(refines(Partition::discrete(3), q));
  }
  EXPECT_TRUE(refines(P(3, "0,1|2"), Partition::indiscrete(3)));
  EXPECT_FALSE(refines(P(3, "0,1|2"), P(3, "0|1,2")));
  EXPECT_EQ(code_of([] { refines(Partition::discrete(2), Partition::discrete(3)); }),
            ErrorCode::UniverseMismatch);
}

TEST(JoinMeet, Examples) {
  const auto p = P(3, "0,1|2"), q = P(3, "0|1,2");
  EXPECT_EQ(join(p, q), Partition::discrete(3));
  EXPECT_EQ(join(p, Partition::indiscrete(3)), p);
  EXPECT_EQ(join(p, p), p);
  EXPECT_EQ(meet(p, q), Partition::indiscrete(3));
  EXPECT_EQ(meet(p, Partition::discrete(3)), p);
  EXPECT_EQ(meet(p, p), p);
  EXPECT_EQ(code_of([] { join(Partition::discrete(2), Partition::discrete(3)); }),
            ErrorCode::UniverseMismatch);
  EXPECT_EQ(code_of([] { meet(Partition::discrete(2), Partition::discrete(3)); }),
            ErrorCode::UniverseMismatch);
}

TEST(Lift, Examples) {
  const auto p = P(3, "0,1|2");
  const std::vector<Partition> pp{p, p};
  EXPECT_EQ(lift_connective(Connective::Implies, pp), Partition::discrete(3));
  const std::vector<Partition> one{p};
  EXPECT_EQ(lift_connective(Connective::Not, one), Partition::indiscrete(3));
  EXPECT_EQ(lift_connective(Connective::Top, 3, {}), Partition::discrete(3));
  EXPECT_EQ(lift_connective(Connective::Bottom, 3, {}), Partition::indiscrete(3));
  EXPECT_EQ(code_of([&] { lift_connective(Connective::And, one); }), ErrorCode::ArityMismatch);
  const std::vector<Partition> mixed{p, Partition::discrete(4)};
  EXPECT_EQ(code_of([&] { lift_connective(Connective::Or, mixed); }),
            ErrorCode::UniverseMismatch);
  EXPECT_EQ(code_of([] { connective_from_name("nand"); }), ErrorCode::UnknownConnective);
}

// ---- exhaustive properties against the oracle ------------------------------

class AllPairs : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AllPairs, ComplementarityAndRoundTrip) {
  const std::size_t n = GetParam();
  for (const auto& p : enumerate_partitions(n)) {
    EXPECT_EQ(dit(p) | indit(p), PairRelation::full(n));
    EXPECT_TRUE((dit(p) & indit(p)).empty());
    EXPECT_TRUE(indit(p).is_equivalence());
    EXPECT_TRUE(dit(p).is_partition_relation());
    EXPECT_EQ(Partition::from_equivalence(indit(p)), p);
    EXPECT_EQ(to_rel(dit(p)), oracle::dit(labels_of(p)));
  }
}

TEST_P(AllPairs, OrderJoinMeetAgreeWithOracle) {
  const std::size_t n = GetParam();
  const auto all = enumerate_partitions(n);
  for (const auto& p : all) {
    for (const auto& q : all) {
      const auto lp = labels_of(p), lq = labels_of(q);
      ASSERT_EQ(refines(p, q), oracle::refines(lp, lq));
      ASSERT_EQ(refines(p, q), refines_by_ditsets(p, q));
      ASSERT_EQ(refines(p, q), dit(q).is_subset_of(dit(p)));

      const auto j = join(p, q);
      ASSERT_EQ(labels_of(j), oracle::join(lp, lq));
      ASSERT_EQ(j, join_by_ditsets(p, q));
      const auto u = dit(p) | dit(q);
      ASSERT_EQ(interior(u), u) << "union of ditsets needed an interior correction";
      ASSERT_EQ(dit(j), u);

      const auto m = meet(p, q);
      ASSERT_EQ(labels_of(m), oracle::meet(lp, lq));
      ASSERT_EQ(m, meet_by_components(p, q));

      const std::vector<Partition> ops{p, q};
      ASSERT_EQ(lift_connective(Connective::And, ops), m);
      ASSERT_EQ(dit(lift_connective(Connective::Or, ops)), dit(j));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(UpToFive, AllPairs, ::testing::Values(1, 2, 3, 4, 5));

TEST(LatticeLaws, JoinMeetAlgebraOnFour) {
  const auto all = enumerate_partitions(4);
  const auto bottom = Partition::indiscrete(4), top = Partition::discrete(4);
  for (const auto& a : all) {
    EXPECT_EQ(join(a, bottom), a);
    EXPECT_EQ(meet(a, top), a);
    EXPECT_EQ(join(a, top), top);
    EXPECT_EQ(meet(a, bottom), bottom);
    EXPECT_TRUE(refines(a, bottom));
    EXPECT_TRUE(refines(top, a));
    for (const auto& b : all) {
      ASSERT_EQ(join(a, b), join(b, a));
      ASSERT_EQ(meet(a, b), meet(b, a));
      ASSERT_EQ(join(a, meet(a, b)), a);
      ASSERT_EQ(meet(a, join(a, b)), a);
      for (const auto& c : all) {
        ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)));
        ASSERT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
      }
    }
  }
}

TEST(Lift, NegationEqualsImplicationToBottom) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const std::vector<Partition> one{p};
      const std::vector<Partition> two{p, Partition::indiscrete(n)};
      EXPECT_EQ(lift_connective(Connective::Not, one), lift_connective(Connective::Implies, two));
    }
  }
}

TEST(Lift, MatchesRecipeOracle) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& p : all) {
      for (const auto& q : all) {
        const auto a = oracle::dit(labels_of(p)), b = oracle::dit(labels_of(q));
        const std::vector<Partition> ops{p, q};
        const auto implies =
            oracle::partition_of_interior(oracle::unite(oracle::complement(a), b));
        ASSERT_EQ(labels_of(lift_connective(Connective::Implies, ops)), implies);
        const auto iff = oracle::partition_of_interior(
            oracle::intersect(oracle::unite(oracle::complement(a), b),
                              oracle::unite(oracle::complement(b), a)));
        ASSERT_EQ(labels_of(lift_connective(Connective::Iff, ops)), iff);
      }
    }
  }
}

TEST(PartitionOrder, ComparesSizeThenSequence) {
  EXPECT_LT(Partition::indiscrete(3), Partition::discrete(3));
  EXPECT_LT(Partition::discrete(2), Partition::indiscrete(3));
}

TEST(PartitionFromRgs, RejectsNonCanonical) {
  EXPECT_EQ(code_of([] { Partition::from_rgs({1, 0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Partition::from_rgs({0, 2}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(Partition::from_rgs({0, 1, 0}), P(3, "0,2|1"));
}

}  // namespace
}  // namespace partlogic
