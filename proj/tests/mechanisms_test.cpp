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

#include <cmath>
#include <random>

#include "partlogic/error.hpp"
#include "partlogic/mechanisms.hpp"
#include "partlogic/serialize.hpp"
#include "partlogic/text_format.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

namespace partlogic::mech {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> render_all(const VariantSpace& space, const Subset& s) {
  std::vector<std::string> out;
  for (auto v : s.elements()) out.push_back(space.render(static_cast<Variant>(v)));
  return out;
}

std::vector<std::string> render_all(const VariantSpace& space, const std::vector<Variant>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(space.render(v));
  return out;
}

TEST(VariantSpace, EncodingPutsSwitchOneOnTheRight) {
  const VariantSpace space(3);
  EXPECT_EQ(space.size(), 8u);
  EXPECT_EQ(space.parse("010"), 2u);
  EXPECT_EQ(space.render(2), "010");
  EXPECT_EQ(space.digit(2, 1), 0u);
  EXPECT_EQ(space.digit(2, 2), 1u);
  EXPECT_EQ(space.digit(2, 3), 0u);
  for (Variant v = 0; v < 8; ++v) EXPECT_EQ(space.parse(space.render(v)), v);
  EXPECT_EQ(code_of([&] { space.parse("01"); }), ErrorCode::InvalidFormat);
  EXPECT_EQ(code_of([&] { space.parse("012"); }), ErrorCode::InvalidFormat);
  EXPECT_EQ(code_of([] { VariantSpace(0); }), ErrorCode::IndexOutOfRange);
}

TEST(Selectionist, PeakedAtTargetLeavesOnlyTarget) {
  const VariantSpace space(3);
  const auto fitness = Fitness::peaked(3, space.parse("010"), 1.0);
  const auto t = run_selectionist(fitness, {default_threshold(3), 1000});
  EXPECT_EQ(render_all(space, t.final_state().survivors()), std::vector<std::string>{"010"});
  EXPECT_EQ(t.steps.front().state.survivors().size(), 8u);
  EXPECT_FALSE(t.steps.front().event.has_value());
}

TEST(Selectionist, UniformFitnessKillsNothing) {
  const Fitness uniform(3, std::vector<double>(8, 2.0));
  const auto t = run_selectionist(uniform, {0.01, 50});
  EXPECT_EQ(t.final_state().survivors().size(), 8u);
  // survivors already equal the argmax, so nothing is amplified
  EXPECT_EQ(t.steps.size(), 1u);
}

TEST(Selectionist, TiedMaximaBothSurvive) {
  const VariantSpace space(3);
  std::vector<double> scores(8, 1.0);
  scores[space.parse("010")] = 3.0;
  scores[space.parse("110")] = 3.0;
  const auto t = run_selectionist(Fitness(3, scores), {default_threshold(3), 1000});
  EXPECT_EQ(render_all(space, t.final_state().survivors()),
            (std::vector<std::string>{"010", "110"}));
}

TEST(Selectionist, Preconditions) {
  const auto f = Fitness::peaked(3, 2, 1.0);
  EXPECT_EQ(code_of([&] { run_selectionist(f, {0.0, 10}); }), ErrorCode::InvalidThreshold);
  EXPECT_EQ(code_of([&] { run_selectionist(f, {1.0 / 8, 10}); }), ErrorCode::InvalidThreshold);
  EXPECT_EQ(code_of([&] { run_selectionist(f, {0.01, 0}); }), ErrorCode::InvalidArgument);
  std::vector<double> bad(8, 1.0);
  bad[3] = 0.0;
  EXPECT_EQ(code_of([&] { Fitness(3, bad); }), ErrorCode::NonPositiveFitness);
  bad[3] = -1.0;
  EXPECT_EQ(code_of([&] { Fitness(3, bad); }), ErrorCode::NonPositiveFitness);
  EXPECT_EQ(code_of([] { Fitness::peaked(3, 2, 0.0); }), ErrorCode::InvalidFitness);
}

TEST(Selectionist, ConservationAndMonotoneSurvivors) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> score(0.5, 3.0);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> scores(std::size_t{1} << k);
      for (auto& s : scores) s = score(rng);
      const Fitness f(k, scores);
      const double threshold = default_threshold(k) * (1 + trial % 5);
      // the second-best variant falls below the threshold once
      // (second / max)^t < threshold, so this many steps always suffice
      auto sorted = scores;
      std::sort(sorted.rbegin(), sorted.rend());
      const double bound =
          std::log(1.0 / threshold) / std::log(sorted[0] / sorted[1]) + 1;
      const auto t = run_selectionist(f, {threshold, static_cast<std::size_t>(bound) + 1});
      std::size_t last = SIZE_MAX;
      for (const auto& step : t.steps) {
        double sum = 0;
        for (std::size_t v = 0; v < step.state.weights.size(); ++v) {
          if (step.state.extinct[v]) {
            ASSERT_EQ(step.state.weights[v], 0.0);
          } else {
            ASSERT_GE(step.state.weights[v], threshold);
            sum += step.state.weights[v];
          }
        }
        ASSERT_NEAR(sum, 1.0, 1e-12);
        const auto survivors = step.state.survivors().size();
        ASSERT_LE(survivors, last);
        last = survivors;
      }
      // a unique maximum (ties have probability zero here) is reached in time
      ASSERT_EQ(t.final_state().survivors(), f.argmax());
      ASSERT_LE(static_cast<double>(t.steps.size() - 1), bound);
    }
  }
}

TEST(Selectionist, ReplayReproducesTrace) {
  const auto f = Fitness::peaked(4, 9, 0.5);
  const auto t = run_selectionist(f, {default_threshold(4), 1000});
  EXPECT_EQ(replay(t, f, default_threshold(4)), t);
}

TEST(FitnessTable, ParsesVariantScoreLines) {
  const auto f = Fitness::parse(2, "# table\n00 1\n01 2.5\n10 1\n11 0.5  # low\n");
  EXPECT_EQ(f.score(1), 2.5);
  EXPECT_EQ(f.argmax(), std::vector<Variant>{1});
  EXPECT_EQ(code_of([] { Fitness::parse(2, "00 1\n01 1\n10 1\n"); }), ErrorCode::InvalidFormat);
  EXPECT_EQ(code_of([] { Fitness::parse(1, "0 1\n0 2\n1 1\n"); }), ErrorCode::InvalidFormat);
  EXPECT_EQ(code_of([] { Fitness::parse(1, "0 1\n1 x\n"); }), ErrorCode::InvalidFormat);
  EXPECT_EQ(code_of([] { Fitness::parse(1, "0 1\n1 0\n"); }), ErrorCode::NonPositiveFitness);
}

TEST(SwitchBank, SetAndBlocks) {
  const VariantSpace space(3);
  const SwitchBank s0(3);
  EXPECT_EQ(s0.render(), "NNN");
  EXPECT_EQ(consistent_block(s0).count(), 8u);
  const auto s1 = s0.set(1, SwitchState::Zero);
  EXPECT_EQ(render_all(space, consistent_block(s1)),
            (std::vector<std::string>{"000", "010", "100", "110"}));
  const auto s2 = s1.set(2, SwitchState::One);
  EXPECT_EQ(render_all(space, consistent_block(s2)), (std::vector<std::string>{"010", "110"}));
  const auto s3 = s2.set(3, SwitchState::Zero);
  EXPECT_EQ(render_all(space, consistent_block(s3)), std::vector<std::string>{"010"});
  EXPECT_EQ(s3.render(), "010");
  EXPECT_EQ(s0.state(1), SwitchState::Neutral);  // values are immutable

  EXPECT_EQ(code_of([&] { s1.set(1, SwitchState::Zero); }), ErrorCode::AlreadySet);
  EXPECT_EQ(s1.set(1, SwitchState::One, true).state(1), SwitchState::One);
  EXPECT_EQ(code_of([&] { s0.set(4, SwitchState::Zero); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { s0.set(0, SwitchState::Zero); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { s0.set(1, SwitchState::Neutral); }), ErrorCode::InvalidArgument);
}

TEST(Generative, WalkthroughNarrowsToTarget) {
  const VariantSpace space(3);
  const std::vector<SetSwitchEvent> events{
      {1, SwitchState::Zero}, {2, SwitchState::One}, {3, SwitchState::Zero}};
  const auto t = run_generative(3, events);
  std::vector<std::size_t> sizes;
  for (const auto& s : t.steps) sizes.push_back(consistent_block(s.state).count());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{8, 4, 2, 1}));
  EXPECT_EQ(render_all(space, consistent_block(t.steps[1].state)),
            (std::vector<std::string>{"000", "010", "100", "110"}));
  EXPECT_EQ(render_all(space, consistent_block(t.final_state())),
            std::vector<std::string>{"010"});
  EXPECT_EQ(replay(t), t);
  EXPECT_EQ(t.events(), events);
}

TEST(Generative, EmptyAndRepeatedExperience) {
  const auto t = run_generative(3, {});
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(consistent_block(t.final_state()).count(), 8u);
  const std::vector<SetSwitchEvent> twice{{1, SwitchState::Zero}, {1, SwitchState::One}};
  EXPECT_EQ(code_of([&] { run_generative(3, twice); }), ErrorCode::AlreadySet);
  EXPECT_EQ(run_generative(3, twice, true).final_state().state(1), SwitchState::One);
  const std::vector<SetSwitchEvent> wide{{5, SwitchState::Zero}};
  EXPECT_EQ(code_of([&] { run_generative(3, wide); }), ErrorCode::IndexOutOfRange);
}

TEST(Generative, NestedHalvingAndPartitionView) {
  std::mt19937 rng(8);
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 1);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<SetSwitchEvent> events;
      for (auto i : order)
        events.push_back({i, rng() % 2 ? SwitchState::One : SwitchState::Zero});
      const auto t = run_generative(k, events);
      for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const auto& bank = t.steps[s].state;
        const auto block = consistent_block(bank);
        ASSERT_EQ(block.count(), std::size_t{1} << (k - s));
        if (s > 0) {
          const auto prev = consistent_block(t.steps[s - 1].state);
          ASSERT_TRUE(block.is_subset_of(prev));
          ASSERT_NE(block, prev);
        }
        // partition made by the set switches is the join of their splits
        Partition joined = Partition::indiscrete(std::size_t{1} << k);
        PairRelation dits(std::size_t{1} << k);
        for (std::size_t i = 1; i <= k; ++i) {
          if (bank.state(i) == SwitchState::Neutral) continue;
          const auto split = switch_partition(k, i);
          joined = join(joined, split);
          dits = dits | dit(split);
        }
        ASSERT_EQ(induced_partition(bank), joined);
        ASSERT_EQ(dit(joined), dits);
        ASSERT_TRUE(block.elements().empty() ||
                    joined.block_of(block.elements().front()) ==
                        joined.block_of(block.elements().back()));
      }
    }
  }
}

TEST(SwitchPartition, DigitSplitsAndShannonBits) {
  const VariantSpace space(3);
  const auto p1 = switch_partition(3, 1);
  ASSERT_EQ(p1.block_count(), 2u);
  const auto blocks = p1.blocks();
  std::vector<std::string> first, second;
  for (auto v : blocks[0]) first.push_back(space.render(static_cast<Variant>(v)));
  for (auto v : blocks[1]) second.push_back(space.render(static_cast<Variant>(v)));
  EXPECT_EQ(first, (std::vector<std::string>{"000", "010", "100", "110"}));
  EXPECT_EQ(second, (std::vector<std::string>{"001", "011", "101", "111"}));

  const auto two = join(switch_partition(3, 1), switch_partition(3, 2));
  EXPECT_EQ(two.block_count(), 4u);
  for (const auto& b : two.blocks()) EXPECT_EQ(b.size(), 2u);

  for (std::size_t k = 1; k <= 6; ++k) {
    Partition acc = Partition::indiscrete(std::size_t{1} << k);
    for (std::size_t i = 1; i <= k; ++i) acc = join(acc, switch_partition(k, i));
    EXPECT_TRUE(acc.is_discrete()) << k;
  }
  EXPECT_EQ(code_of([] { switch_partition(3, 4); }), ErrorCode::IndexOutOfRange);
  Limits limits;
  limits.max_universe = 8;
  EXPECT_EQ(code_of([&] { switch_partition(4, 1, limits); }), ErrorCode::ResourceLimit);
}

TEST(Identify, Examples) {
  EXPECT_EQ(identify(3, {}), Partition::discrete(3));
  const std::vector<ElementPair> one{{0, 1}};
  EXPECT_EQ(format_partition(identify(3, one)), "0,1|2");
  const std::vector<ElementPair> chain{{0, 1}, {1, 2}};
  EXPECT_EQ(identify(3, chain), Partition::indiscrete(3));
  const std::vector<ElementPair> bad{{0, 3}};
  EXPECT_EQ(code_of([&] { identify(3, bad); }), ErrorCode::ElementOutOfRange);
}

TEST(Identify, EqualsClosureOfPairsOnRandomLists) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::uniform_int_distribution<std::size_t> el(0, n - 1);
    std::vector<ElementPair> pairs(trial % 7);
    for (auto& p : pairs) p = {el(rng), el(rng)};
    auto r = oracle::empty_rel(n);
    for (auto [a, b] : pairs) r[a][b] = true;
    ASSERT_EQ(bridge::labels_of(identify(n, pairs)), oracle::classes(oracle::closure(r)));
    const auto t = run_identification(n, pairs);
    ASSERT_EQ(t.steps.size(), pairs.size() + 1);
    ASSERT_EQ(replay(t), t);
    for (std::size_t s = 1; s < t.steps.size(); ++s)
      ASSERT_TRUE(refines(t.steps[s - 1].state, t.steps[s].state));
  }
}

TEST(Create, Examples) {
  EXPECT_TRUE(create(3, {}).final_state().empty());
  const std::vector<std::size_t> two{2, 0};
  EXPECT_EQ(format_subset(create(3, two).final_state()), "{0,2}");
  const std::vector<std::size_t> dup{1, 1};
  const auto t = create(3, dup);
  EXPECT_EQ(format_subset(t.final_state()), "{1}");
  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_FALSE(t.steps[1].event->duplicate);
  EXPECT_TRUE(t.steps[2].event->duplicate);
  EXPECT_EQ(replay(t), t);
  const std::vector<std::size_t> bad{3};
  EXPECT_EQ(code_of([&] { create(3, bad); }), ErrorCode::ElementOutOfRange);
}

TEST(TwentyQuestions, Examples) {
  const VariantSpace space(3);
  const std::vector<SwitchState> all{SwitchState::Zero, SwitchState::One, SwitchState::Zero};
  const auto t = twenty_questions(3, all);
  EXPECT_EQ(render_all(space, t.final_state().block), std::vector<std::string>{"010"});
  EXPECT_TRUE(t.final_state().partition.is_discrete());
  EXPECT_EQ(replay(t), t);

  const std::vector<SwitchState> one{SwitchState::One};
  EXPECT_EQ(twenty_questions(3, one).final_state().block.count(), 4u);
  EXPECT_EQ(twenty_questions(3, {}).final_state().block.count(), 8u);
  EXPECT_TRUE(twenty_questions(3, {}).final_state().partition.is_indiscrete());
  const std::vector<SwitchState> many(4, SwitchState::Zero);
  EXPECT_EQ(code_of([&] { twenty_questions(3, many); }), ErrorCode::IndexOutOfRange);
}

TEST(Compare, AgreesOnEveryTarget) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const VariantSpace space(k);
    for (Variant target = 0; target < space.size(); ++target) {
      const auto c = compare_mechanisms(k, target, 1.0);
      ASSERT_TRUE(c.agreement) << k << " " << target;
      ASSERT_EQ(c.selection.final_state().survivors(), std::vector<Variant>{target});
      ASSERT_EQ(consistent_block(c.generative.final_state()).elements(),
                std::vector<std::size_t>{target});
    }
  }
}

TEST(Compare, SmallestCaseAndPreconditions) {
  const auto c = compare_mechanisms(1, 1, 1.0);
  EXPECT_TRUE(c.agreement);
  EXPECT_TRUE(c.selection.final_state().extinct[0]);
  EXPECT_EQ(c.generative.steps.size(), 2u);
  EXPECT_EQ(code_of([] { compare_mechanisms(3, 2, 0.0); }), ErrorCode::InvalidFitness);
  EXPECT_EQ(code_of([] { compare_mechanisms(3, 8, 1.0); }), ErrorCode::IndexOutOfRange);
}

TEST(Schemes, DualAndOpposite) {
  EXPECT_EQ(dual(Scheme::Selectionist), Scheme::Identification);
  EXPECT_EQ(opposite(Scheme::Identification), Scheme::Generative);
  EXPECT_EQ(opposite(Scheme::Selectionist), Scheme::Creationist);
  EXPECT_EQ(dual(opposite(Scheme::Selectionist)), Scheme::Generative);
  for (const auto& s : scheme_relations()) {
    EXPECT_EQ(dual(opposite(s.scheme)), opposite(dual(s.scheme)));
    EXPECT_EQ(dual(dual(s.scheme)), s.scheme);
    EXPECT_EQ(opposite(opposite(s.scheme)), s.scheme);
    EXPECT_NE(dual(s.scheme), opposite(s.scheme));
  }
  EXPECT_EQ(scheme_relations().size(), 4u);
  EXPECT_EQ(info(Scheme::Generative).arrow, "𝟎→π");
}

TEST(TraceJson, GenerativeShape) {
  const std::vector<SetSwitchEvent> events{{1, SwitchState::Zero}};
  const auto j = to_json(run_generative(2, events));
  EXPECT_EQ(j.dump(),
            R"({"mechanism":"generative","k":2,"n":4,"steps":[)"
            R"({"index":0,"event":null,"state":{"switches":"NN","block":["00","01","10","11"],"block_size":4}},)"
            R"({"index":1,"event":{"type":"set_switch","switch":1,"value":0,"option":"left"},)"
            R"("state":{"switches":"N0","block":["00","10"],"block_size":2}}],)"
            R"("final":{"switches":"N0","block":["00","10"],"block_size":2}})");
}

}  // namespace
}  // namespace partlogic::mech
