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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partlogic/limits.hpp"
#include "partlogic/partition.hpp"
#include "partlogic/relation.hpp"
#include "partlogic/subset.hpp"

namespace partlogic::mech {

/// A variant is a k-digit binary number b_k...b_2 b_1. Bit (i-1) of the integer
/// holds digit b_i, so switch 1 controls the rightmost digit and the variant
/// "010" is the integer 2. Variants double as elements of the 2^k universe.
using Variant = std::uint32_t;

constexpr std::size_t kMaxSwitches = 20;

class VariantSpace {
 public:
  /// Throws IndexOutOfRange unless 1 <= k <= kMaxSwitches.
  explicit VariantSpace(std::size_t k);

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return std::size_t{1} << k_; }
  /// Digit b_i of v, 1 <= i <= k.
  unsigned digit(Variant v, std::size_t i) const;
  /// "b_k...b_1".
  std::string render(Variant v) const;
  /// Inverse of render; throws InvalidFormat on wrong length or non-binary digits.
  Variant parse(std::string_view bits) const;

 private:
  std::size_t k_;
};

/// Neutral is the unset position; Zero is the Left option, One the Right option.
enum class SwitchState { Neutral, Zero, One };

char to_char(SwitchState s) noexcept;  // 'N', '0', '1'

class SwitchBank {
 public:
  /// All switches in Neutral (the initial state S0).
  explicit SwitchBank(std::size_t k);

  std::size_t k() const noexcept { return states_.size(); }
  /// Switch i, 1 <= i <= k.
  SwitchState state(std::size_t i) const;
  std::size_t set_count() const noexcept;

  /// Copy with switch i set to `value` (Zero or One). Throws IndexOutOfRange,
  /// InvalidArgument for Neutral, AlreadySet unless `overwrite`.
  SwitchBank set(std::size_t i, SwitchState value, bool overwrite = false) const;

  /// Switch states as text, switch k first: "N1N" means b_2 = 1.
  std::string render() const;

  friend bool operator==(const SwitchBank&, const SwitchBank&) = default;

 private:
  std::vector<SwitchState> states_;  // index i-1
};

/// Variants agreeing with every set switch. All-Neutral gives the whole space.
Subset consistent_block(const SwitchBank& bank);

/// Partition of the 2^k variants made by the set switches: two variants share
/// a block iff they agree on every set digit.
Partition induced_partition(const SwitchBank& bank);

/// The two-block split of the 2^k variants by digit b_i.
/// Throws IndexOutOfRange, ResourceLimit (2^k above limits.max_universe).
Partition switch_partition(std::size_t k, std::size_t i, const Limits& limits = {});

class Fitness {
 public:
  /// Scores indexed by variant. Throws NonPositiveFitness, InvalidArgument.
  Fitness(std::size_t k, std::vector<double> scores);

  /// 1 + margin at `target`, 1 elsewhere. Throws InvalidFitness if margin <= 0.
  static Fitness peaked(std::size_t k, Variant target, double margin);
  /// Lines of "variant score"; '#' starts a comment. Unlisted variants and
  /// duplicates are InvalidFormat errors.
  static Fitness parse(std::size_t k, std::string_view text);

  std::size_t k() const noexcept { return k_; }
  double score(Variant v) const { return scores_.at(v); }
  std::span<const double> scores() const noexcept { return scores_; }
  /// Variants attaining the maximum score, ascending.
  std::vector<Variant> argmax() const;

 private:
  std::size_t k_;
  std::vector<double> scores_;
};

/// Weights over all variants; extinct variants hold weight 0 forever.
struct SelectionState {
  std::vector<double> weights;
  std::vector<bool> extinct;

  std::vector<Variant> survivors() const;
  friend bool operator==(const SelectionState&, const SelectionState&) = default;
};

/// One round of differential amplification.
struct AmplifyEvent {
  friend bool operator==(const AmplifyEvent&, const AmplifyEvent&) = default;
};

struct SetSwitchEvent {
  std::size_t index = 1;
  SwitchState value = SwitchState::Zero;
  friend bool operator==(const SetSwitchEvent&, const SetSwitchEvent&) = default;
};

struct IdentifyEvent {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const IdentifyEvent&, const IdentifyEvent&) = default;
};

struct CreateEvent {
  std::size_t element = 0;
  /// Set when the element was already present (the step is a no-op).
  bool duplicate = false;
  friend bool operator==(const CreateEvent&, const CreateEvent&) = default;
};

struct AnswerEvent {
  std::size_t index = 1;
  SwitchState side = SwitchState::Zero;
  friend bool operator==(const AnswerEvent&, const AnswerEvent&) = default;
};

struct QuestionState {
  Partition partition;  // join of the switch partitions asked so far
  Subset block;         // designated block of `partition`
  friend bool operator==(const QuestionState&, const QuestionState&) = default;
};

template <class State, class Event>
struct TraceStep {
  std::size_t index = 0;
  std::optional<Event> event;  // empty for the initial entry S0
  State state;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Ordered record from the initial state S0 (steps.front()) to the steady state
/// S_s (steps.back()).
template <class State, class Event>
struct Trace {
  using Step = TraceStep<State, Event>;

  std::vector<Step> steps;

  const State& initial() const { return steps.front().state; }
  const State& final_state() const { return steps.back().state; }
  std::vector<Event> events() const {
    std::vector<Event> out;
    for (const auto& s : steps) {
      if (s.event) out.push_back(*s.event);
    }
    return out;
  }
  friend bool operator==(const Trace&, const Trace&) = default;
};

using SelectionTrace = Trace<SelectionState, AmplifyEvent>;
using GenerativeTrace = Trace<SwitchBank, SetSwitchEvent>;
using IdentificationTrace = Trace<Partition, IdentifyEvent>;
using CreationTrace = Trace<Subset, CreateEvent>;
using QuestionTrace = Trace<QuestionState, AnswerEvent>;

// Single transitions. Each runner below is a fold of one of these over its
// inputs, and the replay functions fold them again over a trace's events.

SelectionState initial_selection(std::size_t k);
/// Multiply by fitness, renormalize, extinguish survivors below `threshold`,
/// renormalize again.
SelectionState amplify(const SelectionState& s, const Fitness& fitness, double threshold);
SwitchBank apply(const SwitchBank& bank, const SetSwitchEvent& e, bool overwrite = false);
Partition apply(const Partition& p, const IdentifyEvent& e);
Subset apply(const Subset& s, const CreateEvent& e);
QuestionState apply(const QuestionState& s, const AnswerEvent& e);

struct SelectionOptions {
  double extinction_threshold = 0.0;  // must lie in (0, 1/2^k)
  std::size_t max_steps = 1000;
};

/// Selectionist scheme U -> S. Starts uniform over all 2^k variants, amplifies
/// until the survivors are exactly the fitness argmax or max_steps is reached.
/// Throws InvalidThreshold, InvalidArgument (max_steps = 0).
SelectionTrace run_selectionist(const Fitness& fitness, const SelectionOptions& options);

/// Generative scheme 0 -> pi with a designated block: sets switches in order
/// from all-Neutral. Throws AlreadySet (unless overwrite), IndexOutOfRange.
GenerativeTrace run_generative(std::size_t k, std::span<const SetSwitchEvent> experience,
                               bool overwrite = false);

/// Identification scheme 1 -> pi: merges from the discrete partition.
/// Throws ElementOutOfRange.
IdentificationTrace run_identification(std::size_t n, std::span<const ElementPair> pairs);
Partition identify(std::size_t n, std::span<const ElementPair> pairs);

/// Creationist scheme ∅ -> S. Throws ElementOutOfRange.
CreationTrace create(std::size_t n, std::span<const std::size_t> elements);

/// Answer j (0-based) designates side answers[j] of switch j+1. Throws
/// IndexOutOfRange when there are more answers than switches or a side is Neutral.
QuestionTrace twenty_questions(std::size_t k, std::span<const SwitchState> answers,
                               const Limits& limits = {});

SelectionTrace replay(const SelectionTrace& t, const Fitness& fitness, double threshold);
GenerativeTrace replay(const GenerativeTrace& t, bool overwrite = false);
IdentificationTrace replay(const IdentificationTrace& t);
CreationTrace replay(const CreationTrace& t);
QuestionTrace replay(const QuestionTrace& t);

/// Default extinction threshold for a 2^k space: 1 / (100 * 2^k).
double default_threshold(std::size_t k);

struct Comparison {
  std::size_t k = 0;
  Variant target = 0;
  double margin = 0;
  double threshold = 0;
  SelectionTrace selection;
  GenerativeTrace generative;
  /// Both steady states equal {target}.
  bool agreement = false;
};

/// Runs both mechanisms towards `target`: a fitness of 1 + margin at the target
/// and 1 elsewhere, and an experience stream spelling the target's digits from
/// switch 1 upward. Throws InvalidFitness (margin <= 0), IndexOutOfRange.
Comparison compare_mechanisms(std::size_t k, Variant target, double margin,
                              const Limits& limits = {});

enum class Scheme { Selectionist, Creationist, Identification, Generative };

struct SchemeInfo {
  Scheme scheme;
  std::string_view name;
  std::string_view from;   // universal the scheme starts at
  std::string_view to;     // particular it reaches
  std::string_view arrow;  // e.g. "U→S"
};

/// Elements <-> distinctions.
Scheme dual(Scheme s) noexcept;
/// All <-> none.
Scheme opposite(Scheme s) noexcept;
std::span<const SchemeInfo> scheme_relations() noexcept;
const SchemeInfo& info(Scheme s) noexcept;

}  // namespace partlogic::mech
