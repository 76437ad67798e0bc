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

#include "partlogic/mechanisms.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "partlogic/error.hpp"

namespace partlogic::mech {

namespace {

void check_switch_index(std::size_t k, std::size_t i) {
  if (i < 1 || i > k) {
    throw Error(ErrorCode::IndexOutOfRange, "switch index " + std::to_string(i) +
                                                " outside 1.." + std::to_string(k));
  }
}

void check_switch_count(std::size_t k) {
  if (k < 1 || k > kMaxSwitches) {
    throw Error(ErrorCode::IndexOutOfRange, "switch count " + std::to_string(k) +
                                                " outside 1.." + std::to_string(kMaxSwitches));
  }
}

void check_space_size(std::size_t k, const Limits& limits) {
  check_switch_count(k);
  if ((std::size_t{1} << k) > limits.max_universe) {
    throw Error(ErrorCode::ResourceLimit, "2^" + std::to_string(k) +
                                              " variants exceed the universe cap of " +
                                              std::to_string(limits.max_universe));
  }
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

VariantSpace::VariantSpace(std::size_t k) : k_(k) { check_switch_count(k); }

unsigned VariantSpace::digit(Variant v, std::size_t i) const {
  check_switch_index(k_, i);
  return (v >> (i - 1)) & 1u;
}

std::string VariantSpace::render(Variant v) const {
  std::string out;
  for (std::size_t i = k_; i >= 1; --i) out += digit(v, i) ? '1' : '0';
  return out;
}

Variant VariantSpace::parse(std::string_view bits) const {
  if (bits.size() != k_) {
    throw Error(ErrorCode::InvalidFormat, "variant '" + std::string(bits) + "' must have " +
                                              std::to_string(k_) + " binary digits");
  }
  Variant v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidFormat,
                  "variant '" + std::string(bits) + "' is not a binary string");
    }
    v = (v << 1) | static_cast<Variant>(c - '0');
  }
  return v;
}

char to_char(SwitchState s) noexcept {
  switch (s) {
    case SwitchState::Zero: return '0';
    case SwitchState::One: return '1';
    default: return 'N';
  }
}

SwitchBank::SwitchBank(std::size_t k) : states_(k, SwitchState::Neutral) {
  check_switch_count(k);
}

SwitchState SwitchBank::state(std::size_t i) const {
  check_switch_index(k(), i);
  return states_[i - 1];
}

std::size_t SwitchBank::set_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(states_.begin(), states_.end(),
                    [](SwitchState s) { return s != SwitchState::Neutral; }));
}

SwitchBank SwitchBank::set(std::size_t i, SwitchState value, bool overwrite) const {
  check_switch_index(k(), i);
  if (value == SwitchState::Neutral) {
    throw Error(ErrorCode::InvalidArgument, "a switch can only be set to 0 or 1");
  }
  if (states_[i - 1] != SwitchState::Neutral && !overwrite) {
    throw Error(ErrorCode::AlreadySet, "switch " + std::to_string(i) + " is already set to " +
                                           std::string(1, to_char(states_[i - 1])));
  }
  SwitchBank out(*this);
  out.states_[i - 1] = value;
  return out;
}

std::string SwitchBank::render() const {
  std::string out;
  for (auto it = states_.rbegin(); it != states_.rend(); ++it) out += to_char(*it);
  return out;
}

Subset consistent_block(const SwitchBank& bank) {
  const VariantSpace space(bank.k());
  Subset block(space.size());
  for (Variant v = 0; v < space.size(); ++v) {
    bool agrees = true;
    for (std::size_t i = 1; i <= bank.k() && agrees; ++i) {
      const auto s = bank.state(i);
      if (s != SwitchState::Neutral) agrees = space.digit(v, i) == (s == SwitchState::One);
    }
    if (agrees) block.insert(v);
  }
  return block;
}

Partition induced_partition(const SwitchBank& bank) {
  const VariantSpace space(bank.k());
  Variant mask = 0;
  for (std::size_t i = 1; i <= bank.k(); ++i) {
    if (bank.state(i) != SwitchState::Neutral) mask |= Variant{1} << (i - 1);
  }
  std::vector<std::size_t> labels(space.size());
  for (Variant v = 0; v < space.size(); ++v) labels[v] = v & mask;
  return Partition::from_labels(labels);
}

Partition switch_partition(std::size_t k, std::size_t i, const Limits& limits) {
  check_space_size(k, limits);
  check_switch_index(k, i);
  const VariantSpace space(k);
  std::vector<std::size_t> labels(space.size());
  for (Variant v = 0; v < space.size(); ++v) labels[v] = space.digit(v, i);
  return Partition::from_labels(labels);
}

// Fitness

Fitness::Fitness(std::size_t k, std::vector<double> scores) : k_(k), scores_(std::move(scores)) {
  const VariantSpace space(k);
  if (scores_.size() != space.size()) {
    throw Error(ErrorCode::InvalidArgument, "fitness needs " + std::to_string(space.size()) +
                                                " scores, got " +
                                                std::to_string(scores_.size()));
  }
  for (Variant v = 0; v < scores_.size(); ++v) {
    if (!(scores_[v] > 0) || !std::isfinite(scores_[v])) {
      throw Error(ErrorCode::NonPositiveFitness, "fitness of " + space.render(v) +
                                                     " is " + std::to_string(scores_[v]) +
                                                     ", must be positive");
    }
  }
}

Fitness Fitness::peaked(std::size_t k, Variant target, double margin) {
  const VariantSpace space(k);
  if (!(margin > 0) || !std::isfinite(margin)) {
    throw Error(ErrorCode::InvalidFitness,
                "fitness margin must be positive, got " + std::to_string(margin));
  }
  if (target >= space.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "target variant outside the space");
  }
  std::vector<double> scores(space.size(), 1.0);
  scores[target] = 1.0 + margin;
  return Fitness(k, std::move(scores));
}

Fitness Fitness::parse(std::size_t k, std::string_view text) {
  const VariantSpace space(k);
  std::vector<double> scores(space.size(), 0.0);
  std::vector<bool> seen(space.size(), false);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw Error(ErrorCode::InvalidFormat,
                  "fitness line " + std::to_string(line_no) + ": expected 'variant score'");
    }
    const auto v = space.parse(line.substr(0, gap));
    const auto score_text = trim(line.substr(gap));
    double score = 0;
    auto [ptr, ec] = std::from_chars(score_text.data(), score_text.data() + score_text.size(), score);
    if (ec != std::errc() || ptr != score_text.data() + score_text.size()) {
      throw Error(ErrorCode::InvalidFormat, "fitness line " + std::to_string(line_no) +
                                                ": bad score '" + std::string(score_text) + "'");
    }
    if (seen[v]) {
      throw Error(ErrorCode::InvalidFormat, "fitness line " + std::to_string(line_no) +
                                                ": variant " + space.render(v) + " listed twice");
    }
    seen[v] = true;
    scores[v] = score;
  }
  for (Variant v = 0; v < space.size(); ++v) {
    if (!seen[v]) {
      throw Error(ErrorCode::InvalidFormat, "fitness table has no score for " + space.render(v));
    }
  }
  return Fitness(k, std::move(scores));
}

std::vector<Variant> Fitness::argmax() const {
  const double best = *std::max_element(scores_.begin(), scores_.end());
  std::vector<Variant> out;
  for (Variant v = 0; v < scores_.size(); ++v) {
    if (scores_[v] == best) out.push_back(v);
  }
  return out;
}

// Transitions

std::vector<Variant> SelectionState::survivors() const {
  std::vector<Variant> out;
  for (Variant v = 0; v < extinct.size(); ++v) {
    if (!extinct[v]) out.push_back(v);
  }
  return out;
}

SelectionState initial_selection(std::size_t k) {
  const VariantSpace space(k);
  SelectionState s;
  s.weights.assign(space.size(), 1.0 / static_cast<double>(space.size()));
  s.extinct.assign(space.size(), false);
  return s;
}

SelectionState amplify(const SelectionState& s, const Fitness& fitness, double threshold) {
  SelectionState out = s;
  auto normalize = [&] {
    double total = 0;
    for (std::size_t v = 0; v < out.weights.size(); ++v) {
      if (!out.extinct[v]) total += out.weights[v];
    }
    for (std::size_t v = 0; v < out.weights.size(); ++v) {
      if (!out.extinct[v]) out.weights[v] /= total;
    }
  };
  for (std::size_t v = 0; v < out.weights.size(); ++v) {
    if (!out.extinct[v]) out.weights[v] *= fitness.score(static_cast<Variant>(v));
  }
  normalize();
  for (std::size_t v = 0; v < out.weights.size(); ++v) {
    if (!out.extinct[v] && out.weights[v] < threshold) {
      out.extinct[v] = true;
      out.weights[v] = 0.0;
    }
  }
  normalize();
  return out;
}

SwitchBank apply(const SwitchBank& bank, const SetSwitchEvent& e, bool overwrite) {
  return bank.set(e.index, e.value, overwrite);
}

Partition apply(const Partition& p, const IdentifyEvent& e) {
  const auto n = p.universe_size();
  for (auto u : {e.first, e.second}) {
    if (u >= n) {
      throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(u) +
                                                    " outside universe of size " +
                                                    std::to_string(n));
    }
  }
  const auto a = p.block_of(e.first);
  const auto b = p.block_of(e.second);
  std::vector<std::size_t> labels(p.rgs().begin(), p.rgs().end());
  for (auto& l : labels) {
    if (l == b) l = a;
  }
  return Partition::from_labels(labels);
}

Subset apply(const Subset& s, const CreateEvent& e) {
  Subset out = s;
  out.insert(e.element);
  return out;
}

QuestionState apply(const QuestionState& s, const AnswerEvent& e) {
  const auto size = s.block.universe_size();
  const auto k = static_cast<std::size_t>(std::countr_zero(size));
  check_switch_index(k, e.index);
  if (e.side == SwitchState::Neutral) {
    throw Error(ErrorCode::IndexOutOfRange, "an answer must designate side 0 or 1");
  }
  const VariantSpace space(k);
  QuestionState out{join(s.partition, switch_partition(k, e.index)), s.block};
  const unsigned want = e.side == SwitchState::One ? 1u : 0u;
  for (Variant v = 0; v < size; ++v) {
    if (space.digit(v, e.index) != want) out.block.erase(v);
  }
  return out;
}

// Runners

SelectionTrace run_selectionist(const Fitness& fitness, const SelectionOptions& options) {
  const VariantSpace space(fitness.k());
  const double limit = 1.0 / static_cast<double>(space.size());
  if (!(options.extinction_threshold > 0) || !(options.extinction_threshold < limit)) {
    throw Error(ErrorCode::InvalidThreshold,
                "extinction threshold must lie in (0, " + std::to_string(limit) + "), got " +
                    std::to_string(options.extinction_threshold));
  }
  if (options.max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be >= 1");

  const auto winners = fitness.argmax();
  SelectionTrace trace;
  trace.steps.push_back({0, std::nullopt, initial_selection(fitness.k())});
  for (std::size_t step = 1; step <= options.max_steps; ++step) {
    const auto& current = trace.steps.back().state;
    if (current.survivors() == winners) break;
    trace.steps.push_back(
        {step, AmplifyEvent{}, amplify(current, fitness, options.extinction_threshold)});
  }
  return trace;
}

GenerativeTrace run_generative(std::size_t k, std::span<const SetSwitchEvent> experience,
                               bool overwrite) {
  GenerativeTrace trace;
  trace.steps.push_back({0, std::nullopt, SwitchBank(k)});
  for (const auto& e : experience) {
    trace.steps.push_back(
        {trace.steps.size(), e, apply(trace.steps.back().state, e, overwrite)});
  }
  return trace;
}

IdentificationTrace run_identification(std::size_t n, std::span<const ElementPair> pairs) {
  IdentificationTrace trace;
  trace.steps.push_back({0, std::nullopt, Partition::discrete(n)});
  for (const auto& p : pairs) {
    const IdentifyEvent e{p.first, p.second};
    trace.steps.push_back({trace.steps.size(), e, apply(trace.steps.back().state, e)});
  }
  return trace;
}

Partition identify(std::size_t n, std::span<const ElementPair> pairs) {
  return run_identification(n, pairs).final_state();
}

CreationTrace create(std::size_t n, std::span<const std::size_t> elements) {
  CreationTrace trace;
  trace.steps.push_back({0, std::nullopt, Subset(n)});
  for (auto u : elements) {
    const auto& current = trace.steps.back().state;
    const CreateEvent e{u, current.contains(u)};
    trace.steps.push_back({trace.steps.size(), e, apply(current, e)});
  }
  return trace;
}

QuestionTrace twenty_questions(std::size_t k, std::span<const SwitchState> answers,
                               const Limits& limits) {
  check_space_size(k, limits);
  if (answers.size() > k) {
    throw Error(ErrorCode::IndexOutOfRange, std::to_string(answers.size()) +
                                                " answers for " + std::to_string(k) +
                                                " switches");
  }
  const auto size = std::size_t{1} << k;
  QuestionTrace trace;
  trace.steps.push_back({0, std::nullopt, QuestionState{Partition::indiscrete(size), Subset::full(size)}});
  for (std::size_t j = 0; j < answers.size(); ++j) {
    const AnswerEvent e{j + 1, answers[j]};
    trace.steps.push_back({trace.steps.size(), e, apply(trace.steps.back().state, e)});
  }
  return trace;
}

// Replay

namespace {

template <class TraceT, class Step>
TraceT fold(const TraceT& t, Step&& step) {
  TraceT out;
  if (t.steps.empty()) return out;
  out.steps.push_back({0, std::nullopt, t.steps.front().state});
  for (const auto& e : t.events()) {
    auto next = step(out.steps.back().state, e);
    out.steps.push_back({out.steps.size(), std::move(next.first), std::move(next.second)});
  }
  return out;
}

}  // namespace

SelectionTrace replay(const SelectionTrace& t, const Fitness& fitness, double threshold) {
  return fold(t, [&](const SelectionState& s, const AmplifyEvent& e) {
    return std::pair{e, amplify(s, fitness, threshold)};
  });
}

GenerativeTrace replay(const GenerativeTrace& t, bool overwrite) {
  return fold(t, [&](const SwitchBank& s, const SetSwitchEvent& e) {
    return std::pair{e, apply(s, e, overwrite)};
  });
}

IdentificationTrace replay(const IdentificationTrace& t) {
  return fold(t, [](const Partition& s, const IdentifyEvent& e) {
    return std::pair{e, apply(s, e)};
  });
}

CreationTrace replay(const CreationTrace& t) {
  return fold(t, [](const Subset& s, const CreateEvent& e) {
    const CreateEvent recomputed{e.element, s.contains(e.element)};
    return std::pair{recomputed, apply(s, recomputed)};
  });
}

QuestionTrace replay(const QuestionTrace& t) {
  return fold(t, [](const QuestionState& s, const AnswerEvent& e) {
    return std::pair{e, apply(s, e)};
  });
}

double default_threshold(std::size_t k) {
  const VariantSpace space(k);
  return 1.0 / (100.0 * static_cast<double>(space.size()));
}

Comparison compare_mechanisms(std::size_t k, Variant target, double margin,
                              const Limits& limits) {
  const VariantSpace space(k);
  if (target >= space.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "target variant outside the space of " +
                                                std::to_string(space.size()));
  }
  const auto fitness = Fitness::peaked(k, target, margin);

  Comparison c;
  c.k = k;
  c.target = target;
  c.margin = margin;
  c.threshold = default_threshold(k);
  c.selection = run_selectionist(fitness, {c.threshold, limits.max_steps});

  std::vector<SetSwitchEvent> experience;
  for (std::size_t i = 1; i <= k; ++i) {
    experience.push_back({i, space.digit(target, i) ? SwitchState::One : SwitchState::Zero});
  }
  c.generative = run_generative(k, experience);

  const auto selected = c.selection.final_state().survivors();
  const auto block = consistent_block(c.generative.final_state()).elements();
  c.agreement = selected == std::vector<Variant>{target} &&
                block == std::vector<std::size_t>{target};
  return c;
}

// Scheme relations

namespace {

constexpr SchemeInfo kSchemes[] = {
    {Scheme::Selectionist, "selectionist", "U", "S", "U→S"},
    {Scheme::Creationist, "creationist", "∅", "S", "∅→S"},
    {Scheme::Identification, "identification", "𝟏", "π", "𝟏→π"},
    {Scheme::Generative, "generative", "𝟎", "π", "𝟎→π"},
};

}  // namespace

Scheme dual(Scheme s) noexcept {
  switch (s) {
    case Scheme::Selectionist: return Scheme::Identification;
    case Scheme::Identification: return Scheme::Selectionist;
    case Scheme::Creationist: return Scheme::Generative;
    case Scheme::Generative: return Scheme::Creationist;
  }
  return s;
}

Scheme opposite(Scheme s) noexcept {
  switch (s) {
    case Scheme::Selectionist: return Scheme::Creationist;
    case Scheme::Creationist: return Scheme::Selectionist;
    case Scheme::Identification: return Scheme::Generative;
    case Scheme::Generative: return Scheme::Identification;
  }
  return s;
}

std::span<const SchemeInfo> scheme_relations() noexcept { return kSchemes; }

const SchemeInfo& info(Scheme s) noexcept { return kSchemes[static_cast<int>(s)]; }

}  // namespace partlogic::mech
