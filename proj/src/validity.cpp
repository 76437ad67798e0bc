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

#include "partlogic/validity.hpp"

#include <atomic>
#include <functional>
#include <limits>
#include <thread>

#include "partlogic/error.hpp"
#include "partlogic/lattice.hpp"

namespace partlogic {

namespace {

using Index = std::uint64_t;
constexpr Index kChunk = 64;

/// Smallest index in [0, total) for which `fails` holds. The answer does not
/// depend on `threads`: workers claim chunks in ascending order and stop once
/// their chunk starts past the best failure seen so far.
std::optional<Index> first_failure(Index total, unsigned threads,
                                   const std::function<bool(Index)>& fails) {
  if (threads <= 1 || total <= kChunk) {
    for (Index i = 0; i < total; ++i) {
      if (fails(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<Index> next_chunk{0};
  std::atomic<Index> best{total};
  auto worker = [&] {
    for (;;) {
      const Index start = next_chunk.fetch_add(1) * kChunk;
      if (start >= best.load() || start >= total) return;
      const Index end = std::min(total, start + kChunk);
      for (Index i = start; i < end && i < best.load(); ++i) {
        if (fails(i)) {
          Index seen = best.load();
          while (i < seen && !best.compare_exchange_weak(seen, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  const Index found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

/// base^exp, or nullopt past `cap`.
std::optional<Index> bounded_power(Index base, std::size_t exp, Index cap) {
  Index out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return std::nullopt;
    out *= base;
  }
  if (out > cap) return std::nullopt;
  return out;
}

std::vector<std::string> sorted_variables(const Formula& f) {
  const auto vars = f.variables();
  return {vars.begin(), vars.end()};
}

}  // namespace

Verdict truth_table_tautology(const Formula& f, const Limits& limits) {
  const auto vars = sorted_variables(f);
  if (vars.size() > limits.max_truth_table_vars || vars.size() >= 63) {
    throw Error(ErrorCode::TooManyVariables,
                "formula has " + std::to_string(vars.size()) + " variables, cap is " +
                    std::to_string(limits.max_truth_table_vars));
  }
  const auto v = vars.size();
  const Index total = Index{1} << v;
  auto assignment_of = [&](Index idx) {
    std::map<std::string, bool, std::less<>> a;
    for (std::size_t j = 0; j < v; ++j) a[vars[j]] = (idx >> (v - 1 - j)) & 1u;
    return a;
  };
  const auto failure = first_failure(total, limits.threads, [&](Index idx) {
    return !eval_truth(f, assignment_of(idx));
  });

  Verdict verdict;
  verdict.logic = Logic::TruthTable;
  verdict.n_min = verdict.n_max = 1;
  verdict.valid = !failure;
  verdict.assignments_checked = failure ? *failure + 1 : total;
  if (failure) {
    const auto a = assignment_of(*failure);
    Counterexample cx;
    cx.n = 1;
    for (const auto& name : vars) cx.assignment.emplace_back(name, a.at(name));
    cx.value = eval_truth(f, a);
    verdict.counterexample = std::move(cx);
  }
  return verdict;
}

Verdict subset_valid(const Formula& f, std::size_t n_max, const Limits& limits) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  const auto vars = sorted_variables(f);
  const auto v = vars.size();
  if (v > limits.max_truth_table_vars) {
    throw Error(ErrorCode::TooManyVariables,
                "formula has " + std::to_string(v) + " variables, cap is " +
                    std::to_string(limits.max_truth_table_vars));
  }
  if (n_max > limits.max_relation_n || n_max >= 63) {
    throw Error(ErrorCode::ResourceLimit, "subset search on n=" + std::to_string(n_max) +
                                              " exceeds cap n<=" +
                                              std::to_string(limits.max_relation_n));
  }
  const auto budget_total = bounded_power(Index{1} << n_max, v, limits.subset_assignment_budget);
  if (!budget_total) {
    throw Error(ErrorCode::ResourceLimit,
                "subset search at n=" + std::to_string(n_max) + " with " + std::to_string(v) +
                    " variables exceeds the budget of " +
                    std::to_string(limits.subset_assignment_budget) + " assignments");
  }

  Verdict verdict;
  verdict.logic = Logic::Subset;
  verdict.n_min = 1;
  verdict.valid = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Index per_var = Index{1} << n;
    const Index total = *bounded_power(per_var, v, std::numeric_limits<Index>::max());
    auto assignment_of = [&](Index idx) {
      SubsetAssignment a;
      a.n = n;
      for (std::size_t j = 0; j < v; ++j) {
        const Index mask = (idx >> (n * (v - 1 - j))) & (per_var - 1);
        Subset s(n);
        for (std::size_t u = 0; u < n; ++u) {
          if ((mask >> u) & 1u) s.insert(u);
        }
        a.values.emplace(vars[j], std::move(s));
      }
      return a;
    };
    const auto full = Subset::full(n);
    const auto failure = first_failure(total, limits.threads, [&](Index idx) {
      return eval_subset(f, assignment_of(idx)) != full;
    });
    verdict.n_max = n;
    if (failure) {
      verdict.valid = false;
      verdict.assignments_checked += *failure + 1;
      const auto a = assignment_of(*failure);
      Counterexample cx;
      cx.n = n;
      for (const auto& [name, value] : a.values) cx.assignment.emplace_back(name, value);
      cx.value = eval_subset(f, a);
      verdict.counterexample = std::move(cx);
      return verdict;
    }
    verdict.assignments_checked += total;
  }
  return verdict;
}

Verdict partition_tautology(const Formula& f, std::size_t n_max, const Limits& limits) {
  if (n_max < 2) {
    throw Error(ErrorCode::UniverseTooSmall,
                "partition validity needs n_max >= 2, got " + std::to_string(n_max));
  }
  if (n_max > limits.max_relation_n || n_max > limits.max_lattice_n) {
    throw Error(ErrorCode::ResourceLimit,
                "partition search on n=" + std::to_string(n_max) + " exceeds cap n<=" +
                    std::to_string(std::min(limits.max_relation_n, limits.max_lattice_n)));
  }
  const auto vars = sorted_variables(f);
  const auto v = vars.size();
  if (!bounded_power(bell_number(n_max), v, limits.partition_assignment_budget)) {
    const auto needed = bounded_power(bell_number(n_max), v, std::numeric_limits<Index>::max());
    throw Error(ErrorCode::ResourceLimit,
                "partition search needs " + (needed ? std::to_string(*needed) : "> 2^64") +
                    " assignments at n=" + std::to_string(n_max) + " with " +
                    std::to_string(v) + " variables, budget is " +
                    std::to_string(limits.partition_assignment_budget));
  }

  Verdict verdict;
  verdict.logic = Logic::Partition;
  verdict.n_min = 2;
  verdict.valid = true;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto parts = enumerate_partitions(n, limits);
    const Index base = parts.size();
    const Index total = *bounded_power(base, v, std::numeric_limits<Index>::max());
    auto assignment_of = [&](Index idx) {
      PartitionAssignment a;
      a.n = n;
      for (std::size_t j = v; j-- > 0;) {
        a.values.emplace(vars[j], parts[idx % base]);
        idx /= base;
      }
      return a;
    };
    const auto top = Partition::discrete(n);
    const auto failure = first_failure(total, limits.threads, [&](Index idx) {
      return eval_partition(f, assignment_of(idx)) != top;
    });
    verdict.n_max = n;
    if (failure) {
      verdict.valid = false;
      verdict.assignments_checked += *failure + 1;
      const auto a = assignment_of(*failure);
      Counterexample cx;
      cx.n = n;
      for (const auto& [name, value] : a.values) cx.assignment.emplace_back(name, value);
      cx.value = eval_partition(f, a);
      verdict.counterexample = std::move(cx);
      return verdict;
    }
    verdict.assignments_checked += total;
  }
  return verdict;
}

}  // namespace partlogic
