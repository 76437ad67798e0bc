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
#include <initializer_list>
#include <span>
#include <vector>

namespace partlogic {

/// A subset of the universe {0, ..., n-1}, stored as a dense bitset.
class Subset {
 public:
  explicit Subset(std::size_t n);

  static Subset full(std::size_t n);
  static Subset of(std::size_t n, std::span<const std::size_t> members);
  static Subset of(std::size_t n, std::initializer_list<std::size_t> members);

  std::size_t universe_size() const noexcept { return n_; }
  bool contains(std::size_t u) const;
  void insert(std::size_t u);
  void erase(std::size_t u);

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<std::size_t> elements() const;

  Subset complement() const;
  bool is_subset_of(const Subset& other) const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) = default;

 private:
  void check_same_universe(const Subset& other) const;
  void clear_padding() noexcept;

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace partlogic
