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

#include "partlogic/subset.hpp"

#include <bit>
#include <string>

#include "partlogic/error.hpp"

namespace partlogic {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Subset::Subset(std::size_t n) : n_(n), words_(word_count(n), 0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
}

Subset Subset::full(std::size_t n) {
  Subset s(n);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_padding();
  return s;
}

Subset Subset::of(std::size_t n, std::span<const std::size_t> members) {
  Subset s(n);
  for (auto u : members) s.insert(u);
  return s;
}

Subset Subset::of(std::size_t n, std::initializer_list<std::size_t> members) {
  return of(n, std::span<const std::size_t>(members.begin(), members.size()));
}

bool Subset::contains(std::size_t u) const {
  if (u >= n_) return false;
  return (words_[u / 64] >> (u % 64)) & 1u;
}

void Subset::insert(std::size_t u) {
  if (u >= n_) {
    throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(u) +
                                                  " outside universe of size " +
                                                  std::to_string(n_));
  }
  words_[u / 64] |= std::uint64_t{1} << (u % 64);
}

void Subset::erase(std::size_t u) {
  if (u < n_) words_[u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (contains(u)) out.push_back(u);
  }
  return out;
}

Subset Subset::complement() const {
  Subset s(*this);
  for (auto& w : s.words_) w = ~w;
  s.clear_padding();
  return s;
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

Subset operator|(const Subset& a, const Subset& b) {
  a.check_same_universe(b);
  Subset s(a);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] |= b.words_[i];
  return s;
}

Subset operator&(const Subset& a, const Subset& b) {
  a.check_same_universe(b);
  Subset s(a);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] &= b.words_[i];
  return s;
}

Subset operator-(const Subset& a, const Subset& b) {
  a.check_same_universe(b);
  Subset s(a);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] &= ~b.words_[i];
  return s;
}

void Subset::check_same_universe(const Subset& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorCode::UniverseMismatch, "subsets of universes of size " +
                                                 std::to_string(n_) + " and " +
                                                 std::to_string(other.n_));
  }
}

void Subset::clear_padding() noexcept {
  if (n_ % 64) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

}  // namespace partlogic
