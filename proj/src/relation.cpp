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

#include "partlogic/relation.hpp"

#include <bit>

#include "partlogic/error.hpp"
#include "union_find.hpp"

namespace partlogic {

namespace {

std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::string EquivalenceViolation::describe() const {
  switch (axiom) {
    case Axiom::Reflexivity:
      return "not reflexive: missing " + pair_text(witness.first, witness.first);
    case Axiom::Symmetry:
      return "not symmetric: " + pair_text(witness.first, witness.second) +
             " present but " + pair_text(witness.second, witness.first) + " missing";
    case Axiom::Transitivity:
      return "not transitive: " + pair_text(witness.first, via) + " and " +
             pair_text(via, witness.second) + " present but " +
             pair_text(witness.first, witness.second) + " missing";
  }
  return "not an equivalence relation";
}

PairRelation::PairRelation(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
}

PairRelation PairRelation::full(std::size_t n) {
  PairRelation r(n);
  for (auto& w : r.bits_) w = ~std::uint64_t{0};
  r.clear_padding();
  return r;
}

PairRelation PairRelation::diagonal(std::size_t n) {
  PairRelation r(n);
  for (std::size_t u = 0; u < n; ++u) r.insert(u, u);
  return r;
}

PairRelation PairRelation::of(std::size_t n, std::span<const ElementPair> pairs) {
  PairRelation r(n);
  for (const auto& p : pairs) r.insert(p.first, p.second);
  return r;
}

bool PairRelation::contains(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  return (bits_[u * stride_ + v / 64] >> (v % 64)) & 1u;
}

void PairRelation::insert(std::size_t u, std::size_t v) {
  check_index(u, v);
  bits_[u * stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
}

void PairRelation::erase(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) return;
  bits_[u * stride_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t PairRelation::count() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PairRelation::empty() const noexcept {
  for (auto w : bits_) {
    if (w) return false;
  }
  return true;
}

std::vector<ElementPair> PairRelation::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (contains(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

PairRelation PairRelation::complement() const {
  PairRelation r(*this);
  for (auto& w : r.bits_) w = ~w;
  r.clear_padding();
  return r;
}

PairRelation PairRelation::symmetrized() const {
  PairRelation r(*this);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (contains(u, v)) r.insert(v, u);
    }
  }
  return r;
}

bool PairRelation::is_subset_of(const PairRelation& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

bool PairRelation::is_reflexive() const {
  for (std::size_t u = 0; u < n_; ++u) {
    if (!contains(u, u)) return false;
  }
  return true;
}

bool PairRelation::is_symmetric() const {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (contains(u, v) != contains(v, u)) return false;
    }
  }
  return true;
}

bool PairRelation::is_transitive() const {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!contains(u, v)) continue;
      // row(v) must be contained in row(u)
      for (std::size_t i = 0; i < stride_; ++i) {
        if (bits_[v * stride_ + i] & ~bits_[u * stride_ + i]) return false;
      }
    }
  }
  return true;
}

bool PairRelation::is_partition_relation() const { return complement().is_equivalence(); }

std::optional<EquivalenceViolation> PairRelation::find_equivalence_violation() const {
  using Axiom = EquivalenceViolation::Axiom;
  for (std::size_t u = 0; u < n_; ++u) {
    if (!contains(u, u)) return EquivalenceViolation{Axiom::Reflexivity, {u, u}};
  }
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (contains(u, v) && !contains(v, u)) {
        return EquivalenceViolation{Axiom::Symmetry, {u, v}};
      }
    }
  }
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!contains(u, v)) continue;
      for (std::size_t w = 0; w < n_; ++w) {
        if (contains(v, w) && !contains(u, w)) {
          return EquivalenceViolation{Axiom::Transitivity, {u, w}, v};
        }
      }
    }
  }
  return std::nullopt;
}

PairRelation operator|(const PairRelation& a, const PairRelation& b) {
  a.check_same_universe(b);
  PairRelation r(a);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] |= b.bits_[i];
  return r;
}

PairRelation operator&(const PairRelation& a, const PairRelation& b) {
  a.check_same_universe(b);
  PairRelation r(a);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] &= b.bits_[i];
  return r;
}

PairRelation operator-(const PairRelation& a, const PairRelation& b) {
  a.check_same_universe(b);
  PairRelation r(a);
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] &= ~b.bits_[i];
  return r;
}

void PairRelation::check_index(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) {
    throw Error(ErrorCode::ElementOutOfRange, "pair " + pair_text(u, v) +
                                                  " outside universe of size " +
                                                  std::to_string(n_));
  }
}

void PairRelation::check_same_universe(const PairRelation& other) const {
  if (n_ != other.n_) {
    throw Error(ErrorCode::UniverseMismatch, "relations on universes of size " +
                                                 std::to_string(n_) + " and " +
                                                 std::to_string(other.n_));
  }
}

void PairRelation::clear_padding() noexcept {
  if (n_ % 64 == 0) return;
  const auto mask = (std::uint64_t{1} << (n_ % 64)) - 1;
  for (std::size_t u = 0; u < n_; ++u) bits_[u * stride_ + stride_ - 1] &= mask;
}

PairRelation rst_closure(const PairRelation& s) {
  const auto n = s.universe_size();
  detail::UnionFind sets(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (s.contains(u, v)) sets.unite(u, v);
    }
  }
  const auto labels = sets.canonical_labels();
  PairRelation out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (labels[u] == labels[v]) out.insert(u, v);
    }
  }
  return out;
}

PairRelation interior(const PairRelation& s) { return rst_closure(s.complement()).complement(); }

}  // namespace partlogic
