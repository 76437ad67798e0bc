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

#include "partlogic/lattice.hpp"

#include <algorithm>
#include <string>

#include "partlogic/error.hpp"

namespace partlogic {

namespace {

void check_lattice_size(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  if (n > limits.max_lattice_n) {
    throw Error(ErrorCode::ResourceLimit,
                "lattice enumeration on n=" + std::to_string(n) + " exceeds cap n<=" +
                    std::to_string(limits.max_lattice_n));
  }
}

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) {
    throw Error(ErrorCode::ResourceLimit,
                "Bell(" + std::to_string(n) + ") does not fit in 64 bits");
  }
  // Bell triangle: each row starts with the last entry of the previous one.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

PartitionEnumerator::PartitionEnumerator(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "universe must be nonempty");
  reset();
}

void PartitionEnumerator::reset() {
  rgs_.assign(n_, 0);
  prefix_max_.assign(n_, 0);
  started_ = false;
  done_ = false;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition::from_rgs(rgs_);
  }
  // Rightmost position that may still grow; everything after it resets to 0.
  std::size_t i = n_;
  while (i-- > 1) {
    if (rgs_[i] <= prefix_max_[i - 1]) break;
  }
  if (i == 0) {
    done_ = true;
    return std::nullopt;
  }
  ++rgs_[i];
  prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
  for (std::size_t j = i + 1; j < n_; ++j) {
    rgs_[j] = 0;
    prefix_max_[j] = prefix_max_[i];
  }
  return Partition::from_rgs(rgs_);
}

std::vector<Partition> enumerate_partitions(std::size_t n, const Limits& limits) {
  check_lattice_size(n, limits);
  std::vector<Partition> out;
  out.reserve(bell_number(n));
  PartitionEnumerator it(n);
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<Subset> enumerate_subsets(std::size_t n, const Limits& limits) {
  check_lattice_size(n, limits);
  if (n >= 32) throw Error(ErrorCode::ResourceLimit, "subset lattice too large");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n);
    for (std::size_t u = 0; u < n; ++u) {
      if ((mask >> u) & 1u) s.insert(u);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CoverEdge> hasse_cover_edges(LatticeKind kind, std::size_t n,
                                         const Limits& limits) {
  check_lattice_size(n, limits);
  std::vector<CoverEdge> edges;
  if (kind == LatticeKind::Subset) {
    if (n >= 32) throw Error(ErrorCode::ResourceLimit, "subset lattice too large");
    const std::size_t size = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < size; ++mask) {
      for (std::size_t u = 0; u < n; ++u) {
        if (!((mask >> u) & 1u)) edges.push_back({mask, mask | (std::size_t{1} << u)});
      }
    }
  } else {
    // A partition covers exactly the partitions obtained by merging two of its blocks.
    const auto parts = enumerate_partitions(n, limits);
    for (std::size_t upper = 0; upper < parts.size(); ++upper) {
      const auto& q = parts[upper];
      const auto rgs = q.rgs();
      for (std::uint32_t a = 0; a < q.block_count(); ++a) {
        for (std::uint32_t b = a + 1; b < q.block_count(); ++b) {
          std::vector<std::size_t> labels(rgs.begin(), rgs.end());
          for (auto& l : labels) {
            if (l == b) l = a;
          }
          const auto merged = Partition::from_labels(labels);
          const auto it = std::lower_bound(parts.begin(), parts.end(), merged);
          edges.push_back({static_cast<std::size_t>(it - parts.begin()), upper});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace partlogic
