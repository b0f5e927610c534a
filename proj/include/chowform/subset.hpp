// Copyright 2026 The chowform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Subsets of the factor set {0, ..., k-1} encoded as bitmasks.
//
// Every subset-quantified check in this library is exhaustive over all 2^k
// subsets (and some over all pairs, 4^k), so k is capped at kMaxFactors.
// In practice anything past k ~ 12 is slow.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chowform/error.hpp"

namespace chowform {

using SubsetMask = std::uint32_t;

inline constexpr int kMaxFactors = 24;

constexpr SubsetMask full_set(int k) {
  return k == 0 ? 0u : (~SubsetMask{0} >> (32 - k));
}

constexpr bool contains(SubsetMask s, int i) { return (s >> i) & 1u; }

constexpr bool is_subset(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

constexpr int cardinality(SubsetMask s) { return std::popcount(s); }

/// Sum of values[i] over i in s.
inline long long sum_over(SubsetMask s, std::span<const int> values) {
  long long total = 0;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (contains(s, i)) total += values[i];
  }
  return total;
}

/// 0-based member indices in increasing order.
inline std::vector<int> members(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i);
  }
  return out;
}

/// 1-based sorted index list, the external representation.
inline std::vector<int> to_one_based(SubsetMask s) {
  std::vector<int> out = members(s);
  for (int& i : out) ++i;
  return out;
}

/// Parses a 1-based index list. Indices must be strictly increasing and
/// within 1..k.
inline SubsetMask from_one_based(std::span<const int> indices, int k) {
  SubsetMask s = 0;
  int prev = 0;
  for (int idx : indices) {
    detail::require(idx >= 1 && idx <= k,
                    "subset index " + std::to_string(idx) + " outside 1.." +
                        std::to_string(k));
    detail::require(idx > prev, "subset indices must be sorted and distinct");
    s |= SubsetMask{1} << (idx - 1);
    prev = idx;
  }
  return s;
}

}  // namespace chowform
