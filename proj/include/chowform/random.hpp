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

#include <cstdint>
#include <random>
#include <vector>

#include "chowform/rational.hpp"

namespace chowform {

using Rng = std::mt19937_64;

/// Random integers and rationals with entries bounded by 10 in absolute value.
inline constexpr int kSampleBound = 10;

/// Bounded resampling budget for genericity failures.
inline constexpr int kDefaultRetries = 32;

/// Independent stream for trial `trial` of a run seeded with `seed`, so a
/// trial's samples do not depend on which other trials ran or in what order.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    0x63686f77u};
  return Rng(seq);
}

inline int random_int(Rng& rng, int lo = -kSampleBound, int hi = kSampleBound) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Numerator in [-10, 10], denominator in [1, 10].
inline Rational random_rational(Rng& rng) {
  const int num = random_int(rng);
  const int den = random_int(rng, 1, kSampleBound);
  return Rational(num, den);
}

inline std::vector<Rational> random_integer_vector(Rng& rng, int size) {
  std::vector<Rational> v(size);
  for (auto& x : v) x = random_int(rng);
  return v;
}

inline std::vector<Rational> random_rational_vector(Rng& rng, int size) {
  std::vector<Rational> v(size);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

}  // namespace chowform
