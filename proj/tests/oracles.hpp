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

// Test-only reference computations and fixtures. These deliberately avoid
// the library's own algorithms (no elimination, no composition enumerator)
// so they can serve as independent checks.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "chowform/chowform.hpp"

namespace chowform::testing {

// --- fixtures -------------------------------------------------------------

/// delta of the multiview variety of k cameras with distinct centers:
/// 2 on singletons, 3 on every larger set.
inline RankFunction multiview_delta(int k) {
  std::vector<int> v(std::size_t{1} << k);
  for (SubsetMask s = 0; s < v.size(); ++s) {
    v[s] = std::min(3, 2 * cardinality(s));
  }
  return RankFunction(k, v);
}

inline SpaceSignature multiview_signature(int k) { return SpaceSignature(std::vector<int>(k, 2), 3); }

/// Graph of Frobenius on P^2 in characteristic p: p^2 t1^2 + p t1 t2 + t2^2.
inline Multidegree frobenius(int p) {
  Multidegree::Coefficients c;
  c[GammaVector{{2, 0}}] = p * p;
  c[GammaVector{{1, 1}}] = p;
  c[GammaVector{{0, 2}}] = 1;
  return Multidegree(SpaceSignature({2, 2}, 2), c, Multidegree::Tag::variety);
}

/// C_1 x C_2 in P^2 x P^2 for plane curves of degrees d1, d2.
inline Multidegree product_of_curves(int d1, int d2) {
  Multidegree::Coefficients c;
  c[GammaVector{{1, 1}}] = d1 * d2;
  return Multidegree(SpaceSignature({2, 2}, 2), c, Multidegree::Tag::variety);
}

inline RationalMatrix camera_with_translation(int tx, int ty, int tz) {
  return RationalMatrix::from_rows({{1, 0, 0, tx}, {0, 1, 0, ty}, {0, 0, 1, tz}});
}

/// [I | 0] and [I | (1,0,0)].
inline CameraConfiguration two_translated_cameras() {
  return CameraConfiguration({camera_with_translation(0, 0, 0), camera_with_translation(1, 0, 0)});
}

// --- independent oracles --------------------------------------------------

/// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const RationalMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Odometer over the whole box 0 <= gamma_i <= n_i, checking every defining
/// inequality of the support directly.
inline Support brute_force_support(const SpaceSignature& sig, const RankFunction& delta) {
  const int k = sig.k();
  Support out;
  std::vector<int> g(k, 0);
  while (true) {
    int dim = 0;
    for (int i = 0; i < k; ++i) dim += sig.n(i) - g[i];
    bool ok = dim == sig.r();
    for (SubsetMask s = 1; ok && s < full_set(k); ++s) {
      int lhs = 0;
      for (int i = 0; i < k; ++i) {
        if (contains(s, i)) lhs += sig.n(i) - g[i];
      }
      ok = lhs <= delta(s);
    }
    if (ok) out.insert(GammaVector{g});
    int i = 0;
    while (i < k && g[i] == sig.n(i)) g[i++] = 0;
    if (i == k) break;
    ++g[i];
  }
  return out;
}

/// All betas (in range, |beta| = r + 1) by odometer, lexicographic order.
inline std::vector<BetaVector> all_betas(const SpaceSignature& sig) {
  std::vector<BetaVector> out;
  const int k = sig.k();
  std::vector<int> b(k, 0);
  while (true) {
    if (std::accumulate(b.begin(), b.end(), 0) == sig.r() + 1) out.push_back(BetaVector{b});
    int i = k - 1;
    while (i >= 0 && b[i] == sig.n(i)) b[i--] = 0;
    if (i < 0) break;
    ++b[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Axiom check written from the definitions over all pairs (I, J).
inline bool is_polymatroid(const SpaceSignature& sig, const RankFunction& delta) {
  const SubsetMask full = full_set(sig.k());
  if (delta(0) != 0) return false;
  for (SubsetMask a = 0; a <= full; ++a) {
    if (delta(a) > sum_over(a, sig.dims())) return false;
    for (SubsetMask b = 0; b <= full; ++b) {
      if (is_subset(a, b) && delta(a) > delta(b)) return false;
      if (delta(a & b) + delta(a | b) > delta(a) + delta(b)) return false;
    }
  }
  return true;
}

/// Every valid rank function with the given n (k <= 3), any r. The search
/// uses only cheap necessary bounds and then filters by is_polymatroid.
inline void for_each_rank_function(const std::vector<int>& n,
                                   const std::function<void(const RankFunction&)>& visit) {
  const int k = static_cast<int>(n.size());
  const SubsetMask full = full_set(k);
  std::vector<int> v(full + 1, 0);
  // Assign values in increasing mask order; bound each by monotonicity
  // below and by the sum over a split into a singleton plus the rest above.
  std::function<void(SubsetMask)> rec = [&](SubsetMask s) {
    if (s > full) {
      RankFunction delta(k, v);
      if (is_polymatroid(SpaceSignature(n, delta.full()), delta)) visit(delta);
      return;
    }
    int lo = 0;
    int hi = static_cast<int>(sum_over(s, n));
    for (int i = 0; i < k; ++i) {
      if (!contains(s, i)) continue;
      const SubsetMask rest = s & ~(SubsetMask{1} << i);
      if (rest == 0) continue;
      lo = std::max(lo, v[rest]);
      hi = std::min(hi, v[rest] + v[SubsetMask{1} << i]);
    }
    for (int x = lo; x <= hi; ++x) {
      v[s] = x;
      rec(s + 1);
    }
  };
  rec(1);
}

/// Random integer polymatroid: truncated coverage function
/// delta(I) = min(T, |union_{i in I} S_i|) with |S_i| <= n_i.
inline std::pair<SpaceSignature, RankFunction> random_polymatroid(std::mt19937_64& rng, int k,
                                                                  int max_n = 3) {
  std::uniform_int_distribution<int> dim(0, max_n);
  std::vector<int> n(k);
  for (int& x : n) x = dim(rng);
  const int universe = std::max(1, std::accumulate(n.begin(), n.end(), 0));
  std::uniform_int_distribution<int> elem(0, universe - 1);
  std::vector<std::set<int>> sets(k);
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> size(0, n[i]);
    const int target = size(rng);
    for (int t = 0; t < target; ++t) sets[i].insert(elem(rng));
  }
  std::vector<int> cover(std::size_t{1} << k);
  for (SubsetMask s = 0; s < cover.size(); ++s) {
    std::set<int> u;
    for (int i : members(s)) u.insert(sets[i].begin(), sets[i].end());
    cover[s] = static_cast<int>(u.size());
  }
  std::uniform_int_distribution<int> trunc(0, cover.back());
  const int t = trunc(rng);
  for (int& c : cover) c = std::min(c, t);
  return {SpaceSignature(n, cover.back()), RankFunction(k, cover)};
}

}  // namespace chowform::testing
