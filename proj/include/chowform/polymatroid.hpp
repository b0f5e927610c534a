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

// Projection-dimension functions of subvarieties of a product of projective
// spaces P^{n_1} x ... x P^{n_k}, viewed as integer polymatroids.
//
// For X of dimension r, delta(I) = dim p_I(X) is normalized, monotone and
// submodular. The lattice points of its base polytope (after the change of
// variables x_i = n_i - gamma_i) are exactly the support of the multidegree
// of X, and the same function decides for which codimension profiles beta
// the incidence locus of X is a hypersurface (beta 1-deficient) and when
// that hypersurface recovers X (beta a circuit).
//
// All operations here are purely combinatorial: any function passing the
// axioms is accepted, whether or not it comes from a variety.

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chowform/error.hpp"
#include "chowform/subset.hpp"

namespace chowform {

/// The ambient product P^{n_1} x ... x P^{n_k} together with dim X = r.
class SpaceSignature {
 public:
  SpaceSignature(std::vector<int> n, int r) : n_(std::move(n)), r_(r) {
    detail::require(!n_.empty(), "signature needs at least one factor");
    detail::require(static_cast<int>(n_.size()) <= kMaxFactors,
                    "at most " + std::to_string(kMaxFactors) + " factors");
    for (int ni : n_) detail::require(ni >= 0, "ambient dimensions must be >= 0");
    detail::require(r_ >= 0 && r_ <= total(), "need 0 <= r <= sum n_i");
  }

  int k() const { return static_cast<int>(n_.size()); }
  int n(int i) const { return n_[i]; }
  const std::vector<int>& dims() const { return n_; }
  int r() const { return r_; }
  int total() const { return std::accumulate(n_.begin(), n_.end(), 0); }
  int codim() const { return total() - r_; }

  friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;

 private:
  std::vector<int> n_;
  int r_;
};

/// Multidegree exponent: gamma_i is the dimension of the i-th slicing
/// linear space.
struct GammaVector {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values[i]; }
  int sum() const { return std::accumulate(values.begin(), values.end(), 0); }

  friend auto operator<=>(const GammaVector&, const GammaVector&) = default;
};

using Support = std::set<GammaVector>;

/// Codimension profile of the slicing spaces L_i; alpha_i = n_i - beta_i is
/// their dimension.
struct BetaVector {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values[i]; }
  int sum() const { return std::accumulate(values.begin(), values.end(), 0); }
  long long sum_over(SubsetMask s) const { return chowform::sum_over(s, values); }
  int alpha(const SpaceSignature& sig, int i) const { return sig.n(i) - values[i]; }

  /// 0 <= beta_i <= n_i and matching length.
  bool in_range(const SpaceSignature& sig) const {
    if (size() != sig.k()) return false;
    for (int i = 0; i < size(); ++i) {
      if (values[i] < 0 || values[i] > sig.n(i)) return false;
    }
    return true;
  }

  friend auto operator<=>(const BetaVector&, const BetaVector&) = default;
};

/// delta(I) for every subset I of the factor set, indexed by bitmask.
class RankFunction {
 public:
  RankFunction(int k, std::vector<int> values) : k_(k), values_(std::move(values)) {
    detail::require(k_ >= 1 && k_ <= kMaxFactors,
                    "rank function needs 1 <= k <= " + std::to_string(kMaxFactors));
    detail::require(values_.size() == (std::size_t{1} << k_),
                    "rank function must have a value for all 2^k subsets");
    for (int v : values_) detail::require(v >= 0, "rank values must be non-negative");
  }

  int k() const { return k_; }
  int operator()(SubsetMask s) const { return values_[s]; }
  int full() const { return values_[full_set(k_)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const RankFunction&, const RankFunction&) = default;

 private:
  int k_;
  std::vector<int> values_;
};

enum class Axiom { normalized, monotone, submodular, bounded };

inline std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::normalized:
      return "normalized";
    case Axiom::monotone:
      return "monotone";
    case Axiom::submodular:
      return "submodular";
    case Axiom::bounded:
      return "bounded";
  }
  return "unknown";
}

/// One failed axiom. For `monotone` the witness is I subset of J with
/// delta(I) > delta(J); for `submodular` the offending pair; for
/// `normalized` and `bounded` only I is meaningful and J == I.
struct Violation {
  Axiom axiom;
  SubsetMask i;
  SubsetMask j;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks delta(empty) = 0, monotonicity, submodularity and
/// delta(I) <= sum_{i in I} n_i. Monotonicity is reported on covering pairs
/// (J = I plus one element), which is equivalent to the general statement.
inline ValidationReport validate_rank_function(const SpaceSignature& sig,
                                               const RankFunction& delta) {
  if (delta.k() != sig.k()) {
    throw PreconditionError("rank function has k=" + std::to_string(delta.k()) +
                            " but signature has k=" + std::to_string(sig.k()));
  }
  const int k = sig.k();
  const SubsetMask full = full_set(k);
  ValidationReport report;
  if (delta(0) != 0) report.violations.push_back({Axiom::normalized, 0, 0});
  for (SubsetMask s = 0; s <= full; ++s) {
    for (int i = 0; i < k; ++i) {
      if (contains(s, i)) continue;
      const SubsetMask t = s | (SubsetMask{1} << i);
      if (delta(s) > delta(t)) report.violations.push_back({Axiom::monotone, s, t});
    }
  }
  for (SubsetMask a = 0; a <= full; ++a) {
    for (SubsetMask b = a + 1; b <= full; ++b) {
      if (is_subset(a, b) || is_subset(b, a)) continue;
      if (delta(a & b) + delta(a | b) > delta(a) + delta(b)) {
        report.violations.push_back({Axiom::submodular, a, b});
      }
    }
  }
  for (SubsetMask s = 0; s <= full; ++s) {
    if (delta(s) > sum_over(s, sig.dims())) {
      report.violations.push_back({Axiom::bounded, s, s});
    }
  }
  return report;
}

namespace detail {

inline void require_valid(const SpaceSignature& sig, const RankFunction& delta) {
  const ValidationReport report = validate_rank_function(sig, delta);
  if (!report.ok()) {
    throw PreconditionError("rank function violates the polymatroid axioms (" +
                            std::string(to_string(report.violations.front().axiom)) + ")");
  }
  if (delta.full() != sig.r()) {
    throw PreconditionError("rank function has delta(full)=" + std::to_string(delta.full()) +
                            " but r=" + std::to_string(sig.r()));
  }
}

inline void require_beta(const SpaceSignature& sig, const BetaVector& beta) {
  require(beta.in_range(sig), "beta must have k entries with 0 <= beta_i <= n_i");
  if (beta.sum() != sig.r() + 1) {
    throw PreconditionError("beta must satisfy |beta| = r + 1 (got |beta|=" +
                            std::to_string(beta.sum()) + ", r=" + std::to_string(sig.r()) + ")");
  }
}

// Visits every vector v with 0 <= v_i <= bound_i and sum v = total, in
// lexicographic order.
template <class Visit>
void for_each_composition(const std::vector<int>& bound, int total, Visit&& visit) {
  const int k = static_cast<int>(bound.size());
  std::vector<int> suffix_cap(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) suffix_cap[i] = suffix_cap[i + 1] + bound[i];
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == k) {
      if (remaining == 0) visit(static_cast<const std::vector<int>&>(cur));
      return;
    }
    const int lo = std::max(0, remaining - suffix_cap[i + 1]);
    const int hi = std::min(bound[i], remaining);
    for (int v = lo; v <= hi; ++v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (total >= 0 && total <= suffix_cap[0]) rec(rec, 0, total);
}

inline bool one_deficient(int k, const RankFunction& delta, const BetaVector& beta) {
  for (SubsetMask s = 0; s <= full_set(k); ++s) {
    if (beta.sum_over(s) > delta(s) + 1) return false;
  }
  return true;
}

inline bool determining(int k, const RankFunction& delta, const BetaVector& beta) {
  const SubsetMask full = full_set(k);
  for (SubsetMask s = 1; s < full; ++s) {
    if (beta.sum_over(s) > delta(s)) return false;
  }
  return true;
}

}  // namespace detail

/// Lattice points gamma of the base polytope of delta: sum (n_i - gamma_i) = r
/// and sum_{i in I} (n_i - gamma_i) <= delta(I) for every proper nonempty I.
inline Support support_from_projections(const SpaceSignature& sig, const RankFunction& delta) {
  detail::require_valid(sig, delta);
  const int k = sig.k();
  const SubsetMask full = full_set(k);
  Support out;
  // Enumerate x = n - gamma directly: 0 <= x_i <= n_i, sum x = r.
  detail::for_each_composition(sig.dims(), sig.r(), [&](const std::vector<int>& x) {
    for (SubsetMask s = 1; s < full; ++s) {
      if (sum_over(s, x) > delta(s)) return;
    }
    GammaVector g{std::vector<int>(k)};
    for (int i = 0; i < k; ++i) g.values[i] = sig.n(i) - x[i];
    out.insert(std::move(g));
  });
  return out;
}

/// delta(I) = max over gamma in support of sum_{i in I} (n_i - gamma_i).
inline RankFunction projections_from_support(const SpaceSignature& sig, const Support& support) {
  if (support.empty()) throw PreconditionError("rank function undefined for an empty support");
  const int k = sig.k();
  for (const GammaVector& g : support) {
    detail::require(g.size() == k, "support vector has wrong length");
    for (int i = 0; i < k; ++i) {
      detail::require(g[i] >= 0 && g[i] <= sig.n(i), "support vector out of range");
    }
    detail::require(g.sum() == sig.codim(), "support vector must have total degree codim");
  }
  std::vector<int> values(std::size_t{1} << k, 0);
  for (SubsetMask s = 1; s <= full_set(k); ++s) {
    int best = 0;
    for (const GammaVector& g : support) {
      int v = 0;
      for (int i : members(s)) v += sig.n(i) - g[i];
      best = std::max(best, v);
    }
    values[s] = best;
  }
  return RankFunction(k, std::move(values));
}

/// |beta_I| <= delta(I) + 1 for every I.
inline bool is_one_deficient(const SpaceSignature& sig, const RankFunction& delta,
                             const BetaVector& beta) {
  detail::require_valid(sig, delta);
  detail::require_beta(sig, beta);
  return detail::one_deficient(sig.k(), delta, beta);
}

/// Smallest tight set J (|beta_J| = delta(J) + 1). Tight sets are closed
/// under intersection, so J is the intersection of all of them and every
/// tight set contains it. The full set is always tight.
inline SubsetMask minimal_tight_set(const SpaceSignature& sig, const RankFunction& delta,
                                    const BetaVector& beta) {
  if (!is_one_deficient(sig, delta, beta)) {
    throw PreconditionError("beta is not 1-deficient for this rank function");
  }
  const SubsetMask full = full_set(sig.k());
  SubsetMask j = full;
  for (SubsetMask s = 0; s <= full; ++s) {
    if (beta.sum_over(s) == delta(s) + 1) j &= s;
  }
  return j;
}

/// Direct scan of |beta_I| <= delta(I) over all proper nonempty I.
inline bool satisfies_determining_inequalities(const SpaceSignature& sig,
                                               const RankFunction& delta,
                                               const BetaVector& beta) {
  detail::require_valid(sig, delta);
  detail::require_beta(sig, beta);
  return detail::determining(sig.k(), delta, beta);
}

/// A 1-deficient beta with positive entries whose only tight set is the
/// full set.
inline bool is_circuit(const SpaceSignature& sig, const RankFunction& delta,
                       const BetaVector& beta) {
  if (!is_one_deficient(sig, delta, beta)) return false;
  for (int b : beta.values) {
    if (b <= 0) return false;
  }
  return minimal_tight_set(sig, delta, beta) == full_set(sig.k());
}

enum class Criterion { hypersurface, determining };

/// Every in-range beta with |beta| = r + 1 meeting `criterion`, in
/// lexicographic order.
inline std::vector<BetaVector> enumerate_beta(const SpaceSignature& sig, const RankFunction& delta,
                                              Criterion criterion) {
  detail::require_valid(sig, delta);
  std::vector<BetaVector> out;
  detail::for_each_composition(sig.dims(), sig.r() + 1, [&](const std::vector<int>& b) {
    BetaVector beta{b};
    const bool keep = criterion == Criterion::hypersurface
                          ? detail::one_deficient(sig.k(), delta, beta)
                          : detail::determining(sig.k(), delta, beta);
    if (keep) out.push_back(std::move(beta));
  });
  return out;
}

}  // namespace chowform
