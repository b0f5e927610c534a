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

// Multidegrees sum_gamma a_gamma t^gamma of subvarieties (and effective
// cycles) of P^{n_1} x ... x P^{n_k}, and the multidegree form of the
// hypersurface / determination criteria for the multigraded Cayley-Chow
// form H_{X,beta}.
//
// H_{X,beta} = F_X^eps where eps is the degree of the incidence
// correspondence onto Z_{X,beta}. A multidegree only determines the degrees
// of H, not the split into (degree of F_X, eps); that split is estimated by
// epsilon_oracle in multiview.hpp for the one family where we can sample.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowform/error.hpp"
#include "chowform/polymatroid.hpp"
#include "chowform/rational.hpp"

namespace chowform {

using Coefficient = BigInt;

class Multidegree {
 public:
  /// `variety`: support is the lattice-point set of a polymatroid (round
  /// trip through projections_from_support succeeds). `cycle`: anything
  /// else, including the zero cycle.
  enum class Tag { variety, cycle };

  using Coefficients = std::map<GammaVector, Coefficient>;

  /// Validates every key against `sig`, drops zero coefficients and rejects
  /// negative ones. Without an explicit tag the tag is inferred; asking for
  /// `variety` on a support that fails the round trip is an error.
  Multidegree(SpaceSignature sig, Coefficients coeffs, std::optional<Tag> tag = std::nullopt)
      : sig_(std::move(sig)) {
    for (auto& [gamma, a] : coeffs) {
      detail::require(gamma.size() == sig_.k(), "gamma has wrong length");
      for (int i = 0; i < sig_.k(); ++i) {
        detail::require(gamma[i] >= 0 && gamma[i] <= sig_.n(i),
                        "gamma entries must satisfy 0 <= gamma_i <= n_i");
      }
      detail::require(gamma.sum() == sig_.codim(),
                      "gamma must have total degree codim = " + std::to_string(sig_.codim()));
      detail::require(a >= 0, "multidegree coefficients must be non-negative");
      if (a != 0) coeffs_.emplace(gamma, std::move(a));
    }
    const bool consistent = is_polymatroid_support(sig_, support());
    if (tag == Tag::variety) {
      detail::require(consistent,
                      "support is not the lattice-point set of a polymatroid; tag it 'cycle'");
      tag_ = Tag::variety;
    } else {
      tag_ = tag.value_or(consistent ? Tag::variety : Tag::cycle);
    }
  }

  const SpaceSignature& signature() const { return sig_; }
  const Coefficients& coefficients() const { return coeffs_; }
  Tag tag() const { return tag_; }
  bool empty() const { return coeffs_.empty(); }

  Support support() const {
    Support s;
    for (const auto& entry : coeffs_) s.insert(entry.first);
    return s;
  }

  /// a_gamma, zero for absent or out-of-range gamma.
  Coefficient coefficient(const GammaVector& gamma) const {
    auto it = coeffs_.find(gamma);
    return it == coeffs_.end() ? Coefficient(0) : it->second;
  }

  /// delta(I) = dim p_I(X), recovered from the support.
  RankFunction projection_dims() const { return projections_from_support(sig_, support()); }

  static bool is_polymatroid_support(const SpaceSignature& sig, const Support& support) {
    if (support.empty()) return false;
    const RankFunction delta = projections_from_support(sig, support);
    if (!validate_rank_function(sig, delta).ok()) return false;
    return support_from_projections(sig, delta) == support;
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  SpaceSignature sig_;
  Coefficients coeffs_;
  Tag tag_ = Tag::cycle;
};

inline std::string_view to_string(Multidegree::Tag t) {
  return t == Multidegree::Tag::variety ? "variety" : "cycle";
}

/// Degree of H_{X,beta} in each group of Pluecker variables.
struct ChowDegree {
  std::vector<Coefficient> degrees;

  friend bool operator==(const ChowDegree&, const ChowDegree&) = default;
};

namespace detail {

inline void require_variety(const Multidegree& md, const char* op) {
  if (md.tag() != Multidegree::Tag::variety) {
    throw CycleTagError(std::string(op) +
                        " assumes an irreducible variety; input is tagged 'cycle'");
  }
}

}  // namespace detail

/// (a_{alpha+e_1}, ..., a_{alpha+e_k}) with alpha = n - beta.
inline std::vector<Coefficient> criterion_form(const Multidegree& md, const BetaVector& beta) {
  const SpaceSignature& sig = md.signature();
  detail::require_beta(sig, beta);
  std::vector<Coefficient> form(sig.k());
  GammaVector gamma{std::vector<int>(sig.k())};
  for (int i = 0; i < sig.k(); ++i) gamma.values[i] = beta.alpha(sig, i);
  for (int j = 0; j < sig.k(); ++j) {
    ++gamma.values[j];
    form[j] = md.coefficient(gamma);  // beta_j = 0 puts gamma out of range: 0
    --gamma.values[j];
  }
  return form;
}

/// Z_{X,beta} is a hypersurface iff the criterion form is not identically 0.
inline bool is_hypersurface(const Multidegree& md, const BetaVector& beta) {
  detail::require_variety(md, "is_hypersurface");
  for (const Coefficient& a : criterion_form(md, beta)) {
    if (a != 0) return true;
  }
  return false;
}

/// Z_{X,beta} determines X iff every entry of the criterion form is nonzero.
inline bool determines_variety(const Multidegree& md, const BetaVector& beta) {
  detail::require_variety(md, "determines_variety");
  for (const Coefficient& a : criterion_form(md, beta)) {
    if (a == 0) return false;
  }
  return true;
}

/// Multidegree of H_{X,beta}. Defined on cycles as well as varieties;
/// throws InapplicableError when the criterion form vanishes.
inline ChowDegree chow_form_multidegree(const Multidegree& md, const BetaVector& beta) {
  std::vector<Coefficient> form = criterion_form(md, beta);
  bool any = false;
  for (const Coefficient& a : form) any = any || a != 0;
  if (!any) throw InapplicableError("Z_{X,beta} is not a hypersurface for this beta");
  return ChowDegree{std::move(form)};
}

/// Multidegree of p_{I^c *}([p_I^{-1}(L_I)] . X) on the factors outside I,
/// for general L_i of codimension beta_i (i in I): a'_{gamma'} = a_gamma with
/// gamma_i = alpha_i on I. Components that miss L_I contribute zero.
inline Multidegree slice_multidegree(const Multidegree& md, SubsetMask subset,
                                     const BetaVector& beta) {
  const SpaceSignature& sig = md.signature();
  const SubsetMask full = full_set(sig.k());
  detail::require(subset != 0 && subset != full && is_subset(subset, full),
                  "slice subset must be proper and nonempty");
  detail::require_beta(sig, beta);
  const long long r_new = sig.r() - beta.sum_over(subset);
  detail::require(r_new >= 0, "over-slicing: |beta_I| exceeds dim X");

  const std::vector<int> kept = members(full & ~subset);
  std::vector<int> n_new;
  for (int i : kept) n_new.push_back(sig.n(i));
  SpaceSignature sig_new(std::move(n_new), static_cast<int>(r_new));

  Multidegree::Coefficients out;
  for (const auto& [gamma, a] : md.coefficients()) {
    bool match = true;
    for (int i : members(subset)) match = match && gamma[i] == beta.alpha(sig, i);
    if (!match) continue;
    GammaVector g;
    for (int i : kept) g.values.push_back(gamma[i]);
    out.emplace(std::move(g), a);
  }
  return Multidegree(std::move(sig_new), std::move(out));
}

/// Coefficient-wise sum (multidegree of the sum of cycles).
inline Multidegree multidegree_add(const Multidegree& lhs, const Multidegree& rhs) {
  detail::require(lhs.signature() == rhs.signature(), "multidegree signatures differ");
  Multidegree::Coefficients sum = lhs.coefficients();
  for (const auto& [gamma, a] : rhs.coefficients()) sum[gamma] += a;
  return Multidegree(lhs.signature(), std::move(sum));
}

}  // namespace chowform
