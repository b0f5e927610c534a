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

// Multiview varieties: the closure X of the image of P^3 in (P^2)^k under k
// pinhole cameras. For k <= 4 and beta with entries in {1,2} summing to 4,
// the multigraded Cayley-Chow form of X is multilinear, i.e. a tensor: the
// fundamental matrix, trifocal tensor and quadrifocal tensor.
//
// Everything is exact over Q. Slot i of a tensor pairs with a point of P^2
// when beta_i = 2 (L_i is a point) and with a line when beta_i = 1.
//
// Sign convention. For a tuple of cutting forms, chow_residual stacks the
// pulled-back rows l^T P_i (factor order, then form order) into a 4x4 matrix
// and takes its determinant. The tensor entry T[a_1..a_k] is the determinant
// of the matrix stacking, per factor, the rows of P_i with row a_i removed
// (beta_i = 2, times (-1)^(a_i+1)) or the single row a_i (beta_i = 1). With
// point coordinates l x m for a point cut out by forms (l, m) this gives
//   chow_residual(config, tuple) == tensor_contract(T, tuple_coordinates(tuple))
// exactly, with no extra scale.
//
// The oracles sample integer data with entries in [-10, 10] from a per-trial
// stream (random.hpp) and report per-trial results; majority() is left to
// the caller.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowform/error.hpp"
#include "chowform/linalg.hpp"
#include "chowform/multidegree.hpp"
#include "chowform/polymatroid.hpp"
#include "chowform/random.hpp"
#include "chowform/rational.hpp"

namespace chowform {

/// 3x4 exact camera matrices with their centers.
class CameraConfiguration {
 public:
  explicit CameraConfiguration(std::vector<RationalMatrix> cameras) : cameras_(std::move(cameras)) {
    detail::require(!cameras_.empty(), "camera configuration is empty");
    for (const RationalMatrix& p : cameras_) {
      detail::require(p.rows() == 3 && p.cols() == 4, "cameras must be 3x4 matrices");
      std::vector<Vec> kernel = nullspace(p);
      detail::require(kernel.size() == 1, "camera matrix must have rank 3");
      centers_.push_back(std::move(kernel.front()));
    }
  }

  int size() const { return static_cast<int>(cameras_.size()); }
  const RationalMatrix& camera(int i) const { return cameras_[i]; }
  const std::vector<RationalMatrix>& cameras() const { return cameras_; }
  const Vec& center(int i) const { return centers_[i]; }

  /// True when some camera sends `point` to zero.
  bool is_center(std::span<const Rational> point) const {
    for (const RationalMatrix& p : cameras_) {
      if (is_zero<Rational>(multiply(p, point))) return true;
    }
    return false;
  }

  /// Pairwise distinct centers and no three of them collinear.
  bool is_generic() const {
    const int k = size();
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (projectively_equal<Rational>(centers_[a], centers_[b])) return false;
        for (int c = b + 1; c < k; ++c) {
          const std::array<Vec, 3> rows{centers_[a], centers_[b], centers_[c]};
          if (rank(stack_rows<Rational>(rows)) < 3) return false;
        }
      }
    }
    return true;
  }

 private:
  std::vector<RationalMatrix> cameras_;
  std::vector<Vec> centers_;
};

/// Integer cameras with entries in [-10, 10], resampled until generic.
inline CameraConfiguration random_generic_configuration(int k, Rng& rng,
                                                        int retries = kDefaultRetries) {
  detail::require(k >= 1, "need at least one camera");
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<RationalMatrix> cams;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      RationalMatrix p(3, 4);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 4; ++c) p(r, c) = random_int(rng);
      }
      ok = rank(p) == 3;
      cams.push_back(std::move(p));
    }
    if (!ok) continue;
    CameraConfiguration config(std::move(cams));
    if (config.is_generic()) return config;
  }
  throw DegenerateError("could not sample a generic camera configuration");
}

inline Vec project_point(const RationalMatrix& camera, std::span<const Rational> world_point) {
  detail::require(camera.rows() == 3 && camera.cols() == 4, "camera must be 3x4");
  detail::require(world_point.size() == 4, "world point needs 4 homogeneous coordinates");
  detail::require(!is_zero(world_point), "world point must be nonzero");
  Vec image = multiply(camera, world_point);
  if (is_zero<Rational>(image)) {
    throw PreconditionError("projection undefined: the point is the camera center");
  }
  return image;
}

/// Multidegree of the multiview variety of k cameras with distinct centers
/// on (P^2)^k, r = 3:
///   t_1^2...t_k^2 (sum_{a<b<c} 1/(t_a t_b t_c) + sum_{a != b} 1/(t_a^2 t_b)).
/// Every coefficient is 1.
inline Multidegree multiview_multidegree(int k) {
  detail::require(k >= 2, "multiview multidegree needs k >= 2");
  detail::require(k <= kMaxFactors, "too many cameras");
  Multidegree::Coefficients coeffs;
  auto add = [&](std::vector<int> exps) {
    for (int e : exps) {
      if (e < 0 || e > 2) return;
    }
    coeffs[GammaVector{std::move(exps)}] = 1;
  };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) {
        std::vector<int> e(k, 2);
        --e[a], --e[b], --e[c];
        add(std::move(e));
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      std::vector<int> e(k, 2);
      e[a] -= 2;
      e[b] -= 1;
      add(std::move(e));
    }
  }
  return Multidegree(SpaceSignature(std::vector<int>(k, 2), 3), std::move(coeffs));
}

/// For each factor, the linear forms (3-vectors) cutting out L_i in P^2.
struct LinearSpaceTuple {
  std::vector<std::vector<Vec>> forms;

  int size() const { return static_cast<int>(forms.size()); }

  BetaVector beta() const {
    BetaVector b;
    for (const auto& f : forms) b.values.push_back(static_cast<int>(f.size()));
    return b;
  }
};

namespace detail {

inline void require_tensor_beta(int k, const BetaVector& beta) {
  require(k >= 2 && k <= 4, "multifocal tensors exist only for 2 <= k <= 4 cameras (k=" +
                                std::to_string(k) + ")");
  require(beta.size() == k, "beta length must equal the number of cameras");
  for (int b : beta.values) require(b == 1 || b == 2, "tensor beta entries must be 1 or 2");
  require(beta.sum() == 4, "unsupported beta: the entries must sum to 4");
}

inline void require_independent_forms(const LinearSpaceTuple& tuple) {
  for (const auto& factor : tuple.forms) {
    for (const Vec& f : factor) require(f.size() == 3, "linear forms on P^2 need 3 coefficients");
    if (factor.empty()) continue;
    require(rank(stack_rows<Rational>(factor)) == static_cast<int>(factor.size()),
            "cutting forms of a factor are linearly dependent");
  }
}

inline int power_of_three(int k) {
  int p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

}  // namespace detail

/// det of the 4x4 matrix of pulled-back forms l^T P_i. Zero exactly when
/// the four planes share a point of P^3; the Cayley-Chow form up to scale.
inline Rational chow_residual(const CameraConfiguration& config, const LinearSpaceTuple& tuple) {
  detail::require(tuple.size() == config.size(), "one list of forms per camera is required");
  detail::require_tensor_beta(config.size(), tuple.beta());
  detail::require_independent_forms(tuple);
  RationalMatrix m;
  for (int i = 0; i < config.size(); ++i) {
    for (const Vec& form : tuple.forms[i]) {
      m.append_row(multiply<Rational>(form, config.camera(i)));
    }
  }
  return determinant(std::move(m));
}

/// Contraction coordinates: the point l x m for a pair of forms, the line
/// itself for a single form.
inline std::vector<Vec> tuple_coordinates(const LinearSpaceTuple& tuple) {
  std::vector<Vec> out;
  for (const auto& factor : tuple.forms) {
    if (factor.size() == 2) {
      out.push_back(cross<Rational>(factor[0], factor[1]));
    } else {
      detail::require(factor.size() == 1, "tensor slots need one or two forms");
      out.push_back(factor[0]);
    }
  }
  return out;
}

class MultifocalTensor {
 public:
  MultifocalTensor(BetaVector beta, std::vector<Rational> entries)
      : beta_(std::move(beta)), entries_(std::move(entries)) {
    detail::require_tensor_beta(beta_.size(), beta_);
    detail::require(static_cast<int>(entries_.size()) == detail::power_of_three(k()),
                    "tensor needs 3^k entries");
  }

  int k() const { return beta_.size(); }
  const BetaVector& beta() const { return beta_; }
  const std::vector<Rational>& entries() const { return entries_; }

  /// Row-major flat position of a 0-based multi-index.
  static int flat_index(std::span<const int> index) {
    int flat = 0;
    for (int a : index) flat = flat * 3 + a;
    return flat;
  }

  /// 0-based multi-index of a flat position.
  std::vector<int> multi_index(int flat) const {
    std::vector<int> idx(k());
    for (int i = k() - 1; i >= 0; --i, flat /= 3) idx[i] = flat % 3;
    return idx;
  }

  const Rational& at(std::span<const int> index) const {
    detail::require(static_cast<int>(index.size()) == k(), "index length mismatch");
    return entries_[flat_index(index)];
  }

  bool is_zero() const { return chowform::is_zero<Rational>(entries_); }

  friend bool operator==(const MultifocalTensor&, const MultifocalTensor&) = default;

 private:
  BetaVector beta_;
  std::vector<Rational> entries_;
};

/// Fundamental matrix / trifocal / quadrifocal tensor of `config` for
/// `beta`. For non-generic configurations the result may vanish
/// identically; that is not treated as an error here.
inline MultifocalTensor multifocal_tensor(const CameraConfiguration& config,
                                          const BetaVector& beta) {
  const int k = config.size();
  detail::require_tensor_beta(k, beta);
  const int count = detail::power_of_three(k);
  std::vector<Rational> entries(count);
  for (int flat = 0; flat < count; ++flat) {
    int rest = flat;
    std::vector<int> idx(k);
    for (int i = k - 1; i >= 0; --i, rest /= 3) idx[i] = rest % 3;
    RationalMatrix m;
    int sign = 1;
    for (int i = 0; i < k; ++i) {
      const RationalMatrix& p = config.camera(i);
      if (beta[i] == 2) {
        for (int row = 0; row < 3; ++row) {
          if (row != idx[i]) m.append_row(p.row(row));
        }
        if (idx[i] == 1) sign = -sign;  // (-1)^(a+1) with a 1-based
      } else {
        m.append_row(p.row(idx[i]));
      }
    }
    entries[flat] = determinant(std::move(m));
    if (sign < 0) entries[flat] = -entries[flat];
  }
  return MultifocalTensor(beta, std::move(entries));
}

/// sum_a T[a_1..a_k] prod_i x_i[a_i].
inline Rational tensor_contract(const MultifocalTensor& tensor, std::span<const Vec> vectors) {
  detail::require(static_cast<int>(vectors.size()) == tensor.k(),
                  "one vector per tensor slot is required");
  for (const Vec& v : vectors) detail::require(v.size() == 3, "slot vectors need 3 coordinates");
  Rational total(0);
  const auto& entries = tensor.entries();
  for (int flat = 0; flat < static_cast<int>(entries.size()); ++flat) {
    if (entries[flat] == 0) continue;
    Rational term = entries[flat];
    int rest = flat;
    for (int i = tensor.k() - 1; i >= 0 && term != 0; --i, rest /= 3) term *= vectors[i][rest % 3];
    total += term;
  }
  return total;
}

/// One oracle trial: a finite number of points, or a positive-dimensional
/// solution set.
struct TrialCount {
  bool finite = true;
  int points = 0;

  static TrialCount non_finite() { return {false, 0}; }

  friend bool operator==(const TrialCount&, const TrialCount&) = default;
  friend auto operator<=>(const TrialCount&, const TrialCount&) = default;
};

/// The value reported by more than half of the trials, if any.
inline std::optional<TrialCount> majority(std::span<const TrialCount> counts) {
  std::map<TrialCount, int> tally;
  for (const TrialCount& c : counts) ++tally[c];
  for (const auto& [value, n] : tally) {
    if (2 * n > static_cast<int>(counts.size())) return value;
  }
  return std::nullopt;
}

namespace detail {

// `count` independent integer forms on P^2.
inline std::vector<Vec> random_forms(Rng& rng, int count, int retries) {
  if (count == 0) return {};
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Vec> forms;
    for (int j = 0; j < count; ++j) forms.push_back(random_integer_vector(rng, 3));
    if (rank(stack_rows<Rational>(forms)) == count) return forms;
  }
  throw DegenerateError("could not sample independent linear forms");
}

// `count` independent forms vanishing at `point`: random integer
// combinations of a basis of its annihilator.
inline std::vector<Vec> random_forms_through(Rng& rng, std::span<const Rational> point, int count,
                                             int retries) {
  require(count >= 0 && count <= 2, "a point of P^2 lies on at most 2 independent forms");
  if (count == 0) return {};
  RationalMatrix row(1, 3);
  for (int j = 0; j < 3; ++j) row(0, j) = point[j];
  const std::vector<Vec> basis = nullspace(row);
  require(basis.size() == 2, "point of P^2 must be nonzero");
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Vec> forms;
    for (int j = 0; j < count; ++j) {
      const Rational c0 = random_int(rng);
      const Rational c1 = random_int(rng);
      Vec f(3);
      for (int c = 0; c < 3; ++c) f[c] = c0 * basis[0][c] + c1 * basis[1][c];
      forms.push_back(std::move(f));
    }
    if (rank(stack_rows<Rational>(forms)) == count) return forms;
  }
  throw DegenerateError("could not sample independent forms through a point");
}

inline RationalMatrix pullback_rows(const CameraConfiguration& config,
                                    const std::vector<std::vector<Vec>>& forms) {
  RationalMatrix m(0, 4);
  for (int i = 0; i < config.size(); ++i) {
    for (const Vec& f : forms[i]) m.append_row(multiply<Rational>(f, config.camera(i)));
  }
  return m;
}

}  // namespace detail

/// Estimates a_gamma: per trial, intersects X with general L_i of dimension
/// gamma_i by solving the pulled-back linear system on P^3 and counting
/// solutions that are not camera centers (points of X over a center lie in
/// the closure only and are never met by general L_i).
inline std::vector<TrialCount> intersection_count_oracle(const CameraConfiguration& config,
                                                         const GammaVector& gamma, int trials,
                                                         std::uint64_t seed) {
  const int k = config.size();
  detail::require(k >= 2, "need at least two cameras");
  detail::require(gamma.size() == k, "gamma length must equal the number of cameras");
  for (int g : gamma.values) detail::require(g >= 0 && g <= 2, "gamma entries must be in 0..2");
  detail::require(gamma.sum() == 2 * k - 3, "gamma must sum to codim = 2k - 3");
  detail::require(trials >= 1, "need at least one trial");

  std::vector<TrialCount> out;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    std::vector<std::vector<Vec>> forms;
    for (int i = 0; i < k; ++i) forms.push_back(detail::random_forms(rng, 2 - gamma[i], kDefaultRetries));
    const RationalMatrix m = detail::pullback_rows(config, forms);
    const std::vector<Vec> kernel = nullspace(m);
    if (kernel.size() != 1) {
      out.push_back(TrialCount::non_finite());
      continue;
    }
    out.push_back({true, config.is_center(kernel.front()) ? 0 : 1});
  }
  return out;
}

/// Per trial: a random world point Q, random L_i of codimension beta_i
/// through its images, and the number of points of X in L_1 x ... x L_k.
/// That number is the degree of the incidence correspondence onto
/// Z_{X,beta} at a general point.
inline std::vector<TrialCount> epsilon_oracle(const CameraConfiguration& config,
                                              const BetaVector& beta, int trials,
                                              std::uint64_t seed) {
  const int k = config.size();
  detail::require(k >= 2, "need at least two cameras");
  detail::require(beta.size() == k, "beta length must equal the number of cameras");
  for (int b : beta.values) detail::require(b >= 0 && b <= 2, "beta entries must be in 0..2");
  detail::require(beta.sum() == 4, "beta must satisfy |beta| = r + 1 = 4");
  detail::require(trials >= 1, "need at least one trial");

  std::vector<TrialCount> out;
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    Vec q;
    for (int attempt = 0;; ++attempt) {
      if (attempt == kDefaultRetries) {
        throw DegenerateError("could not sample a world point away from the camera centers");
      }
      q = random_integer_vector(rng, 4);
      if (!is_zero<Rational>(q) && !config.is_center(q)) break;
    }
    std::vector<std::vector<Vec>> forms;
    for (int i = 0; i < k; ++i) {
      const Vec image = multiply<Rational>(config.camera(i), q);
      forms.push_back(detail::random_forms_through(rng, image, beta[i], kDefaultRetries));
    }
    const std::vector<Vec> kernel = nullspace(detail::pullback_rows(config, forms));
    if (kernel.size() != 1) {
      out.push_back(TrialCount::non_finite());
      continue;
    }
    out.push_back({true, config.is_center(kernel.front()) ? 0 : 1});
  }
  return out;
}

/// True iff (x_1, ..., x_k) lies on the multiview variety: some non-center
/// world point projects to every x_i, or (closure points) every x_i with
/// i != j is the image of the center of camera j. Exact for configurations
/// with distinct centers.
inline bool on_multiview_variety(const CameraConfiguration& config,
                                 std::span<const Vec> candidate) {
  const int k = config.size();
  detail::require(static_cast<int>(candidate.size()) == k, "one image point per camera");
  for (const Vec& x : candidate) {
    detail::require(x.size() == 3 && !is_zero<Rational>(x), "image points must be nonzero 3-vectors");
  }
  // x_i ~ P_i Q  <=>  x_i cross (P_i Q) = 0: three rows per camera.
  RationalMatrix m(0, 4);
  for (int i = 0; i < k; ++i) {
    const Vec& x = candidate[i];
    const RationalMatrix& p = config.camera(i);
    const std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {2, 0}, {0, 1}}};
    for (const auto& [a, b] : pairs) {
      Vec row(4);
      for (int c = 0; c < 4; ++c) row[c] = x[a] * p(b, c) - x[b] * p(a, c);
      m.append_row(row);
    }
  }
  const std::vector<Vec> kernel = nullspace(m);
  if (kernel.size() >= 2) return true;
  if (kernel.size() == 1 && !config.is_center(kernel.front())) return true;
  for (int j = 0; j < k; ++j) {
    bool all = true;
    for (int i = 0; i < k && all; ++i) {
      if (i == j) continue;
      all = projectively_equal<Rational>(candidate[i], multiply(config.camera(i), std::span<const Rational>(config.center(j))));
    }
    if (all) return true;
  }
  return false;
}

/// Sampled test of candidate in S_Z: every tuple of linear spaces of
/// codimension beta_i through the x_i lies in Z_{X,beta}. Returns false as
/// soon as one sampled tuple gives a nonzero contraction.
inline bool sz_membership(const CameraConfiguration& config, const MultifocalTensor& tensor,
                          std::span<const Vec> candidate, int trials, std::uint64_t seed) {
  const int k = config.size();
  detail::require(tensor.k() == k, "tensor and configuration disagree on k");
  detail::require(static_cast<int>(candidate.size()) == k, "one image point per camera");
  for (const Vec& x : candidate) {
    detail::require(x.size() == 3 && !is_zero<Rational>(x), "image points must be nonzero 3-vectors");
  }
  detail::require(trials >= 1, "need at least one trial");
  for (int t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    std::vector<Vec> slots;
    for (int i = 0; i < k; ++i) {
      if (tensor.beta()[i] == 2) {
        slots.push_back(candidate[i]);  // L_i is the point itself
      } else {
        slots.push_back(detail::random_forms_through(rng, candidate[i], 1, kDefaultRetries).front());
      }
    }
    if (tensor_contract(tensor, slots) != 0) return false;
  }
  return true;
}

}  // namespace chowform
