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

// JSON forms of the library types.
//
//   rank function  {"k": 2, "values": [{"subset": [1], "delta": 2}, ...]}
//   multidegree    {"n": [2, 2], "r": 2, "tag": "variety",
//                   "coefficients": [{"gamma": [1, 1], "a": "6"}, ...]}
//   cameras        {"cameras": [[["1", "0", "0", "0"], ...3 rows], ...]}
//   tensor         {"beta": [2, 2], "entries": [{"index": [2, 3], "value": "-1"}, ...]}
//
// Subsets and tensor indices are 1-based. Big integers and rationals are
// decimal strings ("p" or "p/q"); plain JSON integers are also accepted on
// input. Object keys come out sorted (nlohmann::json uses std::map), so
// dump() is canonical.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chowform/error.hpp"
#include "chowform/multidegree.hpp"
#include "chowform/multiview.hpp"
#include "chowform/polymatroid.hpp"
#include "chowform/rational.hpp"

namespace chowform::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  chowform::detail::require(j.is_object(), std::string("expected a JSON object with '") + key + "'");
  auto it = j.find(key);
  chowform::detail::require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

inline int as_int(const json& j, const char* what) {
  chowform::detail::require(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> as_int_list(const json& j, const char* what) {
  chowform::detail::require(j.is_array(), std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const json& e : j) out.push_back(as_int(e, what));
  return out;
}

}  // namespace detail

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  chowform::detail::require(j.is_string(), "rational values must be strings like \"p/q\"");
  return parse_rational(j.get<std::string>());
}

inline BigInt integer_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  chowform::detail::require(j.is_string(), "integer values must be decimal strings");
  return parse_integer(j.get<std::string>());
}

inline Vec vector_from_json(const json& j, int expected_size) {
  chowform::detail::require(j.is_array() && static_cast<int>(j.size()) == expected_size,
                            "expected a vector of " + std::to_string(expected_size) + " rationals");
  Vec v;
  for (const json& e : j) v.push_back(rational_from_json(e));
  return v;
}

inline json to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

inline SpaceSignature signature_from_json(const json& j, int default_r) {
  std::vector<int> n = detail::as_int_list(detail::field(j, "n"), "n");
  const int r = j.contains("r") ? detail::as_int(j.at("r"), "r") : default_r;
  return SpaceSignature(std::move(n), r);
}

inline RankFunction rank_function_from_json(const json& j) {
  const int k = detail::as_int(detail::field(j, "k"), "k");
  chowform::detail::require(k >= 1 && k <= kMaxFactors, "k out of range");
  const json& values = detail::field(j, "values");
  chowform::detail::require(values.is_array(), "'values' must be an array");
  std::vector<int> table(std::size_t{1} << k, 0);
  std::vector<bool> seen(table.size(), false);
  for (const json& entry : values) {
    const std::vector<int> idx = detail::as_int_list(detail::field(entry, "subset"), "subset");
    const SubsetMask s = from_one_based(idx, k);
    chowform::detail::require(!seen[s], "subset listed twice in rank function");
    seen[s] = true;
    table[s] = detail::as_int(detail::field(entry, "delta"), "delta");
  }
  for (bool b : seen) chowform::detail::require(b, "rank function must list every subset exactly once");
  return RankFunction(k, std::move(table));
}

inline json to_json(const RankFunction& delta) {
  json values = json::array();
  for (SubsetMask s = 0; s <= full_set(delta.k()); ++s) {
    values.push_back({{"subset", to_one_based(s)}, {"delta", delta(s)}});
  }
  return {{"k", delta.k()}, {"values", values}};
}

inline json to_json(const GammaVector& g) { return g.values; }
inline json to_json(const BetaVector& b) { return b.values; }

inline json to_json(const Support& support) {
  json out = json::array();
  for (const GammaVector& g : support) out.push_back(g.values);
  return out;
}

inline Multidegree multidegree_from_json(const json& j) {
  const json& coeffs = detail::field(j, "coefficients");
  chowform::detail::require(coeffs.is_array(), "'coefficients' must be an array");
  SpaceSignature sig = signature_from_json(j, -1);
  Multidegree::Coefficients map;
  for (const json& entry : coeffs) {
    GammaVector g{detail::as_int_list(detail::field(entry, "gamma"), "gamma")};
    chowform::detail::require(!map.contains(g), "gamma listed twice in multidegree");
    map.emplace(std::move(g), integer_from_json(detail::field(entry, "a")));
  }
  std::optional<Multidegree::Tag> tag;
  if (j.contains("tag")) {
    const json& t = j.at("tag");
    chowform::detail::require(t.is_string(), "'tag' must be \"variety\" or \"cycle\"");
    const std::string s = t.get<std::string>();
    chowform::detail::require(s == "variety" || s == "cycle", "'tag' must be \"variety\" or \"cycle\"");
    tag = s == "variety" ? Multidegree::Tag::variety : Multidegree::Tag::cycle;
  }
  return Multidegree(std::move(sig), std::move(map), tag);
}

inline json to_json(const Multidegree& md) {
  json coeffs = json::array();
  for (const auto& [g, a] : md.coefficients()) {
    coeffs.push_back({{"gamma", g.values}, {"a", to_string(a)}});
  }
  return {{"n", md.signature().dims()},
          {"r", md.signature().r()},
          {"coefficients", coeffs},
          {"tag", std::string(to_string(md.tag()))}};
}

inline json to_json(const ChowDegree& d) {
  json out = json::array();
  for (const Coefficient& a : d.degrees) out.push_back(to_string(a));
  return out;
}

inline json to_json(const std::vector<Coefficient>& v) {
  json out = json::array();
  for (const Coefficient& a : v) out.push_back(to_string(a));
  return out;
}

inline RationalMatrix camera_from_json(const json& j) {
  chowform::detail::require(j.is_array() && j.size() == 3, "a camera is 3 rows of 4 rationals");
  RationalMatrix p(3, 4);
  for (int r = 0; r < 3; ++r) {
    const Vec row = vector_from_json(j[r], 4);
    for (int c = 0; c < 4; ++c) p(r, c) = row[c];
  }
  return p;
}

inline json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline CameraConfiguration cameras_from_json(const json& j) {
  const json& cams = detail::field(j, "cameras");
  chowform::detail::require(cams.is_array() && !cams.empty(), "'cameras' must be a nonempty array");
  std::vector<RationalMatrix> out;
  for (const json& c : cams) out.push_back(camera_from_json(c));
  return CameraConfiguration(std::move(out));
}

inline json to_json(const CameraConfiguration& config) {
  json cams = json::array();
  for (const RationalMatrix& p : config.cameras()) cams.push_back(to_json(p));
  return {{"cameras", cams}};
}

/// Zero entries are omitted.
inline json to_json(const MultifocalTensor& t) {
  json entries = json::array();
  for (int flat = 0; flat < static_cast<int>(t.entries().size()); ++flat) {
    if (t.entries()[flat] == 0) continue;
    std::vector<int> idx = t.multi_index(flat);
    for (int& a : idx) ++a;
    entries.push_back({{"index", idx}, {"value", to_string(t.entries()[flat])}});
  }
  return {{"beta", t.beta().values}, {"entries", entries}};
}

inline MultifocalTensor tensor_from_json(const json& j) {
  BetaVector beta{detail::as_int_list(detail::field(j, "beta"), "beta")};
  const int k = beta.size();
  chowform::detail::require(k >= 2 && k <= 4, "tensor beta must have 2 to 4 entries");
  std::vector<Rational> entries(chowform::detail::power_of_three(k), Rational(0));
  std::vector<bool> seen(entries.size(), false);
  const json& list = detail::field(j, "entries");
  chowform::detail::require(list.is_array(), "'entries' must be an array");
  for (const json& e : list) {
    std::vector<int> idx = detail::as_int_list(detail::field(e, "index"), "index");
    chowform::detail::require(static_cast<int>(idx.size()) == k, "tensor index has wrong length");
    for (int& a : idx) {
      chowform::detail::require(a >= 1 && a <= 3, "tensor indices run over 1..3");
      --a;
    }
    const int flat = MultifocalTensor::flat_index(idx);
    chowform::detail::require(!seen[flat], "tensor index listed twice");
    seen[flat] = true;
    entries[flat] = rational_from_json(detail::field(e, "value"));
  }
  return MultifocalTensor(std::move(beta), std::move(entries));
}

inline json to_json(const TrialCount& c) {
  if (!c.finite) return "non-finite";
  return c.points;
}

inline json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"axiom", std::string(to_string(v.axiom))},
                          {"I", to_one_based(v.i)},
                          {"J", to_one_based(v.j)}});
  }
  return {{"ok", report.ok()}, {"violations", violations}};
}

}  // namespace chowform::io
