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

#include "chowform/io.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace chowform {
namespace {

using io::json;

TEST(IoTest, RankFunctionRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [sig, delta] = testing::random_polymatroid(rng, 1 + trial % 5);
    const json j = io::to_json(delta);
    EXPECT_EQ(io::rank_function_from_json(j), delta);
    EXPECT_EQ(io::rank_function_from_json(json::parse(j.dump())), delta);
  }
}

TEST(IoTest, RankFunctionRejectsGapsAndRepeats) {
  json j = io::to_json(RankFunction(2, {0, 2, 2, 3}));
  json missing = j;
  missing["values"].erase(missing["values"].begin() + 1);
  EXPECT_THROW(io::rank_function_from_json(missing), PreconditionError);
  json twice = j;
  twice["values"][1]["subset"] = json::array({2});
  EXPECT_THROW(io::rank_function_from_json(twice), PreconditionError);
  json bad_index = j;
  bad_index["values"][1]["subset"] = json::array({3});
  EXPECT_THROW(io::rank_function_from_json(bad_index), PreconditionError);
}

TEST(IoTest, MultidegreeRoundTrip) {
  std::vector<Multidegree> all{testing::frobenius(5), testing::product_of_curves(2, 3)};
  for (int k = 2; k <= 5; ++k) all.push_back(multiview_multidegree(k));
  Multidegree::Coefficients big;
  big[GammaVector{{1, 1}}] = parse_integer("98765432109876543210987654321");
  all.emplace_back(SpaceSignature({2, 2}, 2), big);
  all.emplace_back(SpaceSignature({2, 2}, 2), Multidegree::Coefficients{});
  for (const Multidegree& md : all) {
    const json j = io::to_json(md);
    EXPECT_EQ(io::multidegree_from_json(json::parse(j.dump())), md);
  }
}

TEST(IoTest, MultidegreeSchema) {
  const json j = io::to_json(testing::frobenius(2));
  EXPECT_EQ(j.dump(),
            R"({"coefficients":[{"a":"1","gamma":[0,2]},{"a":"2","gamma":[1,1]},{"a":"4","gamma":[2,0]}],"n":[2,2],"r":2,"tag":"variety"})");
  json plain_ints = j;
  plain_ints["coefficients"][0]["a"] = 1;
  EXPECT_EQ(io::multidegree_from_json(plain_ints), testing::frobenius(2));
  json no_r = j;
  no_r.erase("r");
  EXPECT_THROW(io::multidegree_from_json(no_r), PreconditionError);
  json bad_tag = j;
  bad_tag["tag"] = "surface";
  EXPECT_THROW(io::multidegree_from_json(bad_tag), PreconditionError);
  json repeated = j;
  repeated["coefficients"].push_back(repeated["coefficients"][0]);
  EXPECT_THROW(io::multidegree_from_json(repeated), PreconditionError);
}

TEST(IoTest, CamerasAndTensorRoundTrip) {
  Rng rng = trial_rng(8, 0);
  for (int k = 2; k <= 4; ++k) {
    std::vector<RationalMatrix> cams;
    for (int i = 0; i < k; ++i) {
      RationalMatrix p(3, 4);
      do {
        for (int r = 0; r < 3; ++r) {
          for (int c = 0; c < 4; ++c) p(r, c) = random_rational(rng);
        }
      } while (rank(p) < 3);
      cams.push_back(p);
    }
    const CameraConfiguration config(cams);
    const json j = json::parse(io::to_json(config).dump());
    const CameraConfiguration back = io::cameras_from_json(j);
    for (int i = 0; i < k; ++i) EXPECT_EQ(back.camera(i), config.camera(i));
    const BetaVector beta{k == 2 ? std::vector<int>{2, 2}
                                 : k == 3 ? std::vector<int>{2, 1, 1} : std::vector<int>{1, 1, 1, 1}};
    const MultifocalTensor t = multifocal_tensor(config, beta);
    EXPECT_EQ(io::tensor_from_json(json::parse(io::to_json(t).dump())), t);
  }
}

TEST(IoTest, TensorOmitsZerosWithOneBasedIndices) {
  const json j = io::to_json(multifocal_tensor(testing::two_translated_cameras(), BetaVector{{2, 2}}));
  EXPECT_EQ(j.dump(),
            R"({"beta":[2,2],"entries":[{"index":[2,3],"value":"-1"},{"index":[3,2],"value":"1"}]})");
  json bad = j;
  bad["entries"][0]["index"] = json::array({0, 3});
  EXPECT_THROW(io::tensor_from_json(bad), PreconditionError);
}

TEST(IoTest, ValidationReportAndCounts) {
  const ValidationReport report =
      validate_rank_function(SpaceSignature({2, 2}, 0), RankFunction(2, {0, 1, 0, 0}));
  const json j = io::to_json(report);
  EXPECT_FALSE(j["ok"].get<bool>());
  bool witness = false;
  for (const json& v : j["violations"]) {
    witness = witness || (v["axiom"] == "monotone" && v["I"] == json::array({1}) &&
                          v["J"] == json::array({1, 2}));
  }
  EXPECT_TRUE(witness);
  EXPECT_EQ(io::to_json(TrialCount::non_finite()), "non-finite");
  EXPECT_EQ(io::to_json(TrialCount{true, 1}), 1);
}

}  // namespace
}  // namespace chowform
