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

#include "chowform/cli.hpp"

#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace chowform {
namespace {

using cli::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input) {
  std::vector<const char*> argv{"chowform"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string multiview_input(int k) { return io::to_json(multiview_multidegree(k)).dump(); }

std::string cameras_input(const CameraConfiguration& config, json extra = json::object()) {
  json j = io::to_json(config);
  j.update(extra);
  return j.dump();
}

CameraConfiguration generic(int k, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 0);
  return random_generic_configuration(k, rng);
}

TEST(CliTest, BetasDetermining) {
  const Outcome o = invoke({"betas", "--criterion", "determining"}, multiview_input(3));
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "[[1,1,2],[1,2,1],[2,1,1]]\n");
}

TEST(CliTest, BetasFromRankFunction) {
  json in{{"n", {2, 2, 2, 2}}, {"rank_function", io::to_json(testing::multiview_delta(4))}};
  const Outcome o = invoke({"betas", "--criterion", "determining"}, in.dump());
  EXPECT_EQ(o.out, "[[1,1,1,1]]\n");
}

TEST(CliTest, AnalyzeFrobenius) {
  const Outcome o = invoke({"analyze", "--beta", "1,2"}, io::to_json(testing::frobenius(2)).dump());
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_TRUE(j["hypersurface"].get<bool>());
  EXPECT_TRUE(j["determines"].get<bool>());
  EXPECT_EQ(j["chow_degree"], json::array({"4", "2"}));
  EXPECT_EQ(j["minimal_tight_set"], json::array({1, 2}));
  EXPECT_TRUE(j["circuit"].get<bool>());
}

TEST(CliTest, AnalyzeAllBeta) {
  const Outcome o = invoke({"analyze", "--all-beta"}, io::to_json(testing::product_of_curves(2, 3)).dump());
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  ASSERT_TRUE(j.is_array());
  bool seen = false;
  for (const json& row : j) {
    if (row["beta"] != json::array({1, 2})) continue;
    seen = true;
    EXPECT_TRUE(row["hypersurface"].get<bool>());
    EXPECT_FALSE(row["determines"].get<bool>());
    EXPECT_EQ(row["chow_degree"], json::array({"0", "6"}));
  }
  EXPECT_TRUE(seen);
}

TEST(CliTest, SupportWithEmptyCoefficients) {
  const Outcome o = invoke({"support"}, R"({"n":[2,2],"r":2,"coefficients":[]})");
  EXPECT_EQ(o.code, 2);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(json::parse(o.err)["status"], "precondition-failed");
}

TEST(CliTest, SupportAndProjections) {
  json rank_in{{"n", {2, 2}}, {"r", 2}, {"rank_function", io::to_json(RankFunction(2, {0, 2, 2, 2}))}};
  EXPECT_EQ(invoke({"support"}, rank_in.dump()).out, "{\"support\":[[0,2],[1,1],[2,0]]}\n");
  const Outcome p = invoke({"projections"}, R"({"n":[2,2],"support":[[1,1]]})");
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(io::rank_function_from_json(json::parse(p.out)), RankFunction(2, {0, 1, 1, 2}));
}

TEST(CliTest, ValidateRank) {
  json in{{"n", {2, 2}}, {"r", 0}, {"rank_function", io::to_json(RankFunction(2, {0, 1, 0, 0}))}};
  const Outcome o = invoke({"validate-rank"}, in.dump());
  EXPECT_EQ(o.code, 0);
  EXPECT_FALSE(json::parse(o.out)["ok"].get<bool>());
}

TEST(CliTest, ChowDegreeSliceAdd) {
  EXPECT_EQ(invoke({"chow-degree", "--beta", "2,1"}, io::to_json(testing::frobenius(2)).dump()).out,
            "{\"beta\":[2,1],\"chow_degree\":[\"2\",\"1\"]}\n");
  const Outcome s = invoke({"slice", "--subset", "1", "--beta", "2,1,1"}, multiview_input(3));
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(io::multidegree_from_json(json::parse(s.out)),
            slice_multidegree(multiview_multidegree(3), 0b001, BetaVector{{2, 1, 1}}));
  json ops{{"operands", {io::to_json(multiview_multidegree(2)), io::to_json(multiview_multidegree(2))}}};
  const Outcome a = invoke({"add"}, ops.dump());
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(invoke({"chow-degree", "--beta", "2,2"}, a.out).out,
            "{\"beta\":[2,2],\"chow_degree\":[\"2\",\"2\"]}\n");
}

TEST(CliTest, InapplicableAndCycleTag) {
  const std::string gap = R"({"n":[2,2],"r":2,"coefficients":[{"gamma":[2,0],"a":"1"},{"gamma":[0,2],"a":"1"}]})";
  const Outcome o = invoke({"analyze", "--beta", "1,2"}, gap);
  EXPECT_EQ(o.code, 4);
  EXPECT_EQ(json::parse(o.err)["status"], "inapplicable");
  const std::string fibre = R"({"n":[2,2],"r":1,"coefficients":[{"gamma":[2,1],"a":"1"}]})";
  EXPECT_EQ(invoke({"chow-degree", "--beta", "2,0"}, fibre).code, 4);
}

TEST(CliTest, MultiviewPlumbing) {
  EXPECT_EQ(invoke({"multiview-multidegree", "--k", "3"}, "").out, multiview_input(3) + "\n");
  const RationalMatrix cam = testing::camera_with_translation(1, 0, 0);
  json in{{"camera", io::to_json(cam)}, {"point", {"0", "0", "0", "1"}}};
  EXPECT_EQ(invoke({"project"}, in.dump()).out, "{\"image\":[\"1\",\"0\",\"0\"]}\n");
  const std::string two = cameras_input(testing::two_translated_cameras());
  const Outcome t = invoke({"tensor", "--beta", "2,2"}, two);
  EXPECT_EQ(t.out, "{\"beta\":[2,2],\"entries\":[{\"index\":[2,3],\"value\":\"-1\"},{\"index\":[3,2],\"value\":\"1\"}]}\n");
  json forms{{"forms", {{{1, 0, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}}}}};
  EXPECT_EQ(invoke({"residual"}, cameras_input(testing::two_translated_cameras(), forms)).out,
            "{\"value\":\"1\"}\n");
  json contract{{"tensor", json::parse(t.out)}, {"vectors", {{0, -1, 0}, {0, 0, 1}}}};
  EXPECT_EQ(invoke({"contract"}, contract.dump()).out, "{\"value\":\"1\"}\n");
}

TEST(CliTest, Oracles) {
  const std::string cams = cameras_input(generic(3, 21));
  const Outcome m = invoke({"oracle-multidegree", "--trials", "5", "--seed", "9"}, cams);
  ASSERT_EQ(m.code, 0) << m.err;
  const json results = json::parse(m.out)["results"];
  EXPECT_EQ(results.size(), 7u);
  for (const json& r : results) EXPECT_EQ(r["majority"], 1);
  const Outcome e = invoke({"oracle-epsilon", "--beta", "2,1,1", "--trials", "5"}, cams);
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out)["counts"], json::array({1, 1, 1, 1, 1}));
}

TEST(CliTest, SzTest) {
  const CameraConfiguration config = generic(3, 22);
  json cand = json::array();
  cand.push_back(io::to_json(std::span<const Rational>(multiply<Rational>(config.camera(0), config.center(1)))));
  cand.push_back(io::to_json(std::span<const Rational>(multiply<Rational>(config.camera(1), config.center(0)))));
  cand.push_back({"3", "-7", "2"});
  const Outcome o = invoke({"sz-test", "--beta", "2,1,1"}, cameras_input(config, {{"candidate", cand}}));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(json::parse(o.out)["member"].get<bool>());
}

TEST(CliTest, DegenerateCamerasWarn) {
  const CameraConfiguration collinear({testing::camera_with_translation(0, 0, 0),
                                       testing::camera_with_translation(1, 0, 0),
                                       testing::camera_with_translation(2, 0, 0)});
  const Outcome o = invoke({"tensor", "--beta", "2,1,1"}, cameras_input(collinear));
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST(CliTest, ErrorsAreMachineReadable) {
  for (const auto& [args, input] : std::vector<std::pair<std::vector<std::string>, std::string>>{
           {{"bogus"}, "{}"},
           {{"support"}, "{not json"},
           {{"betas", "--criterion", "sometimes"}, multiview_input(3)},
           {{"analyze"}, multiview_input(3)},
           {{"tensor", "--beta", "1,1,1,1,0"}, cameras_input(generic(5, 23))},
           {{"betas", "--trials", "0"}, multiview_input(3)},
       }) {
    const Outcome o = invoke(args, input);
    EXPECT_EQ(o.code, 2) << args.front();
    EXPECT_TRUE(o.out.empty());
    const json e = json::parse(o.err);
    EXPECT_EQ(e["status"], "precondition-failed");
    EXPECT_TRUE(e["error"].is_string());
  }
  EXPECT_NE(invoke({}, "").code, 0);
}

TEST(CliTest, ByteIdenticalAcrossRuns) {
  const std::string cams = cameras_input(generic(3, 24));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"oracle-multidegree", "--seed", "123"},
           {"oracle-epsilon", "--beta", "1,2,1", "--seed", "5"},
           {"tensor", "--beta", "1,1,2", "--format", "pretty"},
       }) {
    const Outcome a = invoke(args, cams);
    const Outcome b = invoke(args, cams);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const Outcome pretty = invoke({"analyze", "--all-beta", "--format", "pretty"}, multiview_input(3));
  const Outcome compact = invoke({"analyze", "--all-beta"}, multiview_input(3));
  EXPECT_EQ(json::parse(pretty.out), json::parse(compact.out));
  EXPECT_NE(pretty.out, compact.out);
}

TEST(CliTest, EveryOperationHasOneSubcommand) {
  const auto& table = cli::operation_table();
  std::set<std::string> ops;
  std::set<std::string> used;
  for (const auto& [op, sub] : table) {
    EXPECT_TRUE(ops.insert(op).second) << op << " listed twice";
    EXPECT_TRUE(cli::detail::handlers().contains(sub)) << sub;
    used.insert(sub);
  }
  for (const auto& [sub, handler] : cli::detail::handlers()) EXPECT_TRUE(used.contains(sub)) << sub;
  const std::set<std::string> required{
      "validate_rank_function", "support_from_projections", "projections_from_support",
      "is_one_deficient", "minimal_tight_set", "is_circuit", "enumerate_beta",
      "criterion_form", "is_hypersurface", "determines_variety", "chow_form_multidegree",
      "slice_multidegree", "multidegree_add", "project_point", "multiview_multidegree",
      "chow_residual", "multifocal_tensor", "tensor_contract", "intersection_count_oracle",
      "epsilon_oracle", "sz_membership"};
  EXPECT_EQ(ops, required);
}

TEST(CliTest, Help) {
  const Outcome o = invoke({"--help"}, "");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("oracle-epsilon"), std::string::npos);
}

}  // namespace
}  // namespace chowform
