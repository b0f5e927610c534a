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

// Command-line front end. Every subcommand reads one JSON document (from
// --input or standard input), runs library operations, and produces a
// CommandResult. run_main() prints the payload as canonical JSON on stdout
// and errors as a JSON object on stderr; the exit code is
//   0 ok, 2 precondition failed, 3 degenerate input, 4 inapplicable.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chowform/error.hpp"
#include "chowform/io.hpp"
#include "chowform/multidegree.hpp"
#include "chowform/multiview.hpp"
#include "chowform/polymatroid.hpp"

namespace chowform::cli {

using json = nlohmann::json;

struct CommandResult {
  Status status = Status::ok;
  json payload;
  std::vector<std::string> diagnostics;
  std::optional<std::string> text;  // help output
  std::string format = "compact";

  int exit_code() const {
    switch (status) {
      case Status::ok:
        return 0;
      case Status::precondition_failed:
        return 2;
      case Status::degenerate_input:
        return 3;
      case Status::inapplicable:
        return 4;
    }
    return 1;
  }
};

struct Options {
  std::string input;
  std::string format = "compact";
  std::uint64_t seed = 0;
  int trials = 20;
  std::string criterion = "hypersurface";
  bool all_beta = false;
  std::string beta;
  std::string subset;
  std::string gamma;
  int k = 0;
};

/// Library operation -> the subcommand that exposes it.
inline const std::vector<std::pair<std::string, std::string>>& operation_table() {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"validate_rank_function", "validate-rank"},
      {"support_from_projections", "support"},
      {"projections_from_support", "projections"},
      {"enumerate_beta", "betas"},
      {"is_one_deficient", "analyze"},
      {"minimal_tight_set", "analyze"},
      {"is_circuit", "analyze"},
      {"criterion_form", "analyze"},
      {"is_hypersurface", "analyze"},
      {"determines_variety", "analyze"},
      {"chow_form_multidegree", "chow-degree"},
      {"slice_multidegree", "slice"},
      {"multidegree_add", "add"},
      {"project_point", "project"},
      {"multiview_multidegree", "multiview-multidegree"},
      {"multifocal_tensor", "tensor"},
      {"chow_residual", "residual"},
      {"tensor_contract", "contract"},
      {"intersection_count_oracle", "oracle-multidegree"},
      {"epsilon_oracle", "oracle-epsilon"},
      {"sz_membership", "sz-test"},
  };
  return table;
}

namespace detail {

using chowform::detail::require;

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(chowform::detail::is_integer_literal(item),
            std::string("bad ") + what + " list '" + text + "'");
    out.push_back(std::stoi(item));
  }
  require(!out.empty(), std::string("empty ") + what + " list");
  return out;
}

inline BetaVector beta_from(const Options& opt, const json& in) {
  if (!opt.beta.empty()) return BetaVector{parse_int_list(opt.beta, "beta")};
  require(in.contains("beta"), "no beta given (use --beta or a 'beta' field)");
  return BetaVector{io::detail::as_int_list(in.at("beta"), "beta")};
}

inline SubsetMask subset_from(const Options& opt, const json& in, int k) {
  const std::vector<int> idx = !opt.subset.empty()
                                   ? parse_int_list(opt.subset, "subset")
                                   : (require(in.contains("subset"),
                                              "no subset given (use --subset or a 'subset' field)"),
                                      io::detail::as_int_list(in.at("subset"), "subset"));
  return from_one_based(idx, k);
}

inline std::vector<Vec> vectors_from(const json& j, const char* what) {
  require(j.is_array(), std::string("'") + what + "' must be an array of 3-vectors");
  std::vector<Vec> out;
  for (const json& v : j) out.push_back(io::vector_from_json(v, 3));
  return out;
}

// Rank-function style input: {"n": [...], "r": r?, "rank_function": {...}}.
struct RankInput {
  SpaceSignature sig;
  RankFunction delta;
};

inline RankInput rank_input(const json& in) {
  RankFunction delta = io::rank_function_from_json(io::detail::field(in, "rank_function"));
  const std::vector<int> n = io::detail::as_int_list(io::detail::field(in, "n"), "n");
  int total = 0;
  for (int v : n) total += v;
  SpaceSignature sig = io::signature_from_json(in, std::min(delta.full(), total));
  return {std::move(sig), std::move(delta)};
}

inline json analysis(const Multidegree& md, const BetaVector& beta) {
  const SpaceSignature& sig = md.signature();
  const RankFunction delta = md.projection_dims();
  json out;
  out["beta"] = beta.values;
  out["criterion_form"] = io::to_json(criterion_form(md, beta));
  out["hypersurface"] = is_hypersurface(md, beta);
  out["determines"] = determines_variety(md, beta);
  const bool one_def = is_one_deficient(sig, delta, beta);
  out["one_deficient"] = one_def;
  out["minimal_tight_set"] =
      one_def ? json(to_one_based(minimal_tight_set(sig, delta, beta))) : json(nullptr);
  out["circuit"] = is_circuit(sig, delta, beta);
  out["chow_degree"] =
      out["hypersurface"].get<bool>() ? io::to_json(chow_form_multidegree(md, beta)) : json(nullptr);
  return out;
}

using Handler = std::function<void(const Options&, const json&, CommandResult&)>;

inline const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate-rank",
       [](const Options&, const json& in, CommandResult& res) {
         const RankInput ri = rank_input(in);
         res.payload = io::to_json(validate_rank_function(ri.sig, ri.delta));
       }},
      {"support",
       [](const Options&, const json& in, CommandResult& res) {
         if (in.contains("rank_function")) {
           const RankInput ri = rank_input(in);
           res.payload = {{"support", io::to_json(support_from_projections(ri.sig, ri.delta))}};
           return;
         }
         require(in.contains("coefficients"),
                 "support needs a rank-function or multidegree input");
         const Multidegree md = io::multidegree_from_json(in);
         require(!md.empty(), "multidegree has an empty support");
         res.payload = {{"support", io::to_json(md.support())}};
       }},
      {"projections",
       [](const Options&, const json& in, CommandResult& res) {
         if (in.contains("coefficients")) {
           const Multidegree md = io::multidegree_from_json(in);
           res.payload = io::to_json(projections_from_support(md.signature(), md.support()));
           return;
         }
         const json& list = io::detail::field(in, "support");
         require(list.is_array() && !list.empty(),
                 "rank function undefined for an empty support");
         Support support;
         for (const json& g : list) support.insert(GammaVector{io::detail::as_int_list(g, "gamma")});
         const std::vector<int> n = io::detail::as_int_list(io::detail::field(in, "n"), "n");
         int r = 0;
         const GammaVector& first = *support.begin();
         require(first.size() == static_cast<int>(n.size()), "support vector has wrong length");
         for (int i = 0; i < first.size(); ++i) r += n[i] - first[i];
         const SpaceSignature sig = io::signature_from_json(in, r);
         res.payload = io::to_json(projections_from_support(sig, support));
       }},
      {"betas",
       [](const Options& opt, const json& in, CommandResult& res) {
         require(opt.criterion == "hypersurface" || opt.criterion == "determining",
                 "--criterion must be 'hypersurface' or 'determining'");
         const Criterion c =
             opt.criterion == "hypersurface" ? Criterion::hypersurface : Criterion::determining;
         std::vector<BetaVector> betas;
         if (in.contains("rank_function")) {
           const RankInput ri = rank_input(in);
           betas = enumerate_beta(ri.sig, ri.delta, c);
         } else {
           const Multidegree md = io::multidegree_from_json(in);
           chowform::detail::require_variety(md, "betas");
           betas = enumerate_beta(md.signature(), md.projection_dims(), c);
         }
         res.payload = json::array();
         for (const BetaVector& b : betas) res.payload.push_back(b.values);
       }},
      {"analyze",
       [](const Options& opt, const json& in, CommandResult& res) {
         const Multidegree md = io::multidegree_from_json(in);
         chowform::detail::require_variety(md, "analyze");
         if (!opt.all_beta) {
           res.payload = analysis(md, beta_from(opt, in));
           return;
         }
         res.payload = json::array();
         const SpaceSignature& sig = md.signature();
         chowform::detail::for_each_composition(
             sig.dims(), sig.r() + 1, [&](const std::vector<int>& b) {
               res.payload.push_back(analysis(md, BetaVector{b}));
             });
       }},
      {"chow-degree",
       [](const Options& opt, const json& in, CommandResult& res) {
         const Multidegree md = io::multidegree_from_json(in);
         const BetaVector beta = beta_from(opt, in);
         res.payload = {{"beta", beta.values},
                        {"chow_degree", io::to_json(chow_form_multidegree(md, beta))}};
       }},
      {"slice",
       [](const Options& opt, const json& in, CommandResult& res) {
         const Multidegree md = io::multidegree_from_json(in);
         const BetaVector beta = beta_from(opt, in);
         const SubsetMask s = subset_from(opt, in, md.signature().k());
         res.payload = io::to_json(slice_multidegree(md, s, beta));
       }},
      {"add",
       [](const Options&, const json& in, CommandResult& res) {
         const json& ops = io::detail::field(in, "operands");
         require(ops.is_array() && ops.size() >= 2, "'operands' needs at least two multidegrees");
         Multidegree sum = io::multidegree_from_json(ops[0]);
         for (std::size_t i = 1; i < ops.size(); ++i) {
           sum = multidegree_add(sum, io::multidegree_from_json(ops[i]));
         }
         res.payload = io::to_json(sum);
       }},
      {"project",
       [](const Options&, const json& in, CommandResult& res) {
         const RationalMatrix cam = io::camera_from_json(io::detail::field(in, "camera"));
         const Vec point = io::vector_from_json(io::detail::field(in, "point"), 4);
         res.payload = {{"image", io::to_json(project_point(cam, point))}};
       }},
      {"multiview-multidegree",
       [](const Options& opt, const json& in, CommandResult& res) {
         const int k = opt.k != 0 ? opt.k : io::detail::as_int(io::detail::field(in, "k"), "k");
         res.payload = io::to_json(multiview_multidegree(k));
       }},
      {"tensor",
       [](const Options& opt, const json& in, CommandResult& res) {
         const CameraConfiguration config = io::cameras_from_json(in);
         const MultifocalTensor t = multifocal_tensor(config, beta_from(opt, in));
         if (!config.is_generic()) {
           res.diagnostics.push_back("camera centers are not in general position");
         }
         if (t.is_zero()) res.diagnostics.push_back("tensor vanishes identically");
         res.payload = io::to_json(t);
       }},
      {"residual",
       [](const Options&, const json& in, CommandResult& res) {
         const CameraConfiguration config = io::cameras_from_json(in);
         const json& forms = io::detail::field(in, "forms");
         require(forms.is_array(), "'forms' must be a list of form lists, one per camera");
         LinearSpaceTuple tuple;
         for (const json& factor : forms) tuple.forms.push_back(vectors_from(factor, "forms"));
         res.payload = {{"value", to_string(chow_residual(config, tuple))}};
       }},
      {"contract",
       [](const Options&, const json& in, CommandResult& res) {
         const MultifocalTensor t = io::tensor_from_json(io::detail::field(in, "tensor"));
         const std::vector<Vec> v = vectors_from(io::detail::field(in, "vectors"), "vectors");
         res.payload = {{"value", to_string(tensor_contract(t, v))}};
       }},
      {"oracle-multidegree",
       [](const Options& opt, const json& in, CommandResult& res) {
         const CameraConfiguration config = io::cameras_from_json(in);
         const int k = config.size();
         std::vector<GammaVector> gammas;
         if (!opt.gamma.empty()) {
           gammas.push_back(GammaVector{parse_int_list(opt.gamma, "gamma")});
         } else if (in.contains("gamma")) {
           gammas.push_back(GammaVector{io::detail::as_int_list(in.at("gamma"), "gamma")});
         } else {
           require(k >= 2, "need at least two cameras");
           chowform::detail::for_each_composition(
               std::vector<int>(k, 2), 2 * k - 3,
               [&](const std::vector<int>& g) { gammas.push_back(GammaVector{g}); });
         }
         json results = json::array();
         for (const GammaVector& g : gammas) {
           const auto counts = intersection_count_oracle(config, g, opt.trials, opt.seed);
           json list = json::array();
           for (const TrialCount& c : counts) list.push_back(io::to_json(c));
           const auto maj = majority(counts);
           results.push_back({{"gamma", g.values},
                              {"counts", list},
                              {"majority", maj ? io::to_json(*maj) : json(nullptr)}});
         }
         res.payload = {{"results", results}, {"seed", opt.seed}, {"trials", opt.trials}};
       }},
      {"oracle-epsilon",
       [](const Options& opt, const json& in, CommandResult& res) {
         const CameraConfiguration config = io::cameras_from_json(in);
         const BetaVector beta = beta_from(opt, in);
         if (!config.is_generic()) {
           res.diagnostics.push_back("camera centers are not in general position");
         }
         const auto counts = epsilon_oracle(config, beta, opt.trials, opt.seed);
         json list = json::array();
         for (const TrialCount& c : counts) list.push_back(io::to_json(c));
         const auto maj = majority(counts);
         res.payload = {{"beta", beta.values},
                        {"counts", list},
                        {"majority", maj ? io::to_json(*maj) : json(nullptr)},
                        {"seed", opt.seed},
                        {"trials", opt.trials}};
       }},
      {"sz-test",
       [](const Options& opt, const json& in, CommandResult& res) {
         const CameraConfiguration config = io::cameras_from_json(in);
         const BetaVector beta = beta_from(opt, in);
         if (!config.is_generic()) {
           res.diagnostics.push_back("camera centers are not in general position");
         }
         const MultifocalTensor t = multifocal_tensor(config, beta);
         const std::vector<Vec> cand = vectors_from(io::detail::field(in, "candidate"), "candidate");
         res.payload = {{"member", sz_membership(config, t, cand, opt.trials, opt.seed)},
                        {"on_variety", on_multiview_variety(config, cand)}};
       }},
  };
  return table;
}

inline json read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.input.empty()) {
    std::ifstream file(opt.input);
    require(static_cast<bool>(file), "cannot open input file '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON input: ") + e.what());
  }
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  CommandResult result;
  Options opt;
  CLI::App app{"Multigraded Cayley-Chow forms and multifocal tensors", "chowform"};
  app.require_subcommand(1);
  app.add_option("--input", opt.input, "read the input JSON from this file instead of stdin");
  app.add_option("--format", opt.format, "output whitespace: compact or pretty")
      ->check(CLI::IsMember({"compact", "pretty"}));
  app.add_option("--seed", opt.seed, "oracle seed (64-bit unsigned)");
  app.add_option("--trials", opt.trials, "oracle trials")->check(CLI::PositiveNumber);
  app.add_option("--criterion", opt.criterion, "betas: hypersurface or determining");
  app.add_flag("--all-beta", opt.all_beta, "analyze: every beta with |beta| = r + 1");
  app.add_option("--beta", opt.beta, "comma-separated beta, e.g. 2,1,1");
  app.add_option("--subset", opt.subset, "slice: comma-separated 1-based subset");
  app.add_option("--gamma", opt.gamma, "oracle-multidegree: a single gamma");
  app.add_option("--k", opt.k, "multiview-multidegree: number of cameras");
  for (const auto& entry : detail::handlers()) {
    app.add_subcommand(entry.first)->fallthrough();
  }

  if (!args.empty() && !args.front().starts_with("-") && !detail::handlers().contains(args.front())) {
    result.status = Status::precondition_failed;
    result.payload = {{"status", std::string(to_string(result.status))},
                      {"error", "unknown subcommand '" + args.front() + "'"}};
    return result;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::precondition_failed;
    result.payload = {{"status", std::string(to_string(result.status))}, {"error", e.what()}};
    return result;
  }

  result.format = opt.format;
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const bool needs_input = !(name == "multiview-multidegree" && opt.k != 0);
    const json input = needs_input ? detail::read_input(opt, in) : json::object();
    detail::handlers().at(name)(opt, input, result);
  } catch (const Error& e) {
    result.status = e.status();
    result.payload = {{"status", std::string(to_string(e.status()))}, {"error", e.what()}};
  } catch (const json::exception& e) {
    result.status = Status::precondition_failed;
    result.payload = {{"status", std::string(to_string(result.status))}, {"error", e.what()}};
  }
  return result;
}

/// Serializes a payload the way the CLI prints it.
inline std::string render(const json& payload, const std::string& format) {
  return payload.dump(format == "pretty" ? 2 : -1) + "\n";
}

inline int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CommandResult res = run(args, in);
  if (res.text) {
    out << *res.text;
    return 0;
  }
  if (res.status == Status::ok) {
    out << render(res.payload, res.format);
    for (const std::string& d : res.diagnostics) err << json{{"warning", d}}.dump() << "\n";
  } else {
    json e = res.payload;
    if (!res.diagnostics.empty()) e["diagnostics"] = res.diagnostics;
    err << e.dump() << "\n";
  }
  return res.exit_code();
}

}  // namespace chowform::cli
