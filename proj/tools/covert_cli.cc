// Copyright 2026 The Covert Cover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// covert_cli: generators, experiments and benchmarks for covert set cover
// and layered-query network discovery.
//
// Exit codes: 0 success, 1 library error, 2 usage error, 3 at least one
// trial produced an invalid cover. Errors are reported on stderr as a single
// JSON object {"error": <code>, "message": <text>}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covert/discovery.h"
#include "covert/errors.h"
#include "covert/experiment.h"
#include "covert/generators.h"
#include "covert/graph.h"
#include "covert/oracle.h"
#include "covert/set_system.h"
#include "json.hpp"

namespace covert {
namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidCover = 3;

struct CommonFlags {
  std::string out;
  std::string format = "json";
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "Output path (default: stdout)");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void ReportError(std::string_view code, std::string_view message) {
  std::cerr << nlohmann::json{{"error", code}, {"message", message}}.dump()
            << "\n";
}

void WriteOutput(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(flags.out);
  if (!file) {
    throw CoverError(ErrorCode::kIo, "cannot open " + flags.out);
  }
  file << text;
  if (!file) throw CoverError(ErrorCode::kIo, "failed writing " + flags.out);
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw CoverError(ErrorCode::kIo, "cannot open " + path);
  try {
    return nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     path + ": " + std::string(e.what()));
  }
}

std::vector<uint64_t> SeedRange(uint64_t first, int count) {
  if (count < 1) {
    throw CoverError(ErrorCode::kInvalidArgument, "--trials must be >= 1");
  }
  std::vector<uint64_t> seeds(count);
  for (int i = 0; i < count; ++i) seeds[i] = first + i;
  return seeds;
}

int ExitForReport(const Report& report) {
  const int invalid =
      static_cast<int>(report.trials.size()) - report.valid_count();
  if (invalid == 0) return 0;
  ReportError("invalid_cover", std::to_string(invalid) + " of " +
                                   std::to_string(report.trials.size()) +
                                   " trials returned an invalid cover");
  return kExitInvalidCover;
}

std::string EdgeCsv(const Graph& g) {
  std::ostringstream out;
  out << "u,v\n";
  for (const auto& [u, w] : g.edges()) out << u << "," << w << "\n";
  return out.str();
}

// Options shared by the generator-backed subcommands.
struct GraphFlags {
  std::string model = "er-connected";
  GraphParams params;
};

void AddGraphFlags(CLI::App* cmd, GraphFlags& flags) {
  cmd->add_option("--model", flags.model,
                  "path|cycle|complete|star|er-connected|grid");
  cmd->add_option("--n", flags.params.n, "Vertex count");
  cmd->add_option("--p", flags.params.p, "Edge probability (er-connected)");
  cmd->add_option("--rows", flags.params.rows, "Grid rows");
  cmd->add_option("--cols", flags.params.cols, "Grid columns");
  cmd->add_option("--max-retries", flags.params.max_retries,
                  "Connectivity retries (er-connected)");
}

struct SetFlags {
  std::string model = "planted-cover";
  SetParams params;
};

void AddSetFlags(CLI::App* cmd, SetFlags& flags) {
  cmd->add_option("--model", flags.model,
                  "uniform-random|planted-cover|skewed");
  cmd->add_option("--universe", flags.params.universe_size, "Element count");
  cmd->add_option("--sets", flags.params.num_sets, "Set count");
  cmd->add_option("--density", flags.params.density,
                  "Membership probability (uniform-random)");
  cmd->add_option("--k", flags.params.planted_k, "Planted cover size");
  cmd->add_option("--decoy-max", flags.params.decoy_max_size,
                  "Largest decoy set (planted-cover, 0 = unrestricted)");
}

int Run(int argc, char** argv) {
  CLI::App app{"Covert set cover and layered-query network discovery"};
  app.require_subcommand(1);

  // gen-graph
  CommonFlags gg_common;
  GraphFlags gg_graph;
  uint64_t gg_seed = 0;
  auto* gen_graph = app.add_subcommand("gen-graph", "Generate a graph");
  AddCommonFlags(gen_graph, gg_common);
  AddGraphFlags(gen_graph, gg_graph);
  gen_graph->add_option("--seed", gg_seed, "Seed");

  // gen-sets
  CommonFlags gs_common;
  SetFlags gs_sets;
  uint64_t gs_seed = 0;
  auto* gen_sets = app.add_subcommand("gen-sets", "Generate a set system");
  AddCommonFlags(gen_sets, gs_common);
  AddSetFlags(gen_sets, gs_sets);
  gen_sets->add_option("--seed", gs_seed, "Seed");

  // setcover
  CommonFlags sc_common;
  SetFlags sc_sets;
  std::string sc_algo = "pseudo-greedy";
  std::string sc_instance;
  double sc_alpha = 8.0;
  double sc_theta = 1.0;
  uint64_t sc_seed = 0;
  int sc_trials = 1;
  bool sc_opt = false;
  EpsilonNetOptions sc_epsnet;
  auto* setcover = app.add_subcommand("setcover", "Run a set-cover algorithm");
  AddCommonFlags(setcover, sc_common);
  AddSetFlags(setcover, sc_sets);
  setcover->add_option("--algo", sc_algo)
      ->check(CLI::IsMember({"pseudo-greedy", "epsnet", "greedy", "bruteforce"}));
  setcover->add_option("--instance", sc_instance,
                       "Set system JSON (default: generate one per seed)");
  setcover->add_option("--alpha", sc_alpha, "Threshold constant");
  setcover->add_option("--theta", sc_theta, "Greedy relaxation in (0, 1]");
  setcover->add_option("--seed", sc_seed, "First seed");
  setcover->add_option("--trials", sc_trials, "Number of consecutive seeds");
  setcover->add_flag("--opt", sc_opt, "Brute-force OPT for ratio columns");
  setcover->add_option("--c-net", sc_epsnet.c_net, "eps-net size constant");
  setcover->add_option("--c-iter", sc_epsnet.c_iter,
                       "eps-net iteration constant");

  // discover
  CommonFlags di_common;
  GraphFlags di_graph;
  std::string di_graph_path;
  double di_alpha = 8.0;
  uint64_t di_seed = 0;
  int di_trials = 1;
  bool di_opt = false;
  bool di_trace = false;
  auto* discover =
      app.add_subcommand("discover", "Run layered-query network discovery");
  AddCommonFlags(discover, di_common);
  AddGraphFlags(discover, di_graph);
  discover->add_option("--graph", di_graph_path,
                       "Graph JSON (default: generate one per seed)");
  discover->add_option("--alpha", di_alpha, "Threshold constant");
  discover->add_option("--seed", di_seed, "First seed");
  discover->add_option("--trials", di_trials, "Number of consecutive seeds");
  discover->add_flag("--opt", di_opt, "Exact verification OPT for ratios");
  discover->add_flag("--trace", di_trace,
                     "Emit the full run (rounds, query set, pairs) for the "
                     "first seed instead of a report");

  // verify
  CommonFlags ve_common;
  std::string ve_graph_path;
  std::string ve_mode = "exact";
  auto* verify = app.add_subcommand("verify", "Offline network verification");
  AddCommonFlags(verify, ve_common);
  verify->add_option("--graph", ve_graph_path, "Graph JSON")->required();
  verify->add_option("--mode", ve_mode)
      ->check(CLI::IsMember({"exact", "greedy"}));

  // lemma-test
  CommonFlags lt_common;
  double lt_alpha = 8.0;
  int64_t lt_scale_n = int64_t{1} << 20;
  double lt_scale = 1024.0;
  int lt_trials = 10000;
  uint64_t lt_seed = 0;
  auto* lemma = app.add_subcommand(
      "lemma-test", "Sampling concentration at a single round");
  AddCommonFlags(lemma, lt_common);
  lemma->add_option("--alpha", lt_alpha, "Threshold constant");
  lemma->add_option("--N", lt_scale_n, "Instance scale N");
  lemma->add_option("--s", lt_scale, "Round scale s_i");
  lemma->add_option("--trials", lt_trials, "Monte Carlo trials");
  lemma->add_option("--seed", lt_seed, "Seed");

  // bench
  CommonFlags be_common;
  BenchConfig be_config;
  uint64_t be_seed = 0;
  int be_trials = 20;
  auto* bench =
      app.add_subcommand("bench", "Pseudo-greedy vs eps-net across planted k");
  AddCommonFlags(bench, be_common);
  bench->add_option("--universe", be_config.universe_size, "Element count");
  bench->add_option("--sets", be_config.num_sets, "Set count");
  bench->add_option("--decoy-max", be_config.decoy_max_size,
                    "Largest decoy set (0 = unrestricted)");
  bench->add_option("--ks", be_config.planted_ks, "Planted cover sizes");
  bench->add_option("--alpha", be_config.alpha, "Pseudo-greedy threshold");
  bench->add_option("--seed", be_seed, "First seed");
  bench->add_option("--trials", be_trials, "Seeds per planted k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ReportError("usage", e.what());
    return kExitUsage;
  }

  if (*gen_graph) {
    const Graph g = GenerateGraph(ParseGraphModel(gg_graph.model),
                                  gg_graph.params, gg_seed);
    WriteOutput(gg_common,
                gg_common.format == "csv" ? EdgeCsv(g) : Dump(g.ToJson()));
    return 0;
  }

  if (*gen_sets) {
    const GeneratedSetSystem gen = GenerateSetSystem(
        ParseSetModel(gs_sets.model), gs_sets.params, gs_seed);
    if (gs_common.format == "csv") {
      std::ostringstream out;
      out << "set,element\n";
      for (SetIndex s = 1; s <= gen.system.num_sets(); ++s) {
        for (ElementId e : gen.system.set(s)) out << s << "," << e << "\n";
      }
      WriteOutput(gs_common, out.str());
    } else {
      nlohmann::json j = gen.system.ToJson();
      j["metadata"] = gen.Metadata();
      WriteOutput(gs_common, Dump(j));
    }
    return 0;
  }

  if (*setcover) {
    ExperimentConfig config{.algorithm = ParseAlgorithm(sc_algo),
                            .set_model = ParseSetModel(sc_sets.model),
                            .set_params = sc_sets.params,
                            .alpha = sc_alpha,
                            .theta = sc_theta,
                            .epsnet = sc_epsnet,
                            .compute_opt = sc_opt,
                            .seeds = SeedRange(sc_seed, sc_trials)};
    if (!sc_instance.empty()) {
      config.instance = SetSystem::FromJson(ReadJsonFile(sc_instance));
    }
    const Report report = RunExperiment(config);
    WriteOutput(sc_common, sc_common.format == "csv" ? report.ToCsv()
                                                     : Dump(report.ToJson()));
    return ExitForReport(report);
  }

  if (*discover) {
    std::optional<Graph> graph;
    if (!di_graph_path.empty()) {
      graph = Graph::FromJson(ReadJsonFile(di_graph_path));
    }
    if (di_trace) {
      const Graph g = graph ? *graph
                            : GenerateGraph(ParseGraphModel(di_graph.model),
                                            di_graph.params, di_seed);
      GraphOracle oracle(std::make_shared<const Graph>(g));
      const DiscoveryResult result =
          RunNetworkDiscovery(oracle, {.alpha = di_alpha, .seed = di_seed});
      std::optional<double> ratio;
      if (di_opt) {
        ratio = CompetitiveRatio(
            result, OfflineVerification(g, VerificationMode::kExact).size());
      }
      WriteOutput(di_common, Dump(result.ToJson(ratio)));
      return 0;
    }
    ExperimentConfig config{.algorithm = Algorithm::kDiscover,
                            .graph = graph,
                            .graph_model = ParseGraphModel(di_graph.model),
                            .graph_params = di_graph.params,
                            .alpha = di_alpha,
                            .compute_opt = di_opt,
                            .seeds = SeedRange(di_seed, di_trials)};
    const Report report = RunExperiment(config);
    WriteOutput(di_common, di_common.format == "csv" ? report.ToCsv()
                                                     : Dump(report.ToJson()));
    return ExitForReport(report);
  }

  if (*verify) {
    const Graph g = Graph::FromJson(ReadJsonFile(ve_graph_path));
    const VerificationMode mode = ve_mode == "exact"
                                      ? VerificationMode::kExact
                                      : VerificationMode::kGreedy;
    const VerificationResult result = OfflineVerification(g, mode);
    if (ve_common.format == "csv") {
      std::ostringstream out;
      out << "vertex\n";
      for (Vertex v : result.query_set) out << v << "\n";
      WriteOutput(ve_common, out.str());
    } else {
      WriteOutput(ve_common, Dump({{"mode", ve_mode},
                                   {"n", g.num_vertices()},
                                   {"size", result.size()},
                                   {"query_set", result.query_set}}));
    }
    return 0;
  }

  if (*lemma) {
    const ConcentrationReport r = LemmaConcentrationTest(
        lt_alpha, lt_scale_n, lt_scale, lt_trials, lt_seed);
    if (lt_common.format == "csv") {
      std::ostringstream out;
      out << "set_size,crossings,rate,mean_hits\n";
      for (const ConcentrationRow* row : {&r.half, &r.full, &r.eighth}) {
        out << row->set_size << "," << row->crossings << "," << row->rate
            << "," << row->mean_hits << "\n";
      }
      WriteOutput(lt_common, out.str());
    } else {
      WriteOutput(lt_common, Dump(r.ToJson()));
    }
    return 0;
  }

  if (*bench) {
    be_config.seeds = SeedRange(be_seed, be_trials);
    const BenchReport r = RunBench(be_config);
    if (be_common.format == "csv") {
      std::ostringstream out;
      out << "k,algorithm,queries_median,queries_p95,cover_median,valid,runs,"
             "iterations_median\n";
      for (const BenchRow& row : r.rows) {
        out << row.k << "," << row.algorithm << "," << row.queries.median
            << "," << row.queries.p95 << "," << row.cover_size.median << ","
            << row.valid << "," << row.runs << ","
            << row.iterations_at_success.median << "\n";
      }
      WriteOutput(be_common, out.str());
    } else {
      WriteOutput(be_common, Dump(r.ToJson()));
    }
    return 0;
  }
  return 0;
}

}  // namespace
}  // namespace covert

int main(int argc, char** argv) {
  try {
    return covert::Run(argc, argv);
  } catch (const covert::CoverError& e) {
    covert::ReportError(covert::ErrorCodeName(e.code()), e.what());
    return covert::kExitError;
  } catch (const std::exception& e) {
    covert::ReportError("internal", e.what());
    return covert::kExitError;
  }
}
