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

// Seeded experiment runner. Every trial owns its instance, oracle, RNG and
// ledger; covers are validated post hoc against the hidden instance, which is
// the only notion of validity the reports use.

#ifndef COVERT_EXPERIMENT_H_
#define COVERT_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covert/discovery.h"
#include "covert/epsilon_net.h"
#include "covert/generators.h"
#include "covert/oracle.h"
#include "covert/set_system.h"
#include "json.hpp"

namespace covert {

enum class Algorithm {
  kPseudoGreedy,
  kEpsNet,
  kGreedy,
  kBruteForce,
  kDiscover,
  kVerify,
};

Algorithm ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(Algorithm algorithm);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kPseudoGreedy;

  // Set-cover instance: a fixed system, or one generated per seed.
  std::optional<SetSystem> instance;
  SetModel set_model = SetModel::kPlantedCover;
  SetParams set_params;

  // Graph instance for discover/verify: fixed, or generated per seed.
  std::optional<Graph> graph;
  GraphModel graph_model = GraphModel::kErConnected;
  GraphParams graph_params;

  double alpha = 8.0;
  double theta = 1.0;
  EpsilonNetOptions epsnet;
  VerificationMode verify_mode = VerificationMode::kExact;
  int brute_force_cap = kDefaultBruteForceCap;
  // Brute-force OPT per trial (set cover) or exact verification OPT
  // (discover) for ratio columns, when within the caps.
  bool compute_opt = false;

  std::vector<uint64_t> seeds;

  nlohmann::json ToJson() const;
};

struct TrialRecord {
  uint64_t seed = 0;
  int cover_size = 0;
  bool valid = false;
  bool failed = false;
  QueryCounts ledger;
  int rounds = 0;
  std::optional<int> opt;
  // cover_size / opt for set cover; layered queries / opt for discovery.
  std::optional<double> ratio;
  // Wall clock; excluded from determinism comparisons.
  double runtime_ms = 0.0;

  nlohmann::json ToJson(bool with_runtime = true) const;
};

struct Summary {
  double median = 0.0;
  double p95 = 0.0;
  double mean = 0.0;
};

// Nearest-rank percentiles. Empty input gives zeros.
Summary Summarize(std::vector<double> values);

struct Report {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;  // sorted by seed
  // Wall-clock creation time (ISO 8601). The only non-deterministic field
  // besides per-trial runtimes.
  std::string generated_at;

  int valid_count() const;
  // Recomputed from `trials` on every call.
  nlohmann::json Aggregates() const;
  // `deterministic` drops generated_at and runtimes, for golden diffs.
  nlohmann::json ToJson(bool deterministic = false) const;
  std::string ToCsv() const;
};

// Throws CoverError on invalid configuration (no seeds, exact-mode caps).
Report RunExperiment(const ExperimentConfig& config);

// Bernoulli-sampling concentration check for one round of Pseudo-Greedy:
// synthetic sets of size s_i/2, s_i and s_i/8 are sampled with the round
// probability, and the fraction of trials reaching alpha log2(N) hits is
// reported per size.
struct ConcentrationRow {
  int64_t set_size = 0;
  int64_t crossings = 0;
  double rate = 0.0;
  double mean_hits = 0.0;
};
struct ConcentrationReport {
  double alpha = 0.0;
  int64_t scale_n = 0;
  double scale = 0.0;
  int trials = 0;
  double threshold = 0.0;
  double probability = 0.0;
  ConcentrationRow half;    // s_i / 2
  ConcentrationRow full;    // s_i
  ConcentrationRow eighth;  // s_i / 8

  nlohmann::json ToJson() const;
};

ConcentrationReport LemmaConcentrationTest(double alpha, int64_t scale_n,
                                           double scale, int trials,
                                           uint64_t seed);

// Least-squares slope of log(y) against log(x).
double FitPowerLawExponent(std::span<const double> x,
                           std::span<const double> y);

// Head-to-head on planted-cover instances across planted sizes k.
struct BenchConfig {
  int universe_size = 1024;
  int num_sets = 4096;
  int decoy_max_size = 0;
  std::vector<int> planted_ks = {1, 2, 4, 8};
  std::vector<uint64_t> seeds;
  double alpha = 8.0;
  EpsilonNetOptions epsnet;
};
struct BenchRow {
  int k = 0;
  std::string algorithm;
  Summary queries;
  Summary cover_size;
  int valid = 0;
  int runs = 0;
  // Iterations spent at the successful guess (eps-net only).
  Summary iterations_at_success;
};
struct BenchReport {
  BenchConfig config;
  std::vector<BenchRow> rows;
  // Fitted exponent of median total queries in k, per algorithm.
  double epsnet_exponent = 0.0;
  double pseudo_greedy_exponent = 0.0;

  nlohmann::json ToJson() const;
};

BenchReport RunBench(const BenchConfig& config);

}  // namespace covert

#endif  // COVERT_EXPERIMENT_H_
