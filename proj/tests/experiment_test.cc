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

#include "covert/experiment.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "covert/errors.h"
#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace covert {
namespace {

std::vector<uint64_t> Seeds(int n) {
  std::vector<uint64_t> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

TEST(SummarizeTest, NearestRank) {
  const Summary s = Summarize({10, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_EQ(s.median, 5);
  EXPECT_EQ(s.p95, 10);
  EXPECT_DOUBLE_EQ(s.mean, 5.5);
  const Summary empty = Summarize({});
  EXPECT_EQ(empty.median, 0);
  EXPECT_EQ(empty.mean, 0);
}

TEST(FitPowerLawTest, RecoversExponent) {
  const std::vector<double> x = {1, 2, 4, 8};
  std::vector<double> y;
  for (double v : x) y.push_back(3 * v * v);
  EXPECT_NEAR(FitPowerLawExponent(x, y), 2.0, 1e-12);
  const std::vector<double> one = {1};
  EXPECT_THROW(FitPowerLawExponent(one, one), CoverError);
}

TEST(AlgorithmNameTest, RoundTrip) {
  for (const char* name : {"pseudo-greedy", "epsnet", "greedy", "bruteforce",
                           "discover", "verify"}) {
    EXPECT_EQ(AlgorithmName(ParseAlgorithm(name)), name);
  }
  EXPECT_THROW(ParseAlgorithm("lp"), CoverError);
}

TEST(RunExperimentTest, RequiresSeeds) {
  EXPECT_THROW(RunExperiment({}), CoverError);
}

TEST(RunExperimentTest, BruteForceCap) {
  ExperimentConfig config{.algorithm = Algorithm::kBruteForce,
                          .set_params = {.num_sets = 21},
                          .seeds = {1}};
  try {
    RunExperiment(config);
    FAIL();
  } catch (const CoverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(RunExperimentTest, SetCoverAlgorithmsAreValidatedPostHoc) {
  for (Algorithm algo : {Algorithm::kPseudoGreedy, Algorithm::kEpsNet,
                         Algorithm::kGreedy, Algorithm::kBruteForce}) {
    ExperimentConfig config{.algorithm = algo,
                            .set_params = {.universe_size = 16,
                                           .num_sets = 8,
                                           .planted_k = 3},
                            .compute_opt = true,
                            .seeds = {5, 1, 3}};
    const Report r = RunExperiment(config);
    ASSERT_EQ(r.trials.size(), 3u);
    EXPECT_TRUE(std::ranges::is_sorted(
        r.trials, {}, [](const TrialRecord& t) { return t.seed; }));
    EXPECT_EQ(r.valid_count(), 3) << AlgorithmName(algo);
    for (const TrialRecord& t : r.trials) {
      ASSERT_TRUE(t.opt.has_value());
      EXPECT_EQ(*t.opt, 3);
      EXPECT_GE(*t.ratio, 1.0);
    }
  }
}

TEST(RunExperimentTest, UncoverableInstanceIsInvalid) {
  ExperimentConfig config{.algorithm = Algorithm::kPseudoGreedy,
                          .instance = SetSystem::Build({{1}, {2}}, 3),
                          .seeds = {1, 2}};
  const Report r = RunExperiment(config);
  EXPECT_EQ(r.valid_count(), 0);
  EXPECT_TRUE(r.trials[0].failed);
}

TEST(RunExperimentTest, DeterministicApartFromTimestamps) {
  ExperimentConfig config{.algorithm = Algorithm::kPseudoGreedy,
                          .set_params = {.universe_size = 128,
                                         .num_sets = 16,
                                         .planted_k = 4},
                          .alpha = 1.0,
                          .seeds = Seeds(6)};
  EXPECT_EQ(RunExperiment(config).ToJson(true),
            RunExperiment(config).ToJson(true));
  const nlohmann::json full = RunExperiment(config).ToJson();
  EXPECT_TRUE(full.contains("generated_at"));
  EXPECT_TRUE(full["trials"][0].contains("runtime_ms"));
}

TEST(RunExperimentTest, AggregatesRecomputeFromTrials) {
  ExperimentConfig config{.algorithm = Algorithm::kEpsNet,
                          .set_params = {.universe_size = 16,
                                         .num_sets = 8,
                                         .planted_k = 2},
                          .seeds = Seeds(9)};
  const Report r = RunExperiment(config);
  std::vector<double> queries;
  for (const TrialRecord& t : r.trials) queries.push_back(t.ledger.total());
  const nlohmann::json agg = r.Aggregates();
  EXPECT_EQ(agg["queries"]["median"], Summarize(queries).median);
  EXPECT_EQ(agg["trials"], 9);
  EXPECT_EQ(agg["valid_fraction"], 1.0);
}

TEST(RunExperimentTest, CsvHasHeaderAndOneLinePerTrial) {
  ExperimentConfig config{.algorithm = Algorithm::kGreedy, .seeds = Seeds(4)};
  const std::string csv = RunExperiment(config).ToCsv();
  EXPECT_EQ(std::ranges::count(csv, '\n'), 5);
  EXPECT_TRUE(csv.starts_with("seed,cover_size,valid"));
}

TEST(RunExperimentTest, DiscoveryAndVerification) {
  ExperimentConfig discover{.algorithm = Algorithm::kDiscover,
                            .graph_params = {.n = 10, .p = 0.3},
                            .compute_opt = true,
                            .seeds = Seeds(4)};
  const Report d = RunExperiment(discover);
  EXPECT_EQ(d.valid_count(), 4);
  for (const TrialRecord& t : d.trials) {
    ASSERT_TRUE(t.ratio.has_value());
    EXPECT_DOUBLE_EQ(*t.ratio, static_cast<double>(t.ledger.layered) / *t.opt);
  }
  ExperimentConfig verify{.algorithm = Algorithm::kVerify,
                          .graph = testing::G6(),
                          .seeds = {0}};
  EXPECT_EQ(RunExperiment(verify).trials[0].cover_size, 2);
}

TEST(LemmaTest, ConcentrationAtReferenceScale) {
  const ConcentrationReport r =
      LemmaConcentrationTest(8.0, int64_t{1} << 20, 1024.0, 2000, 1);
  EXPECT_DOUBLE_EQ(r.threshold, 160.0);
  EXPECT_DOUBLE_EQ(r.probability, 0.625);
  EXPECT_EQ(r.half.set_size, 512);
  EXPECT_EQ(r.eighth.set_size, 128);
  EXPECT_GE(r.half.rate, 0.99);
  EXPECT_LE(r.eighth.rate, 0.01);
  EXPECT_NEAR(r.half.mean_hits, 320.0, 1.0);
  EXPECT_THROW(LemmaConcentrationTest(8.0, 1 << 20, 1024.0, 0, 1),
               CoverError);
}

TEST(BenchTest, RowsAndExponents) {
  BenchConfig config{.universe_size = 32, .num_sets = 16, .seeds = Seeds(3)};
  const BenchReport r = RunBench(config);
  ASSERT_EQ(r.rows.size(), 12u);
  for (const BenchRow& row : r.rows) EXPECT_EQ(row.valid, row.runs);
  EXPECT_TRUE(std::isfinite(r.epsnet_exponent));
  EXPECT_TRUE(std::isfinite(r.pseudo_greedy_exponent));
  const nlohmann::json j = r.ToJson();
  EXPECT_TRUE(j["query_exponent"].contains("epsnet"));
  EXPECT_EQ(RunBench(config).ToJson(), j);
}

}  // namespace
}  // namespace covert
