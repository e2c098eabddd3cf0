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

#include "covert/pseudo_greedy.h"

#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include "covert/errors.h"
#include "covert/generators.h"
#include "covert/rng.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace covert {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::shared_ptr<const SetSystem> Share(SetSystem sys) {
  return std::make_shared<const SetSystem>(std::move(sys));
}

std::vector<ElementId> Range(int n) {
  std::vector<ElementId> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::shared_ptr<const SetSystem> Planted(int n, int m, int k, uint64_t seed) {
  return Share(GenerateSetSystem(SetModel::kPlantedCover,
                                 {.universe_size = n, .num_sets = m,
                                  .planted_k = k},
                                 seed)
                   .system);
}

TEST(ThresholdsTest, Values) {
  EXPECT_DOUBLE_EQ(HitThreshold(8.0, int64_t{1} << 20), 160.0);
  EXPECT_DOUBLE_EQ(SampleProbability(1024.0, 8.0, int64_t{1} << 20), 0.625);
  EXPECT_DOUBLE_EQ(SampleProbability(640.0, 8.0, int64_t{1} << 20), 1.0);
  EXPECT_DOUBLE_EQ(SampleProbability(10.0, 8.0, int64_t{1} << 20), 1.0);
}

TEST(DrawRoundSampleTest, ClipsToWholePopulation) {
  Rng rng(1);
  const std::vector<ElementId> uncovered = {3, 5, 9, 11};
  EXPECT_EQ(DrawRoundSample(uncovered, 100.0, 8.0, 1 << 10, rng), uncovered);
}

TEST(DrawRoundSampleTest, MeanSampleSizeWithinThreeSigma) {
  // p = 0.625 over 1024 elements: mean 640, sd 15.49 per trial, so the mean
  // of 10^4 trials lies within 640 +- 0.4648 at 3 sigma.
  const std::vector<ElementId> uncovered = Range(1024);
  Rng rng(2026);
  double total = 0.0;
  constexpr int kTrials = 10000;
  for (int t = 0; t < kTrials; ++t) {
    total += DrawRoundSample(uncovered, 1024.0, 8.0, int64_t{1} << 20, rng)
                 .size();
  }
  EXPECT_NEAR(total / kTrials, 640.0, 0.4648);
}

TEST(DrawRoundSampleTest, KeepsInputOrder) {
  Rng rng(3);
  const std::vector<ElementId> uncovered = Range(500);
  const auto sample = DrawRoundSample(uncovered, 500.0, 1.0, 1 << 10, rng);
  EXPECT_TRUE(std::ranges::is_sorted(sample));
  EXPECT_LT(sample.size(), uncovered.size());
}

TEST(ShortlistTest, FullSampleUsesExactCounts) {
  // alpha = 1 and N = 8 give threshold 3.
  CovertOracle oracle(Share(SetSystem::Build({{1, 2, 3}, {1, 2}, {4}}, 4)));
  const std::vector<ElementId> sample = {1, 2, 3, 4};
  const Shortlist s = ShortlistSets(sample, oracle, 1.0, 8);
  EXPECT_THAT(s.sets, ElementsAre(1));
  EXPECT_THAT(s.sampled_hits.at(2), ElementsAre(1, 2));
  EXPECT_EQ(oracle.counts().hitting, 4);
  EXPECT_EQ(oracle.counts().set, 0);
}

TEST(ShortlistTest, EmptyWhenNothingReachesThreshold) {
  CovertOracle oracle(Share(SetSystem::Build({{1}, {2}}, 2)));
  const std::vector<ElementId> sample = {1, 2};
  EXPECT_THAT(ShortlistSets(sample, oracle, 1.0, 8).sets, IsEmpty());
}

TEST(FilterTest, DisjointSetsBothAccepted) {
  CovertOracle oracle(
      Share(SetSystem::Build({{1, 2, 3}, {4, 5, 6}}, 6)));
  const std::vector<ElementId> sample = Range(6);
  const Shortlist s = ShortlistSets(sample, oracle, 1.0, 8);
  const FilterResult f = SequentialFilter(s, sample, oracle, 1.0, 8);
  EXPECT_THAT(f.chosen, ElementsAre(1, 2));
  EXPECT_THAT(f.contents[1], ElementsAre(4, 5, 6));
  EXPECT_EQ(oracle.counts().set, 2);
}

TEST(FilterTest, ContainedSetDiscarded) {
  CovertOracle oracle(
      Share(SetSystem::Build({{1, 2, 3, 4}, {1, 2, 3}}, 4)));
  const std::vector<ElementId> sample = Range(4);
  const Shortlist s = ShortlistSets(sample, oracle, 1.0, 8);
  ASSERT_THAT(s.sets, ElementsAre(1, 2));
  const FilterResult f = SequentialFilter(s, sample, oracle, 1.0, 8);
  EXPECT_THAT(f.chosen, ElementsAre(1));
  EXPECT_EQ(oracle.counts().set, 1);
}

TEST(BaseCaseTest, SingleResidualSet) {
  CovertOracle oracle(
      Share(SetSystem::Build({{1}, {2, 3, 4}, {2}}, 4)));
  const std::vector<ElementId> residual = {2, 3, 4};
  EXPECT_THAT(BaseCaseExplicit(oracle, residual), ElementsAre(2));
  EXPECT_EQ(oracle.counts().hitting, 3);
  EXPECT_EQ(oracle.counts().set, 0);
}

TEST(BaseCaseTest, WholeInstanceMatchesExplicitGreedy) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto sys = Share(GenerateSetSystem(SetModel::kUniformRandom,
                                       {.universe_size = 14, .num_sets = 7,
                                        .density = 0.35},
                                       seed)
                         .system);
    if (!sys->CoversUniverse()) continue;
    CovertOracle oracle(sys);
    const auto all = Range(sys->universe_size());
    EXPECT_EQ(BaseCaseExplicit(oracle, all), GreedyCover(*sys).set_indices);
    EXPECT_EQ(oracle.counts().hitting, sys->universe_size());
  }
}

TEST(BaseCaseTest, UncoverableThrows) {
  CovertOracle oracle(Share(SetSystem::Build({{1}}, 3)));
  const std::vector<ElementId> residual = {1, 2, 3};
  try {
    BaseCaseExplicit(oracle, residual);
    FAIL();
  } catch (const UncoverableError& e) {
    EXPECT_EQ(e.element(), 2);
  }
}

TEST(RunPseudoGreedyTest, WholeUniverseSetFiresBaseCase) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    CovertOracle oracle(Share(SetSystem::Build({Range(8)}, 8)));
    const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 8, .seed = seed});
    EXPECT_THAT(r.cover, ElementsAre(1));
    ASSERT_EQ(r.rounds.size(), 1u);
    EXPECT_TRUE(r.rounds[0].base_case);
    EXPECT_TRUE(r.base_case_entered);
  }
}

TEST(RunPseudoGreedyTest, SmallInstanceEqualsExplicitGreedy) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto sys = Share(GenerateSetSystem(SetModel::kUniformRandom,
                                       {.universe_size = 16, .num_sets = 6,
                                        .density = 0.4},
                                       seed)
                         .system);
    if (!sys->CoversUniverse()) continue;
    CovertOracle oracle(sys);
    const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 8, .seed = seed});
    EXPECT_EQ(r.cover, GreedyCover(*sys).set_indices);
  }
}

TEST(RunPseudoGreedyTest, UncoverableReportsFailure) {
  CovertOracle oracle(Share(SetSystem::Build({{1, 2}, {4}}, 4)));
  const CoverResult r = RunPseudoGreedy(oracle, {});
  EXPECT_TRUE(r.failed);
  EXPECT_EQ(r.uncovered_element, 3);
}

TEST(RunPseudoGreedyTest, RejectsNonPositiveAlpha) {
  CovertOracle oracle(Share(SetSystem::Build({{1}}, 1)));
  EXPECT_THROW(RunPseudoGreedy(oracle, {.alpha = 0.0}), CoverError);
}

TEST(RunPseudoGreedyTest, ShortlistThresholdCatchesHalfScaleSets) {
  // A round samples with p = 0.625 against threshold 160; a set holding
  // s_i / 2 = 512 uncovered elements must be shortlisted (>= 99%).
  std::vector<std::vector<ElementId>> sets = {Range(512)};
  for (int j = 0; j < 15; ++j) sets.push_back({1});
  // Pad the universe so that N = 2^20 exactly.
  const int n = (1 << 20) - 16;
  auto sys = Share(SetSystem::Build(std::move(sets), n));
  const std::vector<ElementId> uncovered = Range(1024);
  int caught = 0;
  constexpr int kTrials = 300;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(t);
    CovertOracle oracle(sys);
    const auto sample =
        DrawRoundSample(uncovered, 1024.0, 8.0, sys->scale(), rng);
    const Shortlist s = ShortlistSets(sample, oracle, 8.0, sys->scale());
    caught += std::ranges::find(s.sets, 1) != s.sets.end();
  }
  EXPECT_GE(caught, 0.99 * kTrials);
}

// Pseudo-greedy with alpha = 1 on n' = 64 passes through sampled rounds,
// clipped rounds and the base case.
class RunPseudoGreedySweep : public ::testing::TestWithParam<uint64_t> {};

TEST_P(RunPseudoGreedySweep, LedgerReconstructsFromTrace) {
  const uint64_t seed = GetParam();
  auto sys = Planted(64, 16, 3, seed);
  CovertOracle oracle(sys);
  const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 1.0, .seed = seed});
  QueryCounts expected;
  for (const RoundTrace& round : r.rounds) {
    QueryCounts delta;
    if (round.base_case) {
      delta.hitting = round.uncovered;
    } else {
      delta.hitting = static_cast<int64_t>(round.sample.size());
      delta.set = static_cast<int64_t>(round.chosen.size());
    }
    EXPECT_EQ(round.ledger_delta, delta) << "round " << round.round;
    const std::string label = round.base_case
                                  ? "base-case"
                                  : "round-" + std::to_string(round.round);
    if (delta.total() > 0) {
      EXPECT_EQ(r.ledger.by_phase().at(label), delta);
    }
    expected += delta;
  }
  EXPECT_EQ(r.ledger.counts(), expected);
}

TEST_P(RunPseudoGreedySweep, ValidCoverAndBoundedRounds) {
  const uint64_t seed = GetParam();
  auto sys = Planted(64, 16, 3, seed);
  CovertOracle oracle(sys);
  const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 1.0, .seed = seed});
  EXPECT_FALSE(r.failed);
  EXPECT_TRUE(VerifyCover(*sys, r.cover));
  EXPECT_LE(r.rounds.size(), 6u + 1u);  // ceil(log2 64) + 1
  EXPECT_TRUE(r.rounds.back().base_case || r.rounds.back().uncovered > 0);
  // No set is chosen twice.
  std::vector<SetIndex> sorted = r.cover;
  std::ranges::sort(sorted);
  EXPECT_EQ(std::ranges::adjacent_find(sorted), sorted.end());
}

TEST_P(RunPseudoGreedySweep, ClippedRoundsMatchThresholdPass) {
  const uint64_t seed = GetParam();
  auto sys = Planted(64, 16, 3, seed);
  CovertOracle oracle(sys);
  const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 1.0, .seed = seed});
  const double threshold = HitThreshold(1.0, sys->scale());
  std::vector<char> covered(sys->universe_size() + 1, 0);
  for (const RoundTrace& round : r.rounds) {
    std::vector<ElementId> uncovered;
    for (ElementId e = 1; e <= sys->universe_size(); ++e) {
      if (!covered[e]) uncovered.push_back(e);
    }
    ASSERT_EQ(static_cast<int64_t>(uncovered.size()), round.uncovered);
    if (!round.base_case && round.probability == 1.0) {
      EXPECT_EQ(round.sample, uncovered);
      const ThresholdPassResult pass =
          ThresholdPass(*sys, uncovered, threshold);
      EXPECT_EQ(round.shortlist, pass.shortlist);
      EXPECT_EQ(round.chosen, pass.chosen);
    }
    for (SetIndex s : round.chosen) {
      for (ElementId e : sys->set(s)) covered[e] = 1;
    }
  }
}

TEST_P(RunPseudoGreedySweep, Deterministic) {
  const uint64_t seed = GetParam();
  auto sys = Planted(64, 16, 3, seed);
  CovertOracle a(sys), b(sys);
  const CoverResult ra = RunPseudoGreedy(a, {.alpha = 1.0, .seed = seed});
  const CoverResult rb = RunPseudoGreedy(b, {.alpha = 1.0, .seed = seed});
  EXPECT_EQ(ra.ToJson(), rb.ToJson());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RunPseudoGreedySweep,
                         ::testing::Range<uint64_t>(0, 25));

TEST(RunPseudoGreedyTest, SweepHitsClippedAndSampledRounds) {
  int clipped = 0, sampled = 0;
  for (uint64_t seed = 0; seed < 25; ++seed) {
    CovertOracle oracle(Planted(64, 16, 3, seed));
    const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 1.0, .seed = seed});
    for (const RoundTrace& round : r.rounds) {
      if (round.base_case) continue;
      (round.probability == 1.0 ? clipped : sampled) += 1;
    }
  }
  EXPECT_GT(clipped, 0);
  EXPECT_GT(sampled, 0);
}

TEST(RunPseudoGreedyTest, ApproximationAtDeskScale) {
  int within = 0, runs = 0;
  for (uint64_t seed = 0; runs < 100; ++seed) {
    auto sys = Share(GenerateSetSystem(SetModel::kUniformRandom,
                                       {.universe_size = 16, .num_sets = 6,
                                        .density = 0.5},
                                       seed)
                         .system);
    if (!sys->CoversUniverse()) continue;
    CovertOracle oracle(sys);
    const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 8, .seed = seed});
    EXPECT_TRUE(VerifyCover(*sys, r.cover));
    const int opt = BruteForceMinCover(*sys).size();
    within += r.cover_size() <= 8 * Harmonic(16) * opt;
    ++runs;
  }
  EXPECT_GE(within, 95);
}

TEST(RoundTraceTest, JsonFields) {
  CovertOracle oracle(Planted(64, 16, 3, 1));
  const CoverResult r = RunPseudoGreedy(oracle, {.alpha = 1.0, .seed = 1});
  const nlohmann::json j = r.rounds.front().ToJson();
  for (const char* key : {"i", "n_i", "s_i", "sample_size", "shortlist",
                          "chosen", "ledger_delta"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

}  // namespace
}  // namespace covert
