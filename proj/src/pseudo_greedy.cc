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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "covert/errors.h"

namespace covert {

double HitThreshold(double alpha, int64_t scale_n) {
  return alpha * std::log2(static_cast<double>(scale_n));
}

double SampleProbability(double scale, double alpha, int64_t scale_n) {
  return std::min(1.0, 4.0 * HitThreshold(alpha, scale_n) / scale);
}

std::vector<ElementId> DrawRoundSample(std::span<const ElementId> uncovered,
                                       double scale, double alpha,
                                       int64_t scale_n, Rng& rng) {
  const double p = SampleProbability(scale, alpha, scale_n);
  std::vector<ElementId> sample;
  if (p >= 1.0) return {uncovered.begin(), uncovered.end()};
  for (ElementId e : uncovered) {
    if (rng.Bernoulli(p)) sample.push_back(e);
  }
  return sample;
}

Shortlist ShortlistSets(std::span<const ElementId> sample,
                        CovertOracle& oracle, double alpha, int64_t scale_n) {
  const double threshold = HitThreshold(alpha, scale_n);
  Shortlist shortlist;
  for (ElementId e : sample) {
    for (SetIndex s : oracle.HittingQuery(e)) {
      shortlist.sampled_hits[s].push_back(e);
    }
  }
  for (const auto& [s, hits] : shortlist.sampled_hits) {
    if (static_cast<double>(hits.size()) >= threshold) {
      shortlist.sets.push_back(s);
    }
  }
  return shortlist;
}

FilterResult SequentialFilter(const Shortlist& shortlist,
                              std::span<const ElementId> sample,
                              CovertOracle& oracle, double alpha,
                              int64_t scale_n) {
  const double threshold = HitThreshold(alpha, scale_n);
  std::vector<char> in_sample(oracle.universe_size() + 1, 0);
  for (ElementId e : sample) in_sample[e] = 1;
  // R_j: sampled elements already claimed by accepted sets.
  std::vector<char> claimed(oracle.universe_size() + 1, 0);

  FilterResult result;
  for (SetIndex s : shortlist.sets) {
    const auto it = shortlist.sampled_hits.find(s);
    if (it == shortlist.sampled_hits.end()) continue;
    int residual = 0;
    for (ElementId e : it->second) residual += in_sample[e] && !claimed[e];
    if (residual < threshold) continue;
    std::vector<ElementId> contents = oracle.SetQuery(s);
    for (ElementId e : contents) {
      if (in_sample[e]) claimed[e] = 1;
    }
    result.chosen.push_back(s);
    result.contents.push_back(std::move(contents));
  }
  return result;
}

std::vector<SetIndex> BaseCaseExplicit(CovertOracle& oracle,
                                       std::span<const ElementId> uncovered) {
  if (uncovered.empty()) return {};
  // Residual instance: elements renumbered 1..n_i in the given order, sets
  // restricted to the residual and kept in canonical order.
  std::map<SetIndex, std::vector<ElementId>> residual;
  for (size_t i = 0; i < uncovered.size(); ++i) {
    const auto holders = oracle.HittingQuery(uncovered[i]);
    if (holders.empty()) throw UncoverableError(uncovered[i]);
    for (SetIndex s : holders) {
      residual[s].push_back(static_cast<ElementId>(i + 1));
    }
  }
  std::vector<SetIndex> original;
  std::vector<std::vector<ElementId>> sets;
  for (auto& [s, members] : residual) {
    original.push_back(s);
    sets.push_back(std::move(members));
  }
  const SetSystem local =
      SetSystem::Build(std::move(sets), static_cast<int>(uncovered.size()));
  std::vector<SetIndex> chosen;
  for (SetIndex s : GreedyCover(local, 1.0).set_indices) {
    chosen.push_back(original[s - 1]);
  }
  return chosen;
}

CoverResult RunPseudoGreedy(CovertOracle& oracle,
                            const PseudoGreedyOptions& options) {
  if (!(options.alpha > 0.0)) {
    throw CoverError(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  const int n = oracle.universe_size();
  const int64_t scale_n = int64_t{n} + oracle.num_sets();
  const double threshold = HitThreshold(options.alpha, scale_n);
  Rng rng(options.seed);

  CoverResult result;
  result.algorithm = "pseudo-greedy";
  std::vector<char> covered(n + 1, 0);
  std::vector<ElementId> uncovered;
  for (ElementId e = 1; e <= n; ++e) uncovered.push_back(e);

  for (int i = 0; !uncovered.empty(); ++i) {
    RoundTrace trace;
    trace.round = i;
    trace.uncovered = static_cast<int64_t>(uncovered.size());
    trace.scale = std::min(std::ldexp(static_cast<double>(n), -i),
                           static_cast<double>(uncovered.size()));
    const QueryCounts before = oracle.counts();

    if (trace.scale <= threshold) {
      oracle.MarkPhase("base-case");
      trace.base_case = true;
      result.base_case_entered = true;
      try {
        trace.chosen = BaseCaseExplicit(oracle, uncovered);
      } catch (const UncoverableError& e) {
        result.failed = true;
        result.uncovered_element = e.element();
      }
      result.cover.insert(result.cover.end(), trace.chosen.begin(),
                          trace.chosen.end());
      trace.ledger_delta = oracle.counts() - before;
      result.rounds.push_back(std::move(trace));
      break;
    }

    oracle.MarkPhase("round-" + std::to_string(i));
    trace.probability = SampleProbability(trace.scale, options.alpha, scale_n);
    trace.sample =
        DrawRoundSample(uncovered, trace.scale, options.alpha, scale_n, rng);
    const Shortlist shortlist =
        ShortlistSets(trace.sample, oracle, options.alpha, scale_n);
    trace.shortlist = shortlist.sets;
    if (!shortlist.sets.empty()) {
      FilterResult filtered = SequentialFilter(shortlist, trace.sample, oracle,
                                               options.alpha, scale_n);
      for (const auto& contents : filtered.contents) {
        for (ElementId e : contents) covered[e] = 1;
      }
      std::erase_if(uncovered, [&](ElementId e) { return covered[e] != 0; });
      trace.chosen = std::move(filtered.chosen);
      result.cover.insert(result.cover.end(), trace.chosen.begin(),
                          trace.chosen.end());
    }
    trace.ledger_delta = oracle.counts() - before;
    result.rounds.push_back(std::move(trace));
  }
  oracle.MarkPhase(QueryLedger::kDefaultPhase);
  result.ledger = oracle.Snapshot();
  return result;
}

}  // namespace covert
