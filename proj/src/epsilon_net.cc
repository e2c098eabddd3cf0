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

#include "covert/epsilon_net.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "covert/errors.h"

namespace covert {

double WeightedFamily::weight(SetIndex s) const {
  return std::ldexp(1.0, doublings_[s]);
}

void WeightedFamily::Double(SetIndex s) {
  total_ += weight(s);
  ++doublings_[s];
}

void WeightedFamily::Reset() {
  std::fill(doublings_.begin(), doublings_.end(), 0);
  total_ = num_sets();
}

std::vector<SetIndex> SampleWeightedNet(const WeightedFamily& weights,
                                        int size, Rng& rng) {
  if (size < 1) {
    throw CoverError(ErrorCode::kInvalidArgument, "net size must be >= 1");
  }
  const int m = weights.num_sets();
  std::vector<double> prefix(m);
  double running = 0.0;
  for (SetIndex s = 1; s <= m; ++s) {
    running += weights.weight(s);
    prefix[s - 1] = running;
  }
  std::vector<char> drawn(m + 1, 0);
  for (int d = 0; d < size; ++d) {
    const double u = rng.Uniform() * running;
    const auto it = std::upper_bound(prefix.begin(), prefix.end(), u);
    const auto pos = std::min<std::ptrdiff_t>(it - prefix.begin(), m - 1);
    drawn[pos + 1] = 1;
  }
  std::vector<SetIndex> net;
  for (SetIndex s = 1; s <= m; ++s) {
    if (drawn[s]) net.push_back(s);
  }
  return net;
}

void ReweightOnMiss(WeightedFamily& weights, ElementId x,
                    CovertOracle& oracle) {
  const auto holders = oracle.HittingQuery(x);
  if (holders.empty()) throw UncoverableError(x);
  for (SetIndex s : holders) weights.Double(s);
}

std::optional<ElementId> FindUncovered(
    std::span<const SetIndex> candidate,
    const std::map<SetIndex, std::vector<ElementId>>& known_contents,
    int universe_size) {
  std::vector<char> hit(universe_size + 1, 0);
  for (SetIndex s : candidate) {
    for (ElementId e : known_contents.at(s)) hit[e] = 1;
  }
  for (ElementId e = 1; e <= universe_size; ++e) {
    if (!hit[e]) return e;
  }
  return std::nullopt;
}

int NetSize(int guess, int num_sets, double alpha_net, double c_net) {
  const double log_m = std::log(static_cast<double>(std::max(num_sets, 2)));
  return std::max(1, static_cast<int>(std::ceil(c_net * alpha_net * guess *
                                                log_m)));
}

int IterationCap(int guess, int num_sets, double c_iter) {
  const double ratio = static_cast<double>(num_sets) / guess + 2.0;
  return std::max(1, static_cast<int>(std::ceil(c_iter * guess *
                                                std::log2(ratio))));
}

CoverResult RunWeightedEpsilonNet(CovertOracle& oracle,
                                  const EpsilonNetOptions& options) {
  if (!(options.alpha_net > 0.0 && options.c_net > 0.0 &&
        options.c_iter > 0.0)) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "eps-net constants must be positive");
  }
  const int n = oracle.universe_size();
  const int m = oracle.num_sets();
  Rng rng(options.seed);
  WeightedFamily weights(m);
  // Set contents learned so far; each set is queried at most once per run.
  std::map<SetIndex, std::vector<ElementId>> known;

  CoverResult result;
  result.algorithm = "epsnet";
  for (int k = 1;; k *= 2) {
    const int guess = std::min(k, m);
    oracle.MarkPhase("guess-" + std::to_string(guess));
    if (options.reset_per_guess) weights.Reset();

    GuessTrace trace;
    trace.guess = guess;
    trace.net_size = NetSize(guess, m, options.alpha_net, options.c_net);
    trace.iteration_cap = IterationCap(guess, m, options.c_iter);
    const QueryCounts before = oracle.counts();

    while (trace.iterations < trace.iteration_cap) {
      ++trace.iterations;
      std::vector<SetIndex> net =
          SampleWeightedNet(weights, trace.net_size, rng);
      for (SetIndex s : net) {
        if (!known.contains(s)) known.emplace(s, oracle.SetQuery(s));
      }
      const auto missed = FindUncovered(net, known, n);
      if (!missed) {
        trace.succeeded = true;
        result.cover = std::move(net);
        break;
      }
      ++trace.misses;
      try {
        ReweightOnMiss(weights, *missed, oracle);
      } catch (const UncoverableError& e) {
        result.failed = true;
        result.uncovered_element = e.element();
        break;
      }
    }
    trace.ledger_delta = oracle.counts() - before;
    result.guesses.push_back(trace);
    if (trace.succeeded || result.failed) break;
    if (guess == m) {
      result.failed = true;
      break;
    }
  }
  oracle.MarkPhase(QueryLedger::kDefaultPhase);
  result.ledger = oracle.Snapshot();
  return result;
}

}  // namespace covert
