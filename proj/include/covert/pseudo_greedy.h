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

// Pseudo-Greedy: covert set cover by round-structured sampling.
//
// Round i looks for sets holding about s_i = min(n'/2^i, n_i) uncovered
// elements. Every uncovered element is sampled independently with
// probability min(1, 4 alpha log2(N) / s_i); a hitting query per sampled
// element tallies the sets, and the sets with at least alpha log2(N) sampled
// hits are shortlisted. The shortlist is filtered in canonical order against
// the sampled elements not yet claimed by earlier acceptances, and each
// accepted set is learned with one set query. Once s_i <= alpha log2(N) the
// residual instance is small enough to query every remaining element and run
// explicit greedy on it.
//
// N = n' + m'. All logarithms are base 2.

#ifndef COVERT_PSEUDO_GREEDY_H_
#define COVERT_PSEUDO_GREEDY_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "covert/cover_result.h"
#include "covert/oracle.h"
#include "covert/rng.h"
#include "covert/set_system.h"

namespace covert {

inline constexpr double kDefaultAlpha = 8.0;

struct PseudoGreedyOptions {
  double alpha = kDefaultAlpha;
  uint64_t seed = 0;
};

// alpha * log2(N): the hit threshold used by shortlist and filter, and the
// scale at or below which the explicit base case runs.
double HitThreshold(double alpha, int64_t scale_n);

// min(1, 4 alpha log2(N) / s_i).
double SampleProbability(double scale, double alpha, int64_t scale_n);

// Bernoulli sample of `uncovered` at SampleProbability. Keeps input order.
std::vector<ElementId> DrawRoundSample(std::span<const ElementId> uncovered,
                                       double scale, double alpha,
                                       int64_t scale_n, Rng& rng);

struct Shortlist {
  // Canonical order.
  std::vector<SetIndex> sets;
  // Sampled elements per set, for every set hit at least once.
  std::map<SetIndex, std::vector<ElementId>> sampled_hits;
};

// One hitting query per sampled element.
Shortlist ShortlistSets(std::span<const ElementId> sample,
                        CovertOracle& oracle, double alpha, int64_t scale_n);

struct FilterResult {
  std::vector<SetIndex> chosen;
  // Set-query answers for `chosen`, parallel to it.
  std::vector<std::vector<ElementId>> contents;
};

// Walks the shortlist in order; accepts a set iff it holds at least
// alpha log2(N) sampled elements not claimed by earlier acceptances, and
// learns each accepted set with one set query.
FilterResult SequentialFilter(const Shortlist& shortlist,
                              std::span<const ElementId> sample,
                              CovertOracle& oracle, double alpha,
                              int64_t scale_n);

// One hitting query per element of `uncovered`, then explicit greedy
// (theta = 1) on the reconstructed residual instance. Returns the chosen sets
// in selection order. Throws UncoverableError for an element in no set.
std::vector<SetIndex> BaseCaseExplicit(CovertOracle& oracle,
                                       std::span<const ElementId> uncovered);

CoverResult RunPseudoGreedy(CovertOracle& oracle,
                            const PseudoGreedyOptions& options);

}  // namespace covert

#endif  // COVERT_PSEUDO_GREEDY_H_
