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

// Explicit set systems and the full-information reference algorithms:
// relaxed greedy, exact minimum cover, cover verification and the per-element
// cost apportionment used to analyse greedy.
//
// Elements are numbered 1..universe_size() and sets 1..num_sets(). The index
// order of the sets is the canonical order every algorithm scans in.

#ifndef COVERT_SET_SYSTEM_H_
#define COVERT_SET_SYSTEM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>
#include "json.hpp"

namespace covert {

using ElementId = int;
using SetIndex = int;

class SetSystem {
 public:
  // Validates and indexes `sets`. Elements inside a set are sorted and
  // deduplicated. Throws CoverError on an empty family, a non-positive
  // universe, or an element outside [1, universe_size].
  static SetSystem Build(std::vector<std::vector<ElementId>> sets,
                         int universe_size);

  int universe_size() const { return universe_size_; }
  int num_sets() const { return static_cast<int>(sets_.size()); }

  // Scale parameter used in every log threshold: elements plus sets.
  int64_t scale() const { return int64_t{universe_size_} + num_sets(); }

  // Sorted elements of set `s` (1-based).
  std::span<const ElementId> set(SetIndex s) const;
  // Sorted indices of the sets containing `e` (1-based).
  std::span<const SetIndex> sets_containing(ElementId e) const;

  bool contains(SetIndex s, ElementId e) const;

  // Smallest element contained in no set, if any.
  std::optional<ElementId> FirstUncoverable() const;
  bool CoversUniverse() const { return !FirstUncoverable().has_value(); }

  nlohmann::json ToJson() const;
  static SetSystem FromJson(const nlohmann::json& j);

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.universe_size_ == b.universe_size_ && a.sets_ == b.sets_;
  }

 private:
  SetSystem() = default;

  int universe_size_ = 0;
  std::vector<std::vector<ElementId>> sets_;
  std::vector<std::vector<SetIndex>> element_to_sets_;
};

// A collection of chosen sets in selection order, with their union.
struct Cover {
  std::vector<SetIndex> set_indices;
  // Sorted union of the chosen sets' elements.
  std::vector<ElementId> covered;

  int size() const { return static_cast<int>(set_indices.size()); }

  // Throws CoverError on a duplicate or out-of-range index.
  static Cover FromIndices(const SetSystem& sys,
                           std::vector<SetIndex> set_indices);
};

// Relaxed greedy RGSC(theta). Each step computes n_max, the largest number of
// uncovered elements in any set, and takes the first set in canonical order
// whose uncovered count is at least theta * n_max. theta == 1 is classic
// greedy with lowest-index tie-breaking. Throws UncoverableError if the
// family does not cover the universe.
Cover GreedyCover(const SetSystem& sys, double theta = 1.0);

// One deterministic threshold pass over the sets in canonical order: a set is
// taken iff it holds at least `threshold` elements of `uncovered` that no
// earlier set of this pass took. This is what one sampling round of
// Pseudo-Greedy computes when every uncovered element is sampled.
struct ThresholdPassResult {
  // Sets whose uncovered count reaches the threshold before the pass starts.
  std::vector<SetIndex> shortlist;
  std::vector<SetIndex> chosen;
};
ThresholdPassResult ThresholdPass(const SetSystem& sys,
                                  std::span<const ElementId> uncovered,
                                  double threshold);

inline constexpr int kDefaultBruteForceCap = 20;

// Minimum-cardinality cover, lexicographically smallest index sequence among
// the minimum ones. Exponential in num_sets(); throws kCapExceeded above
// `max_sets` and UncoverableError when no cover exists.
Cover BruteForceMinCover(const SetSystem& sys,
                         int max_sets = kDefaultBruteForceCap);

// True iff the listed sets cover the universe. Indices must be valid.
bool VerifyCover(const SetSystem& sys, std::span<const SetIndex> set_indices);
inline bool VerifyCover(const SetSystem& sys, const Cover& cover) {
  return VerifyCover(sys, cover.set_indices);
}

using Rational = boost::rational<int64_t>;

// Cost apportionment of a cover in selection order: an element first covered
// by a set that newly covers k elements is charged 1/k.
struct ApportionedCost {
  // share[e] = k for element e (index 0 unused), i.e. w(e) = 1/k.
  std::vector<int64_t> share;
  // Elements in the order they were first covered; within one set, by id.
  std::vector<ElementId> cover_order;

  Rational weight(ElementId e) const { return Rational(1, share[e]); }
  Rational Total() const;
};

// Throws CoverError if `cover` does not cover the universe.
ApportionedCost ApportionedWeights(const SetSystem& sys, const Cover& cover);

// H_n = 1 + 1/2 + ... + 1/n.
double Harmonic(int n);

}  // namespace covert

#endif  // COVERT_SET_SYSTEM_H_
