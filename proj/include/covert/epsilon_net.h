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

// Weighted eps-net set cover (multiplicative reweighting) run against the
// covert oracle, with OPT guessed by doubling: k = 1, 2, 4, ... up to m'.
//
// For a guess k the net has ceil(c_net * alpha_net * k * ln m') weighted
// draws (1/eps = alpha_net * k). A drawn net whose sets cover the universe is
// returned; otherwise the first missed element x is hit-queried and every set
// containing x has its weight doubled. After
// ceil(c_iter * k * log2(m'/k + 2)) failed iterations the guess doubles.

#ifndef COVERT_EPSILON_NET_H_
#define COVERT_EPSILON_NET_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "covert/cover_result.h"
#include "covert/oracle.h"
#include "covert/rng.h"
#include "covert/set_system.h"

namespace covert {

// Per-set weights, each a power of two. Stored as exponents so that long runs
// of doublings cannot overflow an integer type.
class WeightedFamily {
 public:
  explicit WeightedFamily(int num_sets)
      : doublings_(num_sets + 1, 0), total_(num_sets) {}

  int num_sets() const { return static_cast<int>(doublings_.size()) - 1; }
  int doublings(SetIndex s) const { return doublings_[s]; }
  double weight(SetIndex s) const;
  double total_weight() const { return total_; }

  void Double(SetIndex s);
  void Reset();

 private:
  std::vector<int> doublings_;
  double total_;
};

// `size` independent draws with replacement, set s drawn with probability
// w(s)/W. Returns the distinct indices, ascending.
std::vector<SetIndex> SampleWeightedNet(const WeightedFamily& weights,
                                        int size, Rng& rng);

// Hit-queries `x` and doubles the weight of every set containing it. Throws
// UncoverableError if no set contains x.
void ReweightOnMiss(WeightedFamily& weights, ElementId x,
                    CovertOracle& oracle);

// Smallest element of 1..universe_size not in any candidate set's contents.
// Every candidate must have an entry in `known_contents`.
std::optional<ElementId> FindUncovered(
    std::span<const SetIndex> candidate,
    const std::map<SetIndex, std::vector<ElementId>>& known_contents,
    int universe_size);

struct EpsilonNetOptions {
  double alpha_net = 2.0;
  double c_net = 4.0;
  double c_iter = 4.0;
  bool reset_per_guess = true;
  uint64_t seed = 0;
};

int NetSize(int guess, int num_sets, double alpha_net, double c_net);
int IterationCap(int guess, int num_sets, double c_iter);

CoverResult RunWeightedEpsilonNet(CovertOracle& oracle,
                                  const EpsilonNetOptions& options);

}  // namespace covert

#endif  // COVERT_EPSILON_NET_H_
