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

#ifndef COVERT_COVER_RESULT_H_
#define COVERT_COVER_RESULT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covert/oracle.h"
#include "covert/set_system.h"
#include "json.hpp"

namespace covert {

// One round of Pseudo-Greedy.
struct RoundTrace {
  int round = 0;
  // n_i: uncovered elements at the start of the round.
  int64_t uncovered = 0;
  // s_i = min(n' / 2^i, n_i).
  double scale = 0.0;
  // Per-element inclusion probability of the round sample (0 in the base
  // case, which does not sample).
  double probability = 0.0;
  std::vector<ElementId> sample;
  std::vector<SetIndex> shortlist;
  std::vector<SetIndex> chosen;
  bool base_case = false;
  QueryCounts ledger_delta;

  nlohmann::json ToJson() const;
};

// One OPT guess of the weighted eps-net baseline.
struct GuessTrace {
  int guess = 0;
  int net_size = 0;
  int iteration_cap = 0;
  int iterations = 0;
  int misses = 0;
  bool succeeded = false;
  QueryCounts ledger_delta;

  nlohmann::json ToJson() const;
};

// Output of a covert cover algorithm. Validity is not self-checked: callers
// that hold the hidden system validate `cover` post hoc.
struct CoverResult {
  std::string algorithm;
  // Chosen set indices in selection order.
  std::vector<SetIndex> cover;
  std::vector<RoundTrace> rounds;
  std::vector<GuessTrace> guesses;
  QueryLedger ledger;
  bool base_case_entered = false;
  // Set when the algorithm found an element that lies in no set.
  bool failed = false;
  std::optional<ElementId> uncovered_element;

  int cover_size() const { return static_cast<int>(cover.size()); }

  nlohmann::json ToJson() const;
};

}  // namespace covert

#endif  // COVERT_COVER_RESULT_H_
