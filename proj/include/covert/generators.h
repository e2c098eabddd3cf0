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

// Seeded instance generators. Output is a pure function of (model, params,
// seed).

#ifndef COVERT_GENERATORS_H_
#define COVERT_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covert/graph.h"
#include "covert/set_system.h"
#include "json.hpp"

namespace covert {

enum class GraphModel { kPath, kCycle, kComplete, kStar, kErConnected, kGrid };

GraphModel ParseGraphModel(std::string_view name);
std::string_view GraphModelName(GraphModel model);

struct GraphParams {
  int n = 8;
  // Edge probability for er-connected.
  double p = 0.25;
  // Grid dimensions; n is ignored for grids.
  int rows = 0;
  int cols = 0;
  // er-connected resamples until connected, at most this many times.
  int max_retries = 1000;
};

Graph GenerateGraph(GraphModel model, const GraphParams& params,
                    uint64_t seed);

enum class SetModel { kUniformRandom, kPlantedCover, kSkewed };

SetModel ParseSetModel(std::string_view name);
std::string_view SetModelName(SetModel model);

struct SetParams {
  int universe_size = 32;
  int num_sets = 8;
  // Per-(element, set) inclusion probability for uniform-random.
  double density = 0.25;
  // Planted cover size for planted-cover.
  int planted_k = 4;
  // Largest decoy set in planted-cover; 0 means up to one less than its
  // block.
  int decoy_max_size = 0;
};

struct GeneratedSetSystem {
  SetSystem system;
  bool coverable = false;
  // planted-cover only: the planted sets, ascending. Every other set lies
  // inside one planted set, so OPT equals the planted size exactly.
  std::vector<SetIndex> planted_cover;

  nlohmann::json Metadata() const;
};

// planted-cover partitions the universe into planted_k random blocks, one set
// per block, and fills the remaining sets with random proper subsets of
// blocks; set positions are shuffled. uniform-random includes each
// (element, set) independently. skewed draws set sizes from a heavy-tailed
// distribution. Throws kInvalidArgument for infeasible parameters.
GeneratedSetSystem GenerateSetSystem(SetModel model, const SetParams& params,
                                     uint64_t seed);

}  // namespace covert

#endif  // COVERT_GENERATORS_H_
