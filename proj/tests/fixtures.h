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

// Shared graph and set-system fixtures. Expected values in the tests were
// produced by tests/oracle/derive_fixtures.py.

#ifndef COVERT_TESTS_FIXTURES_H_
#define COVERT_TESTS_FIXTURES_H_

#include <memory>
#include <vector>

#include "covert/generators.h"
#include "covert/graph.h"
#include "covert/set_system.h"

namespace covert::testing {

// Six vertices, two routes from 1 to 6 through 3.
inline Graph G6() {
  return Graph::Build(6, {{1, 2}, {1, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

inline Graph Path(int n) {
  return GenerateGraph(GraphModel::kPath, {.n = n}, 0);
}

inline Graph Complete(int n) {
  return GenerateGraph(GraphModel::kComplete, {.n = n}, 0);
}

// S1 = {1,2,3}, S2 = {3,4}, S3 = {4}.
inline SetSystem ThreeSets() {
  return SetSystem::Build({{1, 2, 3}, {3, 4}, {4}}, 4);
}

// Every graph with n <= 10 used by the exhaustive checks.
inline std::vector<Graph> SmallGraphSuite() {
  std::vector<Graph> out = {G6()};
  for (int n = 2; n <= 10; ++n) out.push_back(Path(n));
  for (int n = 2; n <= 8; ++n) out.push_back(Complete(n));
  for (int n = 3; n <= 10; ++n) {
    out.push_back(GenerateGraph(GraphModel::kCycle, {.n = n}, 0));
    out.push_back(GenerateGraph(GraphModel::kStar, {.n = n}, 0));
  }
  out.push_back(
      GenerateGraph(GraphModel::kGrid, {.rows = 2, .cols = 3}, 0));
  out.push_back(
      GenerateGraph(GraphModel::kGrid, {.rows = 3, .cols = 3}, 0));
  for (uint64_t seed = 0; seed < 10; ++seed) {
    out.push_back(GenerateGraph(GraphModel::kErConnected,
                                {.n = 6 + static_cast<int>(seed % 5),
                                 .p = 0.3},
                                seed));
  }
  return out;
}

}  // namespace covert::testing

#endif  // COVERT_TESTS_FIXTURES_H_
