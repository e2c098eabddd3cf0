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

#include "covert/graph.h"

#include <set>
#include <vector>

#include "covert/errors.h"
#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace covert {
namespace {

using ::covert::testing::G6;
using ::testing::ElementsAre;

ErrorCode BuildError(int n, const std::vector<Edge>& edges) {
  try {
    Graph::Build(n, edges);
  } catch (const CoverError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected CoverError";
  return ErrorCode::kIo;
}

TEST(GraphTest, BuildAndAccessors) {
  const Graph g = G6();
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_pairs(), 15);
  EXPECT_THAT(g.neighbors(3), ElementsAre(1, 4, 5));
  EXPECT_TRUE(g.adjacent(6, 4));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.edges().size(), 6u);
}

TEST(GraphTest, NormalisesEdgeOrientation) {
  const Graph g = Graph::Build(3, {{2, 1}, {3, 2}});
  EXPECT_THAT(g.edges(), ElementsAre(Edge{1, 2}, Edge{2, 3}));
}

TEST(GraphTest, RejectsMalformedInput) {
  EXPECT_EQ(BuildError(3, {{1, 1}, {1, 2}, {2, 3}}),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(BuildError(3, {{1, 2}, {2, 1}, {2, 3}}),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(BuildError(3, {{1, 4}}), ErrorCode::kOutOfRange);
  EXPECT_EQ(BuildError(4, {{1, 2}, {3, 4}}), ErrorCode::kDisconnected);
  EXPECT_EQ(BuildError(0, {}), ErrorCode::kInvalidArgument);
}

TEST(GraphTest, SingleVertexIsConnected) {
  EXPECT_EQ(Graph::Build(1, {}).num_vertices(), 1);
}

TEST(GraphTest, JsonRoundTrip) {
  const Graph g = G6();
  const nlohmann::json j = g.ToJson();
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(Graph::FromJson(j), g);
}

TEST(BfsTest, DistancesOnFixtures) {
  EXPECT_THAT(BfsDistances(G6(), 1), ElementsAre(0, 1, 1, 2, 2, 3));
  EXPECT_THAT(BfsDistances(G6(), 2), ElementsAre(1, 0, 2, 3, 3, 4));
  EXPECT_THAT(BfsDistances(G6(), 3), ElementsAre(1, 2, 0, 1, 1, 2));
  EXPECT_THAT(BfsDistances(testing::Path(4), 1), ElementsAre(0, 1, 2, 3));
  EXPECT_THAT(BfsDistances(testing::Complete(4), 1), ElementsAre(0, 1, 1, 1));
}

TEST(BfsTest, SymmetricOnSuite) {
  for (const Graph& g : testing::SmallGraphSuite()) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> d;
    for (Vertex v = 1; v <= n; ++v) d.push_back(BfsDistances(g, v));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(d[a][b], d[b][a]);
        EXPECT_EQ(d[a][b] == 1, a != b && g.adjacent(a + 1, b + 1));
      }
    }
  }
}

TEST(PairCodecTest, LexicographicBijection) {
  for (int n = 2; n <= 9; ++n) {
    const PairCodec codec(n);
    int64_t expected = 0;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex w = u + 1; w <= n; ++w) {
        ++expected;
        EXPECT_EQ(codec.Encode(u, w), expected);
        EXPECT_EQ(codec.Encode(w, u), expected);
        EXPECT_EQ(codec.Decode(expected), (Edge{u, w}));
      }
    }
    EXPECT_EQ(codec.num_pairs(), expected);
  }
}

TEST(PairCodecTest, G6Ids) {
  const PairCodec codec(6);
  EXPECT_EQ(codec.Encode(1, 2), 1);
  EXPECT_EQ(codec.Encode(2, 3), 6);
  EXPECT_EQ(codec.Encode(4, 5), 13);
  EXPECT_EQ(codec.Encode(5, 6), 15);
}

}  // namespace
}  // namespace covert
