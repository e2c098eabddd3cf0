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

#ifndef COVERT_GRAPH_H_
#define COVERT_GRAPH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"

namespace covert {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Connected, undirected, unweighted simple graph on vertices 1..n.
class Graph {
 public:
  // Rejects self-loops, repeated edges, out-of-range endpoints (all
  // kInvalidArgument/kOutOfRange) and disconnected graphs (kDisconnected).
  static Graph Build(int num_vertices, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()) - 1; }
  int64_t num_pairs() const {
    const int64_t n = num_vertices();
    return n * (n - 1) / 2;
  }
  // Sorted neighbours of v.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex w) const;
  // Edges as (min, max), sorted.
  std::vector<Edge> edges() const;

  nlohmann::json ToJson() const;
  static Graph FromJson(const nlohmann::json& j);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
};

// Hop distances from `source`; result[v - 1] is d(source, v).
std::vector<int> BfsDistances(const Graph& g, Vertex source);

// Bijection between unordered pairs {u, w}, u < w, of 1..n and the ids
// 1..n(n-1)/2, in lexicographic order of (u, w).
class PairCodec {
 public:
  explicit PairCodec(int num_vertices);

  int num_vertices() const { return n_; }
  int64_t num_pairs() const { return int64_t{n_} * (n_ - 1) / 2; }

  int64_t Encode(Vertex u, Vertex w) const;
  Edge Decode(int64_t id) const { return pairs_[id - 1]; }

 private:
  int n_;
  std::vector<Edge> pairs_;
};

}  // namespace covert

#endif  // COVERT_GRAPH_H_
