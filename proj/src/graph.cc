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

#include <algorithm>
#include <deque>
#include <string>

#include "covert/errors.h"

namespace covert {
namespace {

void CheckVertex(Vertex v, int n) {
  if (v < 1 || v > n) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "vertex " + std::to_string(v) + " outside [1, " +
                         std::to_string(n) + "]");
  }
}

}  // namespace

Graph Graph::Build(int num_vertices, const std::vector<Edge>& edges) {
  if (num_vertices < 1) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "graph needs at least one vertex");
  }
  Graph g;
  g.adjacency_.assign(num_vertices + 1, {});
  for (const auto& [u, w] : edges) {
    CheckVertex(u, num_vertices);
    CheckVertex(w, num_vertices);
    if (u == w) {
      throw CoverError(ErrorCode::kInvalidArgument,
                       "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(w);
    g.adjacency_[w].push_back(u);
  }
  for (Vertex v = 1; v <= num_vertices; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw CoverError(ErrorCode::kInvalidArgument,
                       "repeated edge at vertex " + std::to_string(v));
    }
  }
  const auto dist = BfsDistances(g, 1);
  const auto far = std::find(dist.begin(), dist.end(), -1);
  if (far != dist.end()) {
    throw CoverError(ErrorCode::kDisconnected,
                     "graph is disconnected: vertex " +
                         std::to_string(far - dist.begin() + 1) +
                         " unreachable from vertex 1");
  }
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  CheckVertex(v, num_vertices());
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex w) const {
  const auto& adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= num_vertices(); ++u) {
    for (Vertex w : adjacency_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

nlohmann::json Graph::ToJson() const {
  nlohmann::json edge_list = nlohmann::json::array();
  for (const auto& [u, w] : edges()) edge_list.push_back({u, w});
  return {{"n", num_vertices()}, {"edges", std::move(edge_list)}};
}

Graph Graph::FromJson(const nlohmann::json& j) {
  std::vector<Edge> edges;
  int n = 0;
  try {
    n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw CoverError(ErrorCode::kInvalidArgument,
                         "edge entries must be [u, v] pairs");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     std::string("malformed graph: ") + e.what());
  }
  return Build(n, edges);
}

std::vector<int> BfsDistances(const Graph& g, Vertex source) {
  const int n = g.num_vertices();
  CheckVertex(source, n);
  std::vector<int> dist(n, -1);
  std::deque<Vertex> frontier = {source};
  dist[source - 1] = 0;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w - 1] >= 0) continue;
      dist[w - 1] = dist[v - 1] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

PairCodec::PairCodec(int num_vertices) : n_(num_vertices) {
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex w = u + 1; w <= n_; ++w) pairs_.emplace_back(u, w);
  }
}

int64_t PairCodec::Encode(Vertex u, Vertex w) const {
  if (u > w) std::swap(u, w);
  CheckVertex(u, n_);
  CheckVertex(w, n_);
  if (u == w) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "a pair needs two distinct vertices");
  }
  // Pairs with first vertex < u, then the offset within u's block.
  const int64_t before = int64_t{u - 1} * (2 * int64_t{n_} - u) / 2;
  return before + (w - u);
}

}  // namespace covert
