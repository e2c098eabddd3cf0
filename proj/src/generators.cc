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

#include "covert/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "covert/errors.h"
#include "covert/rng.h"

namespace covert {
namespace {

// Fisher-Yates on top of Rng::Below, so shuffles reproduce everywhere.
template <typename T>
void Shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.Below(i)]);
  }
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw CoverError(ErrorCode::kInvalidArgument, what);
}

bool IsConnected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& [u, w] : edges) {
    const int a = find(u), b = find(w);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

GraphModel ParseGraphModel(std::string_view name) {
  if (name == "path") return GraphModel::kPath;
  if (name == "cycle") return GraphModel::kCycle;
  if (name == "complete") return GraphModel::kComplete;
  if (name == "star") return GraphModel::kStar;
  if (name == "er-connected") return GraphModel::kErConnected;
  if (name == "grid") return GraphModel::kGrid;
  throw CoverError(ErrorCode::kInvalidArgument,
                   "unknown graph model '" + std::string(name) + "'");
}

std::string_view GraphModelName(GraphModel model) {
  switch (model) {
    case GraphModel::kPath:
      return "path";
    case GraphModel::kCycle:
      return "cycle";
    case GraphModel::kComplete:
      return "complete";
    case GraphModel::kStar:
      return "star";
    case GraphModel::kErConnected:
      return "er-connected";
    case GraphModel::kGrid:
      return "grid";
  }
  return "unknown";
}

Graph GenerateGraph(GraphModel model, const GraphParams& params,
                    uint64_t seed) {
  const int n = params.n;
  std::vector<Edge> edges;
  switch (model) {
    case GraphModel::kPath:
      Require(n >= 1, "path needs n >= 1");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::Build(n, edges);
    case GraphModel::kCycle:
      Require(n >= 3, "cycle needs n >= 3");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(1, n);
      return Graph::Build(n, edges);
    case GraphModel::kComplete:
      Require(n >= 1, "complete graph needs n >= 1");
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex w = u + 1; w <= n; ++w) edges.emplace_back(u, w);
      }
      return Graph::Build(n, edges);
    case GraphModel::kStar:
      Require(n >= 1, "star needs n >= 1");
      for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
      return Graph::Build(n, edges);
    case GraphModel::kGrid: {
      Require(params.rows >= 1 && params.cols >= 1,
              "grid needs rows >= 1 and cols >= 1");
      auto id = [&](int r, int c) { return r * params.cols + c + 1; };
      for (int r = 0; r < params.rows; ++r) {
        for (int c = 0; c < params.cols; ++c) {
          if (c + 1 < params.cols) edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < params.rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
      }
      return Graph::Build(params.rows * params.cols, edges);
    }
    case GraphModel::kErConnected: {
      Require(n >= 1, "er-connected needs n >= 1");
      Require(params.p > 0.0 && params.p <= 1.0,
              "er-connected needs p in (0, 1]");
      Rng rng(seed);
      for (int attempt = 0; attempt < params.max_retries; ++attempt) {
        edges.clear();
        for (Vertex u = 1; u <= n; ++u) {
          for (Vertex w = u + 1; w <= n; ++w) {
            if (rng.Bernoulli(params.p)) edges.emplace_back(u, w);
          }
        }
        if (IsConnected(n, edges)) return Graph::Build(n, edges);
      }
      throw CoverError(ErrorCode::kRetryExhausted,
                       "no connected G(n, p) sample within " +
                           std::to_string(params.max_retries) + " attempts");
    }
  }
  throw CoverError(ErrorCode::kInvalidArgument, "unknown graph model");
}

SetModel ParseSetModel(std::string_view name) {
  if (name == "uniform-random") return SetModel::kUniformRandom;
  if (name == "planted-cover") return SetModel::kPlantedCover;
  if (name == "skewed") return SetModel::kSkewed;
  throw CoverError(ErrorCode::kInvalidArgument,
                   "unknown set model '" + std::string(name) + "'");
}

std::string_view SetModelName(SetModel model) {
  switch (model) {
    case SetModel::kUniformRandom:
      return "uniform-random";
    case SetModel::kPlantedCover:
      return "planted-cover";
    case SetModel::kSkewed:
      return "skewed";
  }
  return "unknown";
}

nlohmann::json GeneratedSetSystem::Metadata() const {
  nlohmann::json j = {{"coverable", coverable},
                      {"universe_size", system.universe_size()},
                      {"num_sets", system.num_sets()}};
  if (!planted_cover.empty()) j["planted_cover"] = planted_cover;
  return j;
}

GeneratedSetSystem GenerateSetSystem(SetModel model, const SetParams& params,
                                     uint64_t seed) {
  const int n = params.universe_size;
  const int m = params.num_sets;
  Require(n >= 1, "universe_size must be >= 1");
  Require(m >= 1, "num_sets must be >= 1");
  Rng rng(seed);
  std::vector<std::vector<ElementId>> sets(m);
  std::vector<SetIndex> planted;

  switch (model) {
    case SetModel::kUniformRandom:
      Require(params.density > 0.0 && params.density <= 1.0,
              "density must lie in (0, 1]");
      for (auto& s : sets) {
        for (ElementId e = 1; e <= n; ++e) {
          if (rng.Bernoulli(params.density)) s.push_back(e);
        }
      }
      break;
    case SetModel::kPlantedCover: {
      const int k = params.planted_k;
      Require(k >= 1 && k <= m && k <= n,
              "planted-cover needs 1 <= k <= min(num_sets, universe_size)");
      std::vector<ElementId> elements(n);
      std::iota(elements.begin(), elements.end(), 1);
      Shuffle(elements, rng);
      std::vector<std::vector<ElementId>> blocks(k);
      for (int b = 0; b < k; ++b) {
        const int lo = static_cast<int>(int64_t{n} * b / k);
        const int hi = static_cast<int>(int64_t{n} * (b + 1) / k);
        blocks[b].assign(elements.begin() + lo, elements.begin() + hi);
      }
      std::vector<int> slots(m);
      std::iota(slots.begin(), slots.end(), 0);
      Shuffle(slots, rng);
      for (int b = 0; b < k; ++b) {
        sets[slots[b]] = blocks[b];
        planted.push_back(slots[b] + 1);
      }
      for (int j = k; j < m; ++j) {
        std::vector<ElementId> block = blocks[rng.Below(k)];
        size_t cap = block.size() <= 1 ? 1 : block.size() - 1;
        if (params.decoy_max_size > 0) {
          cap = std::min<size_t>(cap, params.decoy_max_size);
        }
        const size_t size = 1 + rng.Below(cap);
        Shuffle(block, rng);
        sets[slots[j]].assign(block.begin(), block.begin() + size);
      }
      std::sort(planted.begin(), planted.end());
      break;
    }
    case SetModel::kSkewed:
      // Size ~ n * u^3: many small sets, a few large ones.
      for (auto& s : sets) {
        const double u = rng.Uniform();
        const int size =
            std::max(1, static_cast<int>(std::lround(n * u * u * u)));
        std::vector<ElementId> elements(n);
        std::iota(elements.begin(), elements.end(), 1);
        Shuffle(elements, rng);
        s.assign(elements.begin(), elements.begin() + size);
      }
      break;
  }

  GeneratedSetSystem out{SetSystem::Build(std::move(sets), n), false,
                         std::move(planted)};
  out.coverable = out.system.CoversUniverse();
  return out;
}

}  // namespace covert
