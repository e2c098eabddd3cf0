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

#include "covert/discovery.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "covert/errors.h"
#include "covert/pseudo_greedy.h"
#include "covert/rng.h"

namespace covert {
namespace {

const char* StatusName(PairStatus s) {
  switch (s) {
    case PairStatus::kEdge:
      return "edge";
    case PairStatus::kNonEdge:
      return "non-edge";
    case PairStatus::kUnresolved:
      break;
  }
  return "unresolved";
}

nlohmann::json EdgeListJson(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [u, w] : edges) out.push_back({u, w});
  return out;
}

}  // namespace

LayeredAnswer ComputeLayeredAnswer(const Graph& g, Vertex source) {
  LayeredAnswer answer;
  answer.source = source;
  answer.dist = BfsDistances(g, source);
  for (const auto& [x, y] : g.edges()) {
    if (std::abs(answer.distance(x) - answer.distance(y)) == 1) {
      answer.shortest_path_edges.emplace_back(x, y);
    }
  }
  return answer;
}

std::vector<Certificate> CertifiedPairs(const LayeredAnswer& answer,
                                        const PairCodec& codec) {
  const int n = codec.num_vertices();
  std::vector<Certificate> out;
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = x + 1; y <= n; ++y) {
      const int gap = std::abs(answer.distance(x) - answer.distance(y));
      if (gap == 0) continue;
      PairStatus status = PairStatus::kNonEdge;
      if (gap == 1 && std::binary_search(answer.shortest_path_edges.begin(),
                                         answer.shortest_path_edges.end(),
                                         Edge{x, y})) {
        status = PairStatus::kEdge;
      }
      out.push_back({codec.Encode(x, y), status});
    }
  }
  return out;
}

GraphOracle::GraphOracle(std::shared_ptr<const Graph> hidden)
    : hidden_(std::move(hidden)) {
  if (!hidden_) {
    throw CoverError(ErrorCode::kInvalidArgument, "oracle needs a graph");
  }
}

LayeredAnswer GraphOracle::LayeredQuery(Vertex v) {
  if (v < 1 || v > hidden_->num_vertices()) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "layered query at vertex " + std::to_string(v) +
                         " outside [1, " +
                         std::to_string(hidden_->num_vertices()) + "]");
  }
  ledger_.Charge(QueryKind::kLayered);
  return ComputeLayeredAnswer(*hidden_, v);
}

std::vector<Vertex> HittingSetFromDistances(const std::vector<int>& dist_u,
                                            const std::vector<int>& dist_w) {
  std::vector<Vertex> out;
  for (size_t i = 0; i < dist_u.size(); ++i) {
    if (dist_u[i] != dist_w[i]) out.push_back(static_cast<Vertex>(i + 1));
  }
  return out;
}

HittingSetAnswer HittingSetH(GraphOracle& oracle, Vertex u, Vertex w) {
  if (u == w) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "H(u, w) needs two distinct vertices");
  }
  HittingSetAnswer answer;
  answer.from_u = oracle.LayeredQuery(u);
  answer.from_w = oracle.LayeredQuery(w);
  answer.vertices =
      HittingSetFromDistances(answer.from_u.dist, answer.from_w.dist);
  return answer;
}

DiscoveryState::DiscoveryState(int num_vertices)
    : codec_(num_vertices),
      status_(codec_.num_pairs() + 1, PairStatus::kUnresolved),
      unresolved_(codec_.num_pairs()) {}

std::vector<int64_t> DiscoveryState::UnresolvedPairs() const {
  std::vector<int64_t> out;
  for (int64_t p = 1; p <= codec_.num_pairs(); ++p) {
    if (status_[p] == PairStatus::kUnresolved) out.push_back(p);
  }
  return out;
}

void DiscoveryState::Apply(const std::vector<Certificate>& certificates) {
  for (const auto& c : certificates) {
    PairStatus& slot = status_[c.pair];
    if (slot == PairStatus::kUnresolved) {
      slot = c.status;
      --unresolved_;
    } else if (slot != c.status) {
      const auto [u, w] = codec_.Decode(c.pair);
      throw CoverError(ErrorCode::kInvalidArgument,
                       "contradictory certificates for pair {" +
                           std::to_string(u) + ", " + std::to_string(w) +
                           "}: " + StatusName(slot) + " vs " +
                           StatusName(c.status));
    }
  }
}

std::vector<Edge> DiscoveryState::edges() const {
  std::vector<Edge> out;
  for (int64_t p = 1; p <= codec_.num_pairs(); ++p) {
    if (status_[p] == PairStatus::kEdge) out.push_back(codec_.Decode(p));
  }
  return out;
}

std::vector<Edge> DiscoveryState::non_edges() const {
  std::vector<Edge> out;
  for (int64_t p = 1; p <= codec_.num_pairs(); ++p) {
    if (status_[p] == PairStatus::kNonEdge) out.push_back(codec_.Decode(p));
  }
  return out;
}

nlohmann::json DiscoveryRound::ToJson() const {
  return {{"i", round},
          {"n_i", unresolved},
          {"s_i", scale},
          {"p", probability},
          {"sample_size", sample_size},
          {"hitting_set_queries", hitting_set_queries},
          {"shortlist", shortlist},
          {"chosen", chosen},
          {"cover_update_queries", cover_update_queries},
          {"base_case", base_case},
          {"ledger_delta", covert::ToJson(ledger_delta)}};
}

nlohmann::json DiscoveryResult::ToJson(
    std::optional<double> competitive_ratio) const {
  nlohmann::json rounds_json = nlohmann::json::array();
  for (const auto& r : rounds) rounds_json.push_back(r.ToJson());
  nlohmann::json j = {{"edges", EdgeListJson(state.edges())},
                      {"non_edges", EdgeListJson(state.non_edges())},
                      {"query_set", query_set},
                      {"queried_vertices", queried_vertices},
                      {"ledger", ledger.ToJson()},
                      {"rounds", std::move(rounds_json)}};
  if (competitive_ratio) j["competitive_ratio"] = *competitive_ratio;
  return j;
}

DiscoveryResult RunNetworkDiscovery(GraphOracle& oracle,
                                    const DiscoveryOptions& options) {
  if (!(options.alpha > 0.0)) {
    throw CoverError(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  const int n = oracle.num_vertices();
  const int64_t scale_n = int64_t{n} * n;
  const double threshold = HitThreshold(options.alpha, scale_n);
  Rng rng(options.seed);

  DiscoveryResult result{DiscoveryState(n), {}, {}, {}, {}};
  DiscoveryState& state = result.state;
  const PairCodec& codec = state.codec();
  const double total_pairs = static_cast<double>(codec.num_pairs());
  std::vector<char> queried(n + 1, 0);

  auto absorb = [&](const LayeredAnswer& answer) {
    queried[answer.source] = 1;
    auto certificates = CertifiedPairs(answer, codec);
    state.Apply(certificates);
    return certificates;
  };
  auto fetch_h = [&](int64_t pair) {
    const auto [u, w] = codec.Decode(pair);
    HittingSetAnswer h = HittingSetH(oracle, u, w);
    absorb(h.from_u);
    absorb(h.from_w);
    return std::move(h.vertices);
  };

  for (int i = 0; state.unresolved_count() > 0; ++i) {
    DiscoveryRound round;
    round.round = i;
    const std::vector<int64_t> unresolved = state.UnresolvedPairs();
    round.unresolved = static_cast<int64_t>(unresolved.size());
    round.scale = std::min(std::ldexp(total_pairs, -i),
                           static_cast<double>(unresolved.size()));
    const QueryCounts before = oracle.counts();

    if (round.scale <= threshold) {
      // Every pair still undiscovered at its turn gets its H set. Querying an
      // endpoint certifies the pair itself, so nothing is left for an
      // explicit cover afterwards.
      oracle.MarkPhase("base-case");
      round.base_case = true;
      for (int64_t pair : unresolved) {
        if (state.status(pair) != PairStatus::kUnresolved) continue;
        fetch_h(pair);
        ++round.hitting_set_queries;
      }
      round.ledger_delta = oracle.counts() - before;
      result.rounds.push_back(std::move(round));
      break;
    }

    oracle.MarkPhase("round-" + std::to_string(i));
    round.probability =
        SampleProbability(round.scale, options.alpha, scale_n);
    std::vector<int64_t> sample;
    for (int64_t pair : unresolved) {
      if (rng.Bernoulli(round.probability)) sample.push_back(pair);
    }
    round.sample_size = static_cast<int64_t>(sample.size());

    // hits[x]: sampled pairs whose H set contains x.
    std::vector<std::vector<int64_t>> hits(n + 1);
    for (int64_t pair : sample) {
      for (Vertex x : fetch_h(pair)) hits[x].push_back(pair);
      ++round.hitting_set_queries;
    }
    for (Vertex x = 1; x <= n; ++x) {
      if (static_cast<double>(hits[x].size()) >= threshold) {
        round.shortlist.push_back(x);
      }
    }

    std::vector<char> in_sample(codec.num_pairs() + 1, 0);
    for (int64_t pair : sample) in_sample[pair] = 1;
    std::vector<char> claimed(codec.num_pairs() + 1, 0);
    for (Vertex x : round.shortlist) {
      int64_t residual = 0;
      for (int64_t pair : hits[x]) residual += !claimed[pair];
      if (static_cast<double>(residual) < threshold) continue;
      for (const auto& c : absorb(oracle.LayeredQuery(x))) {
        if (in_sample[c.pair]) claimed[c.pair] = 1;
      }
      ++round.cover_update_queries;
      round.chosen.push_back(x);
      result.query_set.push_back(x);
    }
    round.ledger_delta = oracle.counts() - before;
    result.rounds.push_back(std::move(round));
  }

  for (Vertex v = 1; v <= n; ++v) {
    if (queried[v]) result.queried_vertices.push_back(v);
  }
  oracle.MarkPhase(QueryLedger::kDefaultPhase);
  result.ledger = oracle.Snapshot();
  return result;
}

SetSystem BuildVerificationSystem(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "verification needs at least two vertices");
  }
  const PairCodec codec(g.num_vertices());
  std::vector<std::vector<ElementId>> sets;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    std::vector<ElementId> members;
    for (const auto& c : CertifiedPairs(ComputeLayeredAnswer(g, v), codec)) {
      members.push_back(static_cast<ElementId>(c.pair));
    }
    sets.push_back(std::move(members));
  }
  return SetSystem::Build(std::move(sets),
                          static_cast<int>(codec.num_pairs()));
}

VerificationResult OfflineVerification(const Graph& g, VerificationMode mode) {
  if (g.num_vertices() < 2) return {};
  if (mode == VerificationMode::kExact &&
      g.num_vertices() > kExactVerificationCap) {
    throw CoverError(ErrorCode::kCapExceeded,
                     "exact verification limited to " +
                         std::to_string(kExactVerificationCap) +
                         " vertices");
  }
  const SetSystem sys = BuildVerificationSystem(g);
  const Cover cover = mode == VerificationMode::kExact
                          ? BruteForceMinCover(sys, kExactVerificationCap)
                          : GreedyCover(sys, 1.0);
  return {cover.set_indices};
}

double CompetitiveRatio(const DiscoveryResult& result, int opt_size) {
  if (opt_size < 1) {
    throw CoverError(ErrorCode::kInvalidArgument, "opt_size must be >= 1");
  }
  return static_cast<double>(result.layered_queries()) / opt_size;
}

}  // namespace covert
