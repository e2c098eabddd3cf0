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

// Network discovery and verification in the layered graph query model.
//
// A query at v reveals the shortest-path edges from v. Equivalently it
// certifies every vertex pair whose endpoints sit at different distances from
// v: consecutive levels are an edge iff listed, pairs two or more levels
// apart are non-edges. Pairs on the same level stay unresolved.
//
// Discovery is covert set cover with pairs as elements and vertices as sets
// (set v = pairs certified by a query at v). The hitting query for a pair
// {u, w} is H(u, w) = {x : d(u, x) != d(w, x)}, obtained from two layered
// queries (at u and at w).

#ifndef COVERT_DISCOVERY_H_
#define COVERT_DISCOVERY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "covert/graph.h"
#include "covert/oracle.h"
#include "covert/set_system.h"
#include "json.hpp"

namespace covert {

struct LayeredAnswer {
  Vertex source = 0;
  // dist[v - 1] = d(source, v).
  std::vector<int> dist;
  // Present edges (min, max) joining consecutive levels, sorted.
  std::vector<Edge> shortest_path_edges;

  int distance(Vertex v) const { return dist[v - 1]; }
};

// Unmetered layered answer; used by offline verification and test oracles.
LayeredAnswer ComputeLayeredAnswer(const Graph& g, Vertex source);

enum class PairStatus : uint8_t { kUnresolved, kEdge, kNonEdge };

struct Certificate {
  int64_t pair = 0;  // PairCodec id
  PairStatus status = PairStatus::kUnresolved;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Q_v: every pair at different distances from the source, with its status
// read off the answer. Sorted by pair id.
std::vector<Certificate> CertifiedPairs(const LayeredAnswer& answer,
                                        const PairCodec& codec);

// The hidden graph behind a metered layered-query interface.
// Not thread-safe: confine each oracle to one thread.
class GraphOracle {
 public:
  explicit GraphOracle(std::shared_ptr<const Graph> hidden);

  int num_vertices() const { return hidden_->num_vertices(); }

  LayeredAnswer LayeredQuery(Vertex v);

  const QueryCounts& counts() const { return ledger_.counts(); }
  QueryLedger Snapshot() const { return ledger_; }
  void MarkPhase(std::string label) { ledger_.MarkPhase(std::move(label)); }

 private:
  std::shared_ptr<const Graph> hidden_;
  QueryLedger ledger_;
};

// {x : dist_u(x) != dist_w(x)}, ascending.
std::vector<Vertex> HittingSetFromDistances(const std::vector<int>& dist_u,
                                            const std::vector<int>& dist_w);

struct HittingSetAnswer {
  std::vector<Vertex> vertices;
  // The two answers behind H; their certificates are side-information.
  LayeredAnswer from_u;
  LayeredAnswer from_w;
};

// Two layered queries (u, then w). Throws kInvalidArgument when u == w.
HittingSetAnswer HittingSetH(GraphOracle& oracle, Vertex u, Vertex w);

// Per-pair knowledge accumulated by a discovery run.
class DiscoveryState {
 public:
  explicit DiscoveryState(int num_vertices);

  const PairCodec& codec() const { return codec_; }
  PairStatus status(int64_t pair) const { return status_[pair]; }
  int64_t unresolved_count() const { return unresolved_; }
  // Unresolved pair ids, ascending.
  std::vector<int64_t> UnresolvedPairs() const;

  // Moves unresolved pairs to their certified status. A pair that is already
  // resolved must agree; a contradiction throws (it would mean the oracle
  // answered inconsistently).
  void Apply(const std::vector<Certificate>& certificates);

  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

 private:
  PairCodec codec_;
  // Indexed by pair id; slot 0 unused.
  std::vector<PairStatus> status_;
  int64_t unresolved_;
};

struct DiscoveryRound {
  int round = 0;
  int64_t unresolved = 0;
  double scale = 0.0;
  double probability = 0.0;
  int64_t sample_size = 0;
  // Pairs whose H set was fetched (two layered queries each).
  int64_t hitting_set_queries = 0;
  std::vector<Vertex> shortlist;
  std::vector<Vertex> chosen;
  // One layered query per chosen vertex.
  int64_t cover_update_queries = 0;
  bool base_case = false;
  QueryCounts ledger_delta;

  nlohmann::json ToJson() const;
};

struct DiscoveryOptions {
  double alpha = 8.0;
  uint64_t seed = 0;
};

struct DiscoveryResult {
  DiscoveryState state;
  // Vertices picked as cover choices, in selection order.
  std::vector<Vertex> query_set;
  // Every vertex that was queried at least once, ascending.
  std::vector<Vertex> queried_vertices;
  std::vector<DiscoveryRound> rounds;
  QueryLedger ledger;

  int64_t layered_queries() const { return ledger.counts().layered; }

  nlohmann::json ToJson(std::optional<double> competitive_ratio = {}) const;
};

// Pseudo-Greedy over pairs. The scale parameter is N = n^2, so thresholds are
// alpha * 2 log2(n). Certificates from H queries are recorded immediately;
// the unresolved count and the sampling population refresh per round.
DiscoveryResult RunNetworkDiscovery(GraphOracle& oracle,
                                    const DiscoveryOptions& options);

// Explicit system: universe = all pairs (PairCodec ids), set v = Q_v.
SetSystem BuildVerificationSystem(const Graph& g);

enum class VerificationMode { kExact, kGreedy };

inline constexpr int kExactVerificationCap = 12;

struct VerificationResult {
  std::vector<Vertex> query_set;
  int size() const { return static_cast<int>(query_set.size()); }
};

// Offline verification: minimum (exact) or greedy vertex set whose queries
// certify all pairs. Exact mode throws kCapExceeded for n > 12.
VerificationResult OfflineVerification(const Graph& g, VerificationMode mode);

// Layered queries used per optimal query. Throws if opt_size < 1.
double CompetitiveRatio(const DiscoveryResult& result, int opt_size);

}  // namespace covert

#endif  // COVERT_DISCOVERY_H_
