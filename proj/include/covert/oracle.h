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

#ifndef COVERT_ORACLE_H_
#define COVERT_ORACLE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "covert/set_system.h"
#include "json.hpp"

namespace covert {

enum class QueryKind { kHitting, kSet, kLayered };

struct QueryCounts {
  int64_t hitting = 0;
  int64_t set = 0;
  int64_t layered = 0;

  int64_t total() const { return hitting + set + layered; }

  QueryCounts& operator+=(const QueryCounts& o) {
    hitting += o.hitting;
    set += o.set;
    layered += o.layered;
    return *this;
  }
  friend QueryCounts operator-(QueryCounts a, const QueryCounts& b) {
    a.hitting -= b.hitting;
    a.set -= b.set;
    a.layered -= b.layered;
    return a;
  }
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

nlohmann::json ToJson(const QueryCounts& c);

// Running query counts, overall and per phase label. Counts only grow.
class QueryLedger {
 public:
  static constexpr const char* kDefaultPhase = "main";

  void Charge(QueryKind kind);
  void MarkPhase(std::string label) { phase_ = std::move(label); }

  const QueryCounts& counts() const { return counts_; }
  const std::map<std::string, QueryCounts>& by_phase() const {
    return by_phase_;
  }
  const std::string& phase() const { return phase_; }

  int64_t total() const { return counts_.total(); }

  nlohmann::json ToJson() const;

 private:
  QueryCounts counts_;
  std::map<std::string, QueryCounts> by_phase_;
  std::string phase_ = kDefaultPhase;
};

// The only channel through which covert algorithms learn the hidden system.
// n' and m' are free; every hitting or set query is charged one unit, repeats
// included.
//
// Not thread-safe: confine each oracle (and its ledger) to one thread.
class CovertOracle {
 public:
  explicit CovertOracle(std::shared_ptr<const SetSystem> hidden);

  int universe_size() const { return hidden_->universe_size(); }
  int num_sets() const { return hidden_->num_sets(); }

  // Indices of all sets containing `e`, ascending.
  std::vector<SetIndex> HittingQuery(ElementId e);
  // Elements of set `s`, ascending.
  std::vector<ElementId> SetQuery(SetIndex s);

  QueryLedger Snapshot() const { return ledger_; }
  const QueryCounts& counts() const { return ledger_.counts(); }
  void MarkPhase(std::string label) { ledger_.MarkPhase(std::move(label)); }

  // When set, every answered query is appended as one JSON line:
  // {"kind":"hit"|"set","arg":id,"answer":[...],"phase":label}.
  void set_query_log(std::ostream* log) { log_ = log; }

 private:
  void Log(const char* kind, int arg, std::span<const int> answer);

  std::shared_ptr<const SetSystem> hidden_;
  QueryLedger ledger_;
  std::ostream* log_ = nullptr;
};

}  // namespace covert

#endif  // COVERT_ORACLE_H_
