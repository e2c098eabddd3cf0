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

#include "covert/oracle.h"

#include <string>
#include <utility>

#include "covert/errors.h"

namespace covert {

nlohmann::json ToJson(const QueryCounts& c) {
  return {{"hitting", c.hitting},
          {"set", c.set},
          {"layered", c.layered},
          {"total", c.total()}};
}

void QueryLedger::Charge(QueryKind kind) {
  QueryCounts one;
  switch (kind) {
    case QueryKind::kHitting:
      one.hitting = 1;
      break;
    case QueryKind::kSet:
      one.set = 1;
      break;
    case QueryKind::kLayered:
      one.layered = 1;
      break;
  }
  counts_ += one;
  by_phase_[phase_] += one;
}

nlohmann::json QueryLedger::ToJson() const {
  nlohmann::json phases = nlohmann::json::object();
  for (const auto& [label, c] : by_phase_) phases[label] = covert::ToJson(c);
  nlohmann::json j = covert::ToJson(counts_);
  j["phases"] = std::move(phases);
  return j;
}

CovertOracle::CovertOracle(std::shared_ptr<const SetSystem> hidden)
    : hidden_(std::move(hidden)) {
  if (!hidden_) {
    throw CoverError(ErrorCode::kInvalidArgument, "oracle needs a set system");
  }
}

std::vector<SetIndex> CovertOracle::HittingQuery(ElementId e) {
  if (e < 1 || e > hidden_->universe_size()) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "hitting query on element " + std::to_string(e) +
                         " outside [1, " +
                         std::to_string(hidden_->universe_size()) + "]");
  }
  ledger_.Charge(QueryKind::kHitting);
  const auto answer = hidden_->sets_containing(e);
  Log("hit", e, answer);
  return {answer.begin(), answer.end()};
}

std::vector<ElementId> CovertOracle::SetQuery(SetIndex s) {
  if (s < 1 || s > hidden_->num_sets()) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "set query on index " + std::to_string(s) +
                         " outside [1, " +
                         std::to_string(hidden_->num_sets()) + "]");
  }
  ledger_.Charge(QueryKind::kSet);
  const auto answer = hidden_->set(s);
  Log("set", s, answer);
  return {answer.begin(), answer.end()};
}

void CovertOracle::Log(const char* kind, int arg,
                       std::span<const int> answer) {
  if (log_ == nullptr) return;
  nlohmann::json line = {{"kind", kind},
                         {"arg", arg},
                         {"answer", std::vector<int>(answer.begin(),
                                                     answer.end())},
                         {"phase", ledger_.phase()}};
  *log_ << line.dump() << '\n';
}

}  // namespace covert
