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

#include "covert/cover_result.h"

namespace covert {

nlohmann::json RoundTrace::ToJson() const {
  return {{"i", round},
          {"n_i", uncovered},
          {"s_i", scale},
          {"p", probability},
          {"sample_size", sample.size()},
          {"shortlist", shortlist},
          {"chosen", chosen},
          {"base_case", base_case},
          {"ledger_delta", covert::ToJson(ledger_delta)}};
}

nlohmann::json GuessTrace::ToJson() const {
  return {{"k", guess},
          {"net_size", net_size},
          {"iteration_cap", iteration_cap},
          {"iterations", iterations},
          {"misses", misses},
          {"succeeded", succeeded},
          {"ledger_delta", covert::ToJson(ledger_delta)}};
}

nlohmann::json CoverResult::ToJson() const {
  nlohmann::json j = {{"algorithm", algorithm},
                      {"cover", cover},
                      {"cover_size", cover.size()},
                      {"ledger", ledger.ToJson()},
                      {"base_case_entered", base_case_entered},
                      {"failed", failed}};
  if (uncovered_element) j["uncovered_element"] = *uncovered_element;
  if (!rounds.empty()) {
    auto& out = j["rounds"] = nlohmann::json::array();
    for (const auto& r : rounds) out.push_back(r.ToJson());
  }
  if (!guesses.empty()) {
    auto& out = j["guesses"] = nlohmann::json::array();
    for (const auto& g : guesses) out.push_back(g.ToJson());
  }
  return j;
}

}  // namespace covert
