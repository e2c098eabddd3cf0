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

#include "covert/set_system.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covert/errors.h"

namespace covert {
namespace {

using Words = std::vector<uint64_t>;

Words MakeWords(int universe_size) {
  return Words((static_cast<size_t>(universe_size) + 64) / 64, 0);
}

void SetBit(Words& w, int bit) { w[bit >> 6] |= uint64_t{1} << (bit & 63); }

void OrInto(Words& dst, const Words& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

// Lowest element of 1..universe_size missing from `w`, or 0 if none.
int FirstMissing(const Words& w, int universe_size) {
  for (size_t i = 0; i < w.size(); ++i) {
    uint64_t missing = ~w[i];
    if (i == 0) missing &= ~uint64_t{1};  // bit 0 is unused
    if (missing != 0) {
      const int bit = static_cast<int>(i * 64) + __builtin_ctzll(missing);
      return bit > universe_size ? 0 : bit;
    }
  }
  return 0;
}

class MinCoverSearch {
 public:
  explicit MinCoverSearch(const SetSystem& sys) : sys_(sys) {
    masks_.reserve(sys.num_sets() + 1);
    masks_.push_back(MakeWords(sys.universe_size()));
    for (SetIndex s = 1; s <= sys.num_sets(); ++s) {
      Words w = MakeWords(sys.universe_size());
      for (ElementId e : sys.set(s)) SetBit(w, e);
      masks_.push_back(std::move(w));
    }
  }

  // Lexicographically first cover with exactly `k` sets, if any.
  bool Search(int k) {
    chosen_.clear();
    return Extend(MakeWords(sys_.universe_size()), 1, k);
  }

  const std::vector<SetIndex>& chosen() const { return chosen_; }

 private:
  bool Extend(const Words& covered, SetIndex start, int remaining) {
    const int missing = FirstMissing(covered, sys_.universe_size());
    if (missing == 0) return remaining == 0;
    if (remaining == 0) return false;
    // Some remaining pick has to contain the lowest missing element.
    const auto holders = sys_.sets_containing(missing);
    if (holders.empty() || holders.back() < start) return false;
    for (SetIndex s = start; s <= sys_.num_sets() - remaining + 1; ++s) {
      Words next = covered;
      OrInto(next, masks_[s]);
      chosen_.push_back(s);
      if (Extend(next, s + 1, remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const SetSystem& sys_;
  std::vector<Words> masks_;
  std::vector<SetIndex> chosen_;
};

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kOutOfRange:
      return "out_of_range";
    case ErrorCode::kUncoverable:
      return "uncoverable";
    case ErrorCode::kCapExceeded:
      return "cap_exceeded";
    case ErrorCode::kDisconnected:
      return "disconnected";
    case ErrorCode::kRetryExhausted:
      return "retry_exhausted";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

SetSystem SetSystem::Build(std::vector<std::vector<ElementId>> sets,
                           int universe_size) {
  if (universe_size < 1) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "universe_size must be at least 1");
  }
  if (sets.empty()) {
    throw CoverError(ErrorCode::kInvalidArgument, "empty set family");
  }
  SetSystem sys;
  sys.universe_size_ = universe_size;
  sys.element_to_sets_.assign(universe_size + 1, {});
  for (size_t i = 0; i < sets.size(); ++i) {
    auto& members = sets[i];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (ElementId e : members) {
      if (e < 1 || e > universe_size) {
        throw CoverError(ErrorCode::kOutOfRange,
                         "element " + std::to_string(e) + " of set " +
                             std::to_string(i + 1) + " outside [1, " +
                             std::to_string(universe_size) + "]");
      }
      sys.element_to_sets_[e].push_back(static_cast<SetIndex>(i + 1));
    }
  }
  sys.sets_ = std::move(sets);
  return sys;
}

std::span<const ElementId> SetSystem::set(SetIndex s) const {
  if (s < 1 || s > num_sets()) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "set index " + std::to_string(s) + " out of range");
  }
  return sets_[s - 1];
}

std::span<const SetIndex> SetSystem::sets_containing(ElementId e) const {
  if (e < 1 || e > universe_size_) {
    throw CoverError(ErrorCode::kOutOfRange,
                     "element " + std::to_string(e) + " out of range");
  }
  return element_to_sets_[e];
}

bool SetSystem::contains(SetIndex s, ElementId e) const {
  const auto members = set(s);
  return std::binary_search(members.begin(), members.end(), e);
}

std::optional<ElementId> SetSystem::FirstUncoverable() const {
  for (ElementId e = 1; e <= universe_size_; ++e) {
    if (element_to_sets_[e].empty()) return e;
  }
  return std::nullopt;
}

nlohmann::json SetSystem::ToJson() const {
  return {{"universe_size", universe_size_}, {"sets", sets_}};
}

SetSystem SetSystem::FromJson(const nlohmann::json& j) {
  try {
    return Build(j.at("sets").get<std::vector<std::vector<ElementId>>>(),
                 j.at("universe_size").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     std::string("malformed set system: ") + e.what());
  }
}

Cover Cover::FromIndices(const SetSystem& sys,
                         std::vector<SetIndex> set_indices) {
  std::vector<char> seen(sys.num_sets() + 1, 0);
  std::vector<char> hit(sys.universe_size() + 1, 0);
  for (SetIndex s : set_indices) {
    if (s < 1 || s > sys.num_sets()) {
      throw CoverError(ErrorCode::kOutOfRange,
                       "set index " + std::to_string(s) + " out of range");
    }
    if (seen[s]) {
      throw CoverError(ErrorCode::kInvalidArgument,
                       "duplicate set index " + std::to_string(s));
    }
    seen[s] = 1;
    for (ElementId e : sys.set(s)) hit[e] = 1;
  }
  Cover cover;
  cover.set_indices = std::move(set_indices);
  for (ElementId e = 1; e <= sys.universe_size(); ++e) {
    if (hit[e]) cover.covered.push_back(e);
  }
  return cover;
}

Cover GreedyCover(const SetSystem& sys, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw CoverError(ErrorCode::kInvalidArgument, "theta must lie in (0, 1]");
  }
  if (auto e = sys.FirstUncoverable()) throw UncoverableError(*e);

  const int m = sys.num_sets();
  std::vector<int> fresh(m + 1, 0);
  for (SetIndex s = 1; s <= m; ++s) {
    fresh[s] = static_cast<int>(sys.set(s).size());
  }
  std::vector<char> covered(sys.universe_size() + 1, 0);
  int remaining = sys.universe_size();
  std::vector<SetIndex> picked;

  while (remaining > 0) {
    const int n_max = *std::max_element(fresh.begin() + 1, fresh.end());
    const double bar = theta * n_max;
    SetIndex choice = 0;
    for (SetIndex s = 1; s <= m; ++s) {
      if (fresh[s] > 0 && fresh[s] >= bar) {
        choice = s;
        break;
      }
    }
    picked.push_back(choice);
    for (ElementId e : sys.set(choice)) {
      if (covered[e]) continue;
      covered[e] = 1;
      --remaining;
      for (SetIndex t : sys.sets_containing(e)) --fresh[t];
    }
  }
  return Cover::FromIndices(sys, std::move(picked));
}

ThresholdPassResult ThresholdPass(const SetSystem& sys,
                                  std::span<const ElementId> uncovered,
                                  double threshold) {
  std::vector<char> open(sys.universe_size() + 1, 0);
  for (ElementId e : uncovered) open[e] = 1;
  auto count_open = [&](SetIndex s) {
    int c = 0;
    for (ElementId e : sys.set(s)) c += open[e];
    return c;
  };

  ThresholdPassResult result;
  for (SetIndex s = 1; s <= sys.num_sets(); ++s) {
    if (count_open(s) >= threshold) result.shortlist.push_back(s);
  }
  for (SetIndex s : result.shortlist) {
    if (count_open(s) < threshold) continue;
    result.chosen.push_back(s);
    for (ElementId e : sys.set(s)) open[e] = 0;
  }
  return result;
}

Cover BruteForceMinCover(const SetSystem& sys, int max_sets) {
  if (sys.num_sets() > max_sets) {
    throw CoverError(ErrorCode::kCapExceeded,
                     "brute force limited to " + std::to_string(max_sets) +
                         " sets, instance has " +
                         std::to_string(sys.num_sets()));
  }
  if (auto e = sys.FirstUncoverable()) throw UncoverableError(*e);
  MinCoverSearch search(sys);
  for (int k = 1; k <= sys.num_sets(); ++k) {
    if (search.Search(k)) return Cover::FromIndices(sys, search.chosen());
  }
  // Unreachable: the whole family is a cover.
  throw CoverError(ErrorCode::kUncoverable, "no cover found");
}

bool VerifyCover(const SetSystem& sys, std::span<const SetIndex> set_indices) {
  std::vector<char> hit(sys.universe_size() + 1, 0);
  int count = 0;
  for (SetIndex s : set_indices) {
    for (ElementId e : sys.set(s)) {
      if (!hit[e]) {
        hit[e] = 1;
        ++count;
      }
    }
  }
  return count == sys.universe_size();
}

Rational ApportionedCost::Total() const {
  Rational total(0);
  for (ElementId e : cover_order) total += weight(e);
  return total;
}

ApportionedCost ApportionedWeights(const SetSystem& sys, const Cover& cover) {
  if (!VerifyCover(sys, cover)) {
    throw CoverError(ErrorCode::kInvalidArgument,
                     "apportionment needs a valid cover");
  }
  ApportionedCost cost;
  cost.share.assign(sys.universe_size() + 1, 0);
  for (SetIndex s : cover.set_indices) {
    std::vector<ElementId> fresh;
    for (ElementId e : sys.set(s)) {
      if (cost.share[e] == 0) fresh.push_back(e);
    }
    for (ElementId e : fresh) {
      cost.share[e] = static_cast<int64_t>(fresh.size());
      cost.cover_order.push_back(e);
    }
  }
  return cost;
}

double Harmonic(int n) {
  double h = 0.0;
  for (int i = n; i >= 1; --i) h += 1.0 / i;
  return h;
}

}  // namespace covert
