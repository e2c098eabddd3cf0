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

#ifndef COVERT_RNG_H_
#define COVERT_RNG_H_

#include <cstdint>
#include <random>

namespace covert {

// Seedable, splittable generator. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the conversions below avoid the
// implementation-defined std distributions so that runs reproduce bit-for-bit
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(Mix(seed)) {}

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return Uniform() < p;
  }

  // Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  uint64_t Below(uint64_t bound);

  // Independent child stream; deterministic in (seed, stream).
  Rng Split(uint64_t stream) const {
    return Rng(Mix(seed_ ^ Mix(stream + 0x632be59bd9b4e019ULL)));
  }

  // SplitMix64 finalizer.
  static uint64_t Mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

inline uint64_t Rng::Below(uint64_t bound) {
  if (bound <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

}  // namespace covert

#endif  // COVERT_RNG_H_
