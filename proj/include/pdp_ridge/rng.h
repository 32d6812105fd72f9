//
// Copyright 2026 The PDP Ridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PDP_RIDGE_RNG_H_
#define PDP_RIDGE_RNG_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>

namespace pdp_ridge {

// Seeded pseudo-random source shared by every sampler in the library.
//
// The algorithms are pinned so that a (seed, call sequence) pair reproduces
// the same stream on every platform:
//   * state transition: xoshiro256** (Blackman & Vigna), 256-bit state;
//   * seeding: the four state words are successive SplitMix64 outputs of the
//     64-bit seed;
//   * Uniform(): ((x >> 11) + 0.5) * 2^-53, i.e. strictly inside (0, 1);
//   * StandardNormal(): Box-Muller on two Uniform() draws; the sine variate
//     is cached and returned by the next call.
//
// Not cryptographically secure. Not thread-safe: give each thread (or each
// trial) its own instance, see DeriveSeed().
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t NextU64();
  double Uniform();
  double StandardNormal();

 private:
  std::array<uint64_t, 4> state_;
  std::optional<double> spare_normal_;
};

// Uniform integer in [0, bound) from one Uniform() draw. Requires bound >= 1.
int UniformIndex(int bound, Rng& rng);

// In-place Fisher-Yates shuffle, swapping from the back.
void Shuffle(std::span<int> values, Rng& rng);

// One SplitMix64 step: advances `state` and returns the mixed output.
uint64_t SplitMix64(uint64_t& state);

// Stable seed-splitting rule: starting from `master`, each element of `path`
// is folded in as state = SplitMix64(state ^ element) (after one initial mix
// of the master). Distinct paths give statistically independent streams.
uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> path);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_RNG_H_
