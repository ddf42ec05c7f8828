// Copyright 2026 The qtherm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qtherm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed of substream `index` of master seed `master`. Every shot (and every
// repetition, and every grid cell) gets its own substream, so results do not
// depend on evaluation order.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// Single uniform in [0, 1) for shot `index` of stream `master`. Cheaper than
// constructing a ShotRng when a shot consumes exactly one draw (sampling a
// precomputed outcome distribution).
inline double shot_uniform(std::uint64_t master, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(derive_stream(master, index));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform source for a single shot. Identical seeds give bit-identical draws.
class ShotRng {
 public:
  explicit ShotRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qtherm
