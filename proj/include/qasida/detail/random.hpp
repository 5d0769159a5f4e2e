// Copyright 2026 The Qasida Authors. All Rights Reserved.
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

namespace qasida::detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seeded generator whose output is fixed by the C++ standard (mt19937_64),
/// so results are reproducible across platforms. The uniform draw is built
/// from raw engine bits rather than std::uniform_real_distribution, whose
/// algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream for item `index` of a batch; lets per-item work run
  /// on any thread and still draw the same numbers.
  static Rng for_item(std::uint64_t seed, std::uint64_t index) { return Rng(item_seed(seed, index)); }

  static constexpr std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return seed ^ splitmix64(index + 0x5851F42D4C957F2DULL);
  }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qasida::detail
