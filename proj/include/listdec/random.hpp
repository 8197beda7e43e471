// Copyright 2026 The listdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace listdec {

/// 64-bit FNV-1a over the little-endian bytes of each value, in order.
///
/// Trial seeds are derived as `derive_seed(master, trial)` so that every trial
/// owns an independent stream regardless of which worker runs it.
std::uint64_t fnv1a64(std::initializer_list<std::uint64_t> values);

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return fnv1a64({seed, index});
}
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return fnv1a64({seed, a, b});
}

/// Deterministic random stream. The engine is mt19937_64; the distributions are
/// implemented here rather than taken from <random>, whose distribution
/// algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; no cached second variate.
  double normal();

  // +1 or -1 with equal probability.
  int sign() { return (engine_() >> 63) ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace listdec
