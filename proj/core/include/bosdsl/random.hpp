// Copyright 2026 The bosdsl Authors
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

#include <array>
#include <cstdint>
#include <limits>

namespace bosdsl {

/// SplitMix64 (Steele, Lea, Flood). Used to expand a 64-bit seed into
/// xoshiro state and to derive independent sub-seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna), seeded by four SplitMix64 outputs.
/// Satisfies UniformRandomBitGenerator, but callers that need
/// cross-language reproducibility use uniform() rather than std
/// distributions, whose algorithms are implementation-defined.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);
  /// Raw state, for checking against the reference test vectors.
  static Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4>& state);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// (x >> 11) · 2⁻⁵³, uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [0, n) by multiply-shift on the top 32 bits.
  std::uint32_t below(std::uint32_t n);

 private:
  Xoshiro256StarStar() = default;

  std::array<std::uint64_t, 4> s_{};
};

/// Deterministic child seed for stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace bosdsl
