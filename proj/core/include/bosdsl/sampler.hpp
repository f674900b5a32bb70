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

#include <cstdint>
#include <vector>

#include "bosdsl/fock.hpp"

namespace bosdsl {

/// Detection outcomes of repeated runs of one input.
struct ShotRecord {
  std::vector<FockState> shots;
  std::uint64_t seed = 0;
  std::size_t n_shots = 0;

  friend bool operator==(const ShotRecord&, const ShotRecord&) = default;
};

/// Draws n_shots i.i.d. states from `pmf` renormalized to unit mass.
///
/// Inverse CDF over the pmf's canonical (lexicographically descending) order,
/// driven by Xoshiro256StarStar(seed).uniform(); zero-probability states are
/// never drawn. Throws ParameterError on an empty or zero-mass pmf or
/// n_shots == 0.
ShotRecord sample(const Pmf& pmf, std::size_t n_shots, std::uint64_t seed);

/// Relative frequencies of the recorded shots.
Pmf empirical_pmf(const ShotRecord& record);

}  // namespace bosdsl
