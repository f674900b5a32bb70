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
#include "bosdsl/sampler.hpp"

#include <algorithm>
#include <map>

#include "bosdsl/random.hpp"

namespace bosdsl {

ShotRecord sample(const Pmf& pmf, std::size_t n_shots, std::uint64_t seed) {
  if (n_shots == 0) throw ParameterError("need at least one shot");

  std::vector<const FockState*> states;
  std::vector<double> cumulative;
  double mass = 0.0;
  for (const auto& [state, p] : pmf) {
    if (p <= 0.0) continue;
    mass += p;
    states.push_back(&state);
    cumulative.push_back(mass);
  }
  if (states.empty()) throw ParameterError("cannot sample from a pmf with no mass");

  Xoshiro256StarStar rng(seed);
  ShotRecord record{{}, seed, n_shots};
  record.shots.reserve(n_shots);
  for (std::size_t i = 0; i < n_shots; ++i) {
    const double u = rng.uniform() * mass;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    record.shots.push_back(*states[static_cast<std::size_t>(it - cumulative.begin())]);
  }
  return record;
}

Pmf empirical_pmf(const ShotRecord& record) {
  if (record.shots.empty()) throw ParameterError("empty shot record");
  std::map<FockState, std::size_t> counts;
  for (const auto& s : record.shots) ++counts[s];
  Pmf out(record.shots.front().size());
  const auto n = static_cast<double>(record.shots.size());
  for (const auto& [state, count] : counts) out.insert(state, static_cast<double>(count) / n);
  return out;
}

}  // namespace bosdsl
