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
#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "bosdsl/engine.hpp"
#include "bosdsl/sampler.hpp"

namespace bosdsl {
namespace {

Pmf hom_pmf() {
  return prob_fn(Circuit(2, {{GateType::MG, {0, 1}, {std::numbers::pi / 4, 0.0}}}), {1, 1});
}

TEST(Sample, DegenerateDistribution) {
  Pmf p(2);
  p.insert({1, 0}, 1.0);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const auto r = sample(p, 50, seed);
    EXPECT_EQ(r.n_shots, 50u);
    EXPECT_EQ(r.seed, seed);
    for (const auto& s : r.shots) EXPECT_EQ(s, FockState({1, 0}));
  }
}

TEST(Sample, Deterministic) {
  const Pmf p = hom_pmf();
  EXPECT_EQ(sample(p, 1000, 7), sample(p, 1000, 7));
  EXPECT_NE(sample(p, 1000, 7).shots, sample(p, 1000, 8).shots);
}

TEST(Sample, HongOuMandelFrequencies) {
  // Binomial sd at n = 1e5 is 0.0016; 0.01 is six sigma.
  const auto r = sample(hom_pmf(), 100000, 42);
  const auto count = [&](const FockState& s) {
    return static_cast<double>(std::count(r.shots.begin(), r.shots.end(), s)) / 1e5;
  };
  EXPECT_NEAR(count({2, 0}), 0.5, 0.01);
  EXPECT_NEAR(count({0, 2}), 0.5, 0.01);
  EXPECT_EQ(count({1, 1}), 0.0);
}

TEST(Sample, RenormalizesThresholdedPmf) {
  Pmf p(1);
  p.insert({0}, 0.2);
  p.insert({1}, 0.2);
  const Pmf e = empirical_pmf(sample(p, 20000, 5));
  EXPECT_NEAR(e.at({0}), 0.5, 0.02);
}

TEST(Sample, SupportSoundness) {
  Pmf p(3);
  p.insert({1, 0, 0}, 0.1);
  p.insert({0, 1, 0}, 0.0);
  p.insert({0, 0, 1}, 0.6);
  for (const auto& s : sample(p, 5000, 3).shots) {
    EXPECT_TRUE(p.contains(s));
    EXPECT_NE(s, FockState({0, 1, 0}));
  }
}

TEST(Sample, Errors) {
  EXPECT_THROW(sample(Pmf(2), 10, 0), ParameterError);
  Pmf zero(1);
  zero.insert({0}, 0.0);
  EXPECT_THROW(sample(zero, 10, 0), ParameterError);
  EXPECT_THROW(sample(hom_pmf(), 0, 0), ParameterError);
}

TEST(EmpiricalPmf, Counting) {
  ShotRecord one{{FockState{1, 0}}, 0, 1};
  EXPECT_EQ(empirical_pmf(one).at({1, 0}), 1.0);

  ShotRecord two{{FockState{1, 0}, FockState{0, 1}}, 0, 2};
  const Pmf e = empirical_pmf(two);
  EXPECT_EQ(e.at({1, 0}), 0.5);
  EXPECT_EQ(e.at({0, 1}), 0.5);
  EXPECT_THROW(empirical_pmf(ShotRecord{}), ParameterError);
}

Pmf three_state_pmf() {
  Pmf p(2);
  p.insert({2, 0}, 0.2);
  p.insert({1, 1}, 0.3);
  p.insert({0, 2}, 0.5);
  return p;
}

TEST(EmpiricalPmf, ConvergesAtOneHundredThousandShots) {
  const Pmf p = three_state_pmf();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LT(distance_tv(empirical_pmf(sample(p, 100000, seed)), p), 0.02) << seed;
  }
}

TEST(EmpiricalPmf, MedianErrorShrinksWithShots) {
  const Pmf p = three_state_pmf();
  double previous = 1.0;
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    std::vector<double> errs;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      errs.push_back(distance_tv(empirical_pmf(sample(p, n, 1000 + seed)), p));
    }
    std::nth_element(errs.begin(), errs.begin() + 10, errs.end());
    EXPECT_LE(errs[10], previous) << n;
    previous = errs[10];
  }
}

}  // namespace
}  // namespace bosdsl
