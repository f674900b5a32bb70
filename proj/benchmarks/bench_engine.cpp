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
#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "bosdsl/engine.hpp"

namespace {

using namespace bosdsl;

ComplexMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

void BM_Permanent(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 20, 4);

// Clements-style mesh of mixers on n modes, one photon in each of the first
// n/2 modes.
Circuit mesh(int n) {
  std::vector<GateSpec> gates;
  for (int layer = 0; layer < n; ++layer) {
    for (int a = layer % 2; a + 1 < n; a += 2) {
      gates.push_back({GateType::MG, {a, a + 1}, {0.3 + 0.1 * a, 0.7 * layer}});
    }
  }
  return Circuit(n, std::move(gates));
}

void BM_ProbFnLossless(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit c = mesh(n);
  std::vector<int> occ(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n / 2; ++i) occ[static_cast<std::size_t>(i)] = 1;
  const FockState input(occ);
  for (auto _ : state) benchmark::DoNotOptimize(prob_fn(c, input));
}
BENCHMARK(BM_ProbFnLossless)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ProbFnLossy(benchmark::State& state) {
  const Circuit c(3, {{GateType::MGL1, {0, 1}, {0.4, 0.3, 0.9, 0.8}},
                      {GateType::MGL2, {1, 2}, {1.1, 0.2, 0.75}},
                      {GateType::MGL1, {0, 2}, {0.6, 0.1, 0.7, 0.95}}});
  const FockState input{1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(prob_fn(c, input));
}
BENCHMARK(BM_ProbFnLossy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
