// Copyright 2026 The rectprof Authors.
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

#include "rectprof/hypercontractivity.hpp"
#include "rectprof/joint_distribution.hpp"
#include "rectprof/math_util.hpp"

using namespace rectprof;

namespace {

JointDistribution random_dist(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> probs(n * n);
  double total = 0;
  for (double& p : probs) {
    p = 0.05 + rng.uniform();
    total += p;
  }
  for (double& p : probs) p /= total;
  return JointDistribution(n, n, std::move(probs));
}

void BM_DeltaEstimateBsc(benchmark::State& state) {
  const auto d = bsc_distribution(0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_estimate(d, 1e-3).lower);
  }
}
BENCHMARK(BM_DeltaEstimateBsc);

void BM_DeltaEstimateRandom(benchmark::State& state) {
  const auto d = random_dist(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_estimate(d, 1e-3).lower);
  }
}
BENCHMARK(BM_DeltaEstimateRandom)->Arg(3)->Arg(4)->Arg(6);

void BM_HoldsAtDelta(benchmark::State& state) {
  const auto d = random_dist(4, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(holds_at_delta(d, 0.3).holds);
  }
}
BENCHMARK(BM_HoldsAtDelta);

void BM_RectBound(benchmark::State& state) {
  double mu = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rect_bound(mu, 2 * mu, 0.5));
  }
}
BENCHMARK(BM_RectBound);

}  // namespace

BENCHMARK_MAIN();
