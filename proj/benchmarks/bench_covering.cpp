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

#include "rectprof/covering.hpp"
#include "rectprof/fixed_distance.hpp"

using namespace rectprof;

namespace {

GraphPtr shared_graph() {
  static const GraphPtr g =
      std::make_shared<BipartiteGraph>(build_fixed_graph(FixedDistanceSpec(10, 4)));
  return g;
}

void BM_RandomCoverSeed(benchmark::State& state) {
  const GraphPtr g = shared_graph();
  const auto base = sphere_rectangle(FixedDistanceSpec(10, 4), 3);
  const AutomorphismSampler sampler = hypercube_automorphism_sampler(10);
  const std::uint64_t m = default_cover_size(5.0, g->edge_count());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Cover c = random_cover(g, sampler, base.rect, m, seed++);
    benchmark::DoNotOptimize(c.is_complete());
  }
}
BENCHMARK(BM_RandomCoverSeed);

void BM_GreedyCover(benchmark::State& state) {
  const GraphPtr g = shared_graph();
  const auto cap = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_cover(g, cap, cap).size());
  }
}
BENCHMARK(BM_GreedyCover)->Arg(16)->Arg(64);

void BM_VerifyWitness(benchmark::State& state) {
  const GraphPtr g = shared_graph();
  const Cover cover = greedy_cover(g, 32, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_witness(cover).gamma);
  }
}
BENCHMARK(BM_VerifyWitness);

}  // namespace

BENCHMARK_MAIN();
