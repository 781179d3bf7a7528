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

#include "rectprof/fixed_distance.hpp"
#include "rectprof/rect_search.hpp"

using namespace rectprof;

namespace {

const BipartiteGraph& graph_6_2() {
  static const BipartiteGraph g = build_fixed_graph(FixedDistanceSpec(6, 2));
  return g;
}

const BipartiteGraph& graph_10_4() {
  static const BipartiteGraph g = build_fixed_graph(FixedDistanceSpec(10, 4));
  return g;
}

void BM_ExactSearch(benchmark::State& state) {
  const auto cap = static_cast<std::uint32_t>(state.range(0));
  ExactSearchOptions opts;
  opts.subset_budget = 1e14;  // the scan enumerates left subsets only
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_rect_exact(graph_6_2(), cap, cap, opts).count);
  }
}
BENCHMARK(BM_ExactSearch)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({4, 2});

void BM_GreedySearch(benchmark::State& state) {
  const auto cap = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_rect_greedy(graph_10_4(), cap, cap, 8, 42).count);
  }
}
BENCHMARK(BM_GreedySearch)->Arg(16)->Arg(32)->Arg(64);

void BM_RectEdgeCount(benchmark::State& state) {
  const auto sphere = sphere_rectangle(FixedDistanceSpec(10, 4), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rect_edge_count(graph_10_4(), sphere.rect));
  }
}
BENCHMARK(BM_RectEdgeCount);

}  // namespace

BENCHMARK_MAIN();
