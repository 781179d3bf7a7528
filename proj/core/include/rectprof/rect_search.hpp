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

#ifndef RECTPROF_RECT_SEARCH_HPP
#define RECTPROF_RECT_SEARCH_HPP

#include <cstdint>
#include <stdexcept>

#include "rectprof/bipartite_graph.hpp"
#include "rectprof/rectangle.hpp"

namespace rectprof {

// Maximum edges inside a size-capped rectangle: exact search and a greedy
// lower-bound heuristic, plus the exclusion tests they feed.

enum class RectMode { exact, heuristic };

struct RectMaxResult {
  std::uint64_t count = 0;
  Rectangle witness;
  RectMode mode = RectMode::exact;
};

struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(double estimated, double budget)
      : std::runtime_error("max_rect_exact: estimated search space " +
                           std::to_string(estimated) + " subsets exceeds budget " +
                           std::to_string(budget)),
        estimated_subsets(estimated) {}
  double estimated_subsets;
};

// Exact number of edges (x, y) in E with x in R.left, y in R.right.
std::uint64_t rect_edge_count(const BipartiteGraph& g, const Rectangle& r);

struct ExactSearchOptions {
  // Refuse when C(|X|, a_cap) * C(|Y|, b_cap) exceeds this.
  double subset_budget = 1e8;
  unsigned threads = 1;
};

// Optimal rectangle with |A| <= a_cap, |B| <= b_cap. Enumerates left
// subsets only: for a fixed A the best B is the b_cap right vertices of
// highest degree into A (ties to the lowest index). Deterministic for a
// given graph regardless of thread count.
RectMaxResult max_rect_exact(const BipartiteGraph& g, std::uint32_t a_cap,
                             std::uint32_t b_cap, const ExactSearchOptions& opts = {});

// Alternating maximization from random starts. Restart 0 is the
// deterministic global-degree start. Result is a certified lower bound on
// the true maximum (mode == heuristic).
RectMaxResult max_rect_greedy(const BipartiteGraph& g, std::uint32_t a_cap,
                              std::uint32_t b_cap, std::uint32_t restarts,
                              std::uint64_t seed, unsigned threads = 1);

// True iff r_upper * 2^gamma < |E|, certifying that the triple is not in
// the profile. r_upper must bound R_E(floor(2^alpha), floor(2^beta)) from
// above (exact result or analytic bound).
bool profile_excluded(const BipartiteGraph& g, const ProfileTriple& t, double r_upper);

enum class BoundVerdict { excluded, included, unknown };

// The four counting bounds for graphs without isolated nodes:
//   excluded if alpha + gamma < log|X|, beta + gamma < log|Y|,
//               or alpha + beta + gamma < log|E|;
//   included if min(alpha, beta) + gamma >= log|E|
//               or alpha + beta + gamma >= log|X| + log|Y|.
BoundVerdict trivial_bounds(const BipartiteGraph& g, const ProfileTriple& t);

}  // namespace rectprof

#endif  // RECTPROF_RECT_SEARCH_HPP
