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

#ifndef RECTPROF_RANDOM_GRAPHS_HPP
#define RECTPROF_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rectprof/bipartite_graph.hpp"

namespace rectprof {

// Uniform random 0/1 matrices with a fixed number of ones, the Chernoff
// bound for negatively correlated indicators, and desk-scale rectangle
// density scans.

struct RandomMatrixSpec {
  std::uint32_t side = 0;   // N; the matrix is N x N
  std::uint64_t ones = 0;   // number of cells set
  std::uint64_t seed = 0;
};

// Exactly `ones` distinct cells, uniform over all such matrices (partial
// Fisher-Yates over cell indices, sparse swap table).
BipartiteGraph sample_matrix(const RandomMatrixSpec& spec,
                             std::uint64_t max_cells = std::uint64_t(1) << 32);

// (e^delta / (1+delta)^(1+delta))^mu, evaluated in log space. Bounds the
// upper tail P[S >= (1+delta) mu] for sums of negatively correlated binary
// variables with mean mu.
double chernoff_bound(double mu, double delta);

enum class ScanMode { exhaustive, sampled };

struct DensityScan {
  std::uint64_t max_ones = 0;     // max over everything examined
  std::uint64_t max_random = 0;   // max over the random draws only
  std::uint64_t max_greedy = 0;   // max over the degree-greedy candidates
  bool exact = false;             // true in exhaustive mode
};

// Maximum ones over s x s rectangles. Exhaustive mode is exact and
// refuses when C(|X|, s) * C(|Y|, s) > 1e8; sampled mode draws `trials`
// uniform rectangles plus degree-greedy candidates and reports a lower
// bound on the true maximum.
DensityScan scan_rectangle_density(const BipartiteGraph& g, std::uint32_t s, ScanMode mode,
                                   std::uint64_t trials, std::uint64_t seed);

struct DegreeReport {
  std::uint32_t max_row = 0;
  std::uint32_t max_col = 0;
  bool threshold_ok = false;  // both maxima <= 2 * ones / N
};

DegreeReport degree_check(const BipartiteGraph& g);

// Admissible scan configuration: rectangle side exponent tau, cover
// exponent kappa and slack epsilon; the density threshold is
// 2^{(1.5 - kappa - epsilon) n} with n = log2 N.
struct DensityCriterion {
  double tau = 0.5;
  double kappa = 0.75;
  double epsilon = 0.125;
};

struct ProfileSearchReport {
  std::optional<BipartiteGraph> witness;
  std::uint64_t attempts = 0;
  bool found = false;
  std::vector<std::uint64_t> density_max;  // per criterion, last attempt
  DegreeReport degrees;                    // last attempt
};

// Iterates seeds until a sampled matrix passes every density criterion and
// the degree check; reports the witness and the attempt count. Exhausting
// `candidates` attempts is reported, not fatal.
ProfileSearchReport minimal_profile_search(std::uint32_t side, std::uint64_t ones,
                                           std::uint64_t candidates, std::uint64_t seed,
                                           const std::vector<DensityCriterion>& grid,
                                           std::uint64_t scan_trials = 2000);

}  // namespace rectprof

#endif  // RECTPROF_RANDOM_GRAPHS_HPP
