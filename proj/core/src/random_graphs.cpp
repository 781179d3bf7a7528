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

#include "rectprof/random_graphs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "rectprof/math_util.hpp"
#include "rectprof/rect_search.hpp"

namespace rectprof {

BipartiteGraph sample_matrix(const RandomMatrixSpec& spec, std::uint64_t max_cells) {
  const std::uint64_t cells = std::uint64_t(spec.side) * spec.side;
  if (cells > max_cells)
    throw std::invalid_argument("sample_matrix: N^2 exceeds the configured budget");
  if (spec.ones > cells)
    throw std::invalid_argument("sample_matrix: more ones than cells");

  Rng rng(spec.seed);
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  moved.reserve(spec.ones * 2);
  auto value_at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(spec.ones);
  for (std::uint64_t i = 0; i < spec.ones; ++i) {
    const std::uint64_t j = i + rng.below(cells - i);
    const std::uint64_t cell = value_at(j);
    moved[j] = value_at(i);
    edges.push_back({static_cast<std::uint32_t>(cell / spec.side),
                     static_cast<std::uint32_t>(cell % spec.side)});
  }
  return BipartiteGraph(spec.side, spec.side, std::move(edges));
}

double chernoff_bound(double mu, double delta) {
  if (mu < 0) throw std::invalid_argument("chernoff_bound: mu must be nonnegative");
  if (delta <= 0) throw std::invalid_argument("chernoff_bound: delta must be positive");
  const double log_value = mu * (delta - (1.0 + delta) * std::log1p(delta));
  return std::exp(log_value);
}

namespace {

std::uint64_t count_in(const BipartiteGraph& g, const std::vector<std::uint32_t>& rows,
                       std::vector<char>& col_mask, const std::vector<std::uint32_t>& cols) {
  for (std::uint32_t c : cols) col_mask[c] = 1;
  std::uint64_t count = 0;
  for (std::uint32_t r : rows)
    for (std::uint32_t y : g.left_neighbors(r)) count += col_mask[y];
  for (std::uint32_t c : cols) col_mask[c] = 0;
  return count;
}

}  // namespace

DensityScan scan_rectangle_density(const BipartiteGraph& g, std::uint32_t s, ScanMode mode,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (s == 0) return {0, 0, 0, true};
  if (mode == ScanMode::exhaustive) {
    ExactSearchOptions opts;
    opts.subset_budget = 1e8;
    const RectMaxResult r = max_rect_exact(g, s, s, opts);
    return {r.count, r.count, r.count, true};
  }

  DensityScan scan;
  Rng rng(seed);
  std::vector<char> col_mask(g.right_size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto rows = sample_distinct(rng, g.left_size(), std::min(s, g.left_size()));
    const auto cols = sample_distinct(rng, g.right_size(), std::min(s, g.right_size()));
    scan.max_random = std::max(scan.max_random, count_in(g, rows, col_mask, cols));
  }
  const RectMaxResult greedy = max_rect_greedy(g, s, s, 8, mix_seed(seed, 0x9d));
  scan.max_greedy = greedy.count;
  scan.max_ones = std::max(scan.max_random, scan.max_greedy);
  scan.exact = false;
  return scan;
}

DegreeReport degree_check(const BipartiteGraph& g) {
  DegreeReport rep;
  for (std::uint32_t x = 0; x < g.left_size(); ++x)
    rep.max_row = std::max(rep.max_row, g.left_degree(x));
  for (std::uint32_t y = 0; y < g.right_size(); ++y)
    rep.max_col = std::max(rep.max_col, g.right_degree(y));
  const double row_thresh = g.left_size() ? 2.0 * g.edge_count() / g.left_size() : 0.0;
  const double col_thresh = g.right_size() ? 2.0 * g.edge_count() / g.right_size() : 0.0;
  rep.threshold_ok = rep.max_row <= row_thresh && rep.max_col <= col_thresh;
  return rep;
}

ProfileSearchReport minimal_profile_search(std::uint32_t side, std::uint64_t ones,
                                           std::uint64_t candidates, std::uint64_t seed,
                                           const std::vector<DensityCriterion>& grid,
                                           std::uint64_t scan_trials) {
  const double n_bits = std::log2(static_cast<double>(side));
  ProfileSearchReport report;
  for (std::uint64_t attempt = 0; attempt < candidates; ++attempt) {
    ++report.attempts;
    RandomMatrixSpec spec{side, ones, mix_seed(seed, attempt)};
    BipartiteGraph g = sample_matrix(spec);

    bool ok = true;
    report.density_max.clear();
    for (const DensityCriterion& c : grid) {
      const auto s =
          static_cast<std::uint32_t>(std::llround(std::pow(2.0, c.tau * n_bits)));
      const DensityScan scan =
          scan_rectangle_density(g, s, ScanMode::sampled, scan_trials, mix_seed(spec.seed, 1));
      report.density_max.push_back(scan.max_ones);
      const double threshold = std::pow(2.0, (1.5 - c.kappa - c.epsilon) * n_bits);
      if (static_cast<double>(scan.max_ones) >= threshold) ok = false;
    }
    report.degrees = degree_check(g);
    if (!report.degrees.threshold_ok) ok = false;

    if (ok) {
      report.witness = std::move(g);
      report.found = true;
      return report;
    }
  }
  return report;
}

}  // namespace rectprof
