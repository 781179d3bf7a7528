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

#include "rectprof/rect_search.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "rectprof/math_util.hpp"

namespace rectprof {

std::uint64_t rect_edge_count(const BipartiteGraph& g, const Rectangle& r) {
  r.validate_within(g);
  std::vector<char> in_right(g.right_size(), 0);
  for (std::uint32_t y : r.right) in_right[y] = 1;
  std::uint64_t count = 0;
  for (std::uint32_t x : r.left)
    for (std::uint32_t y : g.left_neighbors(x)) count += in_right[y];
  return count;
}

namespace {

// Top-k right vertices by degree into A, ties to the lowest index.
// degs may contain zeros; the selection pads with zero-degree vertices so
// the witness always has exactly k entries (when k <= |Y|).
std::pair<std::uint64_t, std::vector<std::uint32_t>> best_right_set(
    const std::vector<std::uint32_t>& degs, std::uint32_t k) {
  std::vector<std::uint32_t> order(degs.size());
  std::iota(order.begin(), order.end(), 0u);
  const std::size_t take = std::min<std::size_t>(k, order.size());
  std::partial_sort(order.begin(), order.begin() + take, order.end(),
                    [&](std::uint32_t a, std::uint32_t b) {
                      if (degs[a] != degs[b]) return degs[a] > degs[b];
                      return a < b;
                    });
  order.resize(take);
  std::uint64_t count = 0;
  for (std::uint32_t y : order) count += degs[y];
  std::sort(order.begin(), order.end());
  return {count, std::move(order)};
}

struct Candidate {
  std::uint64_t count = 0;
  Rectangle rect;
  bool valid = false;

  // Ordering used to merge across threads: higher count wins, ties go to
  // the lexicographically smallest witness so the result matches a
  // sequential first-found scan.
  bool better_than(const Candidate& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (count != other.count) return count > other.count;
    if (rect.left != other.rect.left) return rect.left < other.rect.left;
    return rect.right < other.rect.right;
  }
};

}  // namespace

RectMaxResult max_rect_exact(const BipartiteGraph& g, std::uint32_t a_cap,
                             std::uint32_t b_cap, const ExactSearchOptions& opts) {
  const std::uint32_t a = std::min(a_cap, g.left_size());
  const std::uint32_t b = std::min(b_cap, g.right_size());
  if (a == 0 || b == 0) return {0, Rectangle{}, RectMode::exact};

  const double log2_space = log2_binomial(g.left_size(), a) + log2_binomial(g.right_size(), b);
  if (log2_space > std::log2(opts.subset_budget))
    throw BudgetExceededError(std::pow(2.0, log2_space), opts.subset_budget);

  const std::uint64_t total = binomial_u64(g.left_size(), a);
  std::vector<Candidate> per_thread(std::max(1u, opts.threads));
  std::mutex merge_mutex;

  parallel_chunks(total, opts.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned tid) {
    if (begin >= end) return;
    std::vector<std::uint32_t> comb = unrank_combination(g.left_size(), a, begin);
    std::vector<std::uint32_t> degs(g.right_size());
    Candidate local;
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      std::fill(degs.begin(), degs.end(), 0u);
      for (std::uint32_t x : comb)
        for (std::uint32_t y : g.left_neighbors(x)) ++degs[y];
      auto [count, right] = best_right_set(degs, b);
      if (!local.valid || count > local.count) {
        local.count = count;
        local.rect = Rectangle{comb, std::move(right)};
        local.valid = true;
      }
      if (rank + 1 < end) next_combination(comb, g.left_size());
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    per_thread[tid] = std::move(local);
  });

  Candidate best;
  for (Candidate& c : per_thread)
    if (c.better_than(best)) best = std::move(c);
  if (!best.valid) return {0, Rectangle{}, RectMode::exact};
  return {best.count, std::move(best.rect), RectMode::exact};
}

namespace {

// One alternating-maximization pass from a fixed left set.
Candidate alternate_from(const BipartiteGraph& g, std::vector<std::uint32_t> left,
                         std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> rdegs(g.right_size());
  std::vector<std::uint32_t> ldegs(g.left_size());
  Candidate cur;
  std::sort(left.begin(), left.end());
  for (int round = 0; round < 64; ++round) {
    std::fill(rdegs.begin(), rdegs.end(), 0u);
    for (std::uint32_t x : left)
      for (std::uint32_t y : g.left_neighbors(x)) ++rdegs[y];
    auto [count, right] = best_right_set(rdegs, b);

    std::fill(ldegs.begin(), ldegs.end(), 0u);
    for (std::uint32_t y : right)
      for (std::uint32_t x : g.right_neighbors(y)) ++ldegs[x];
    auto [count2, new_left] = best_right_set(ldegs, a);

    if (cur.valid && count2 <= cur.count) break;
    cur.count = count2;
    cur.rect = Rectangle{new_left, right};
    cur.valid = true;
    left = std::move(new_left);
  }
  // Recount against the final pair; the loop reports sum-of-degrees which
  // equals the edge count by construction, but keep the witness honest.
  cur.count = rect_edge_count(g, cur.rect);
  return cur;
}

}  // namespace

RectMaxResult max_rect_greedy(const BipartiteGraph& g, std::uint32_t a_cap,
                              std::uint32_t b_cap, std::uint32_t restarts,
                              std::uint64_t seed, unsigned threads) {
  const std::uint32_t a = std::min(a_cap, g.left_size());
  const std::uint32_t b = std::min(b_cap, g.right_size());
  if (a == 0 || b == 0 || g.edge_count() == 0)
    return {0, Rectangle{}, RectMode::heuristic};
  if (restarts == 0) restarts = 1;

  std::vector<Candidate> results(restarts);
  parallel_chunks(restarts, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t r = begin; r < end; ++r) {
      std::vector<std::uint32_t> start;
      if (r == 0) {
        // deterministic start: highest-degree left vertices
        std::vector<std::uint32_t> degs(g.left_size());
        for (std::uint32_t x = 0; x < g.left_size(); ++x) degs[x] = g.left_degree(x);
        start = best_right_set(degs, a).second;
      } else {
        Rng rng(mix_seed(seed, r));
        start = sample_distinct(rng, g.left_size(), a);
      }
      results[r] = alternate_from(g, std::move(start), a, b);
    }
  });

  // lowest restart index wins ties: matches a sequential scan
  Candidate best;
  for (Candidate& c : results) {
    if (c.valid && (!best.valid || c.count > best.count)) best = std::move(c);
  }
  return {best.count, std::move(best.rect), RectMode::heuristic};
}

bool profile_excluded(const BipartiteGraph& g, const ProfileTriple& t, double r_upper) {
  validate(t);
  if (r_upper < 0) throw std::invalid_argument("profile_excluded: negative r_upper");
  const long double lhs = static_cast<long double>(r_upper) * std::exp2l(t.gamma);
  return lhs < static_cast<long double>(g.edge_count());
}

BoundVerdict trivial_bounds(const BipartiteGraph& g, const ProfileTriple& t) {
  validate(t);
  if (g.has_isolated_nodes())
    throw std::invalid_argument("trivial_bounds: graph has isolated nodes");
  const double log_x = std::log2(static_cast<double>(g.left_size()));
  const double log_y = std::log2(static_cast<double>(g.right_size()));
  const double log_e = std::log2(static_cast<double>(g.edge_count()));

  if (t.alpha + t.gamma < log_x || t.beta + t.gamma < log_y) return BoundVerdict::excluded;
  if (t.alpha + t.beta + t.gamma < log_e) return BoundVerdict::excluded;
  if (std::min(t.alpha, t.beta) + t.gamma >= log_e) return BoundVerdict::included;
  if (t.alpha + t.beta + t.gamma >= log_x + log_y) return BoundVerdict::included;
  return BoundVerdict::unknown;
}

}  // namespace rectprof
