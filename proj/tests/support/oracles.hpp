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

// Test-only oracles: brute-force counterparts of library operations, kept
// deliberately independent of the implementation paths they check.

#ifndef RECTPROF_TESTS_ORACLES_HPP
#define RECTPROF_TESTS_ORACLES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rectprof/bipartite_graph.hpp"
#include "rectprof/joint_distribution.hpp"
#include "rectprof/math_util.hpp"

namespace rectprof::testing {

// Connected components of the support graph by plain BFS.
inline int support_components(std::size_t nx, std::size_t ny, const std::vector<double>& probs) {
  const std::size_t total = nx + ny;
  std::vector<char> seen(total, 0);
  int components = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      if (v < nx) {
        for (std::size_t y = 0; y < ny; ++y)
          if (probs[v * ny + y] > 0 && !seen[nx + y]) {
            seen[nx + y] = 1;
            queue.push_back(nx + y);
          }
      } else {
        const std::size_t y = v - nx;
        for (std::size_t x = 0; x < nx; ++x)
          if (probs[x * ny + y] > 0 && !seen[x]) {
            seen[x] = 1;
            queue.push_back(x);
          }
      }
    }
  }
  return components;
}

// Edges inside A x B by direct membership testing against the edge list.
inline std::uint64_t count_edges_in(const BipartiteGraph& g,
                                    const std::vector<std::uint32_t>& left,
                                    const std::vector<std::uint32_t>& right) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges()) {
    bool in_l = false, in_r = false;
    for (std::uint32_t x : left) in_l |= (x == e.x);
    for (std::uint32_t y : right) in_r |= (y == e.y);
    count += in_l && in_r;
  }
  return count;
}

// Full enumeration over all (A, B) subset pairs of the given sizes.
inline std::uint64_t brute_force_max_rect(const BipartiteGraph& g, std::uint32_t a,
                                          std::uint32_t b) {
  a = std::min(a, g.left_size());
  b = std::min(b, g.right_size());
  if (a == 0 || b == 0) return 0;
  std::uint64_t best = 0;
  std::vector<std::uint32_t> ca(a);
  for (std::uint32_t i = 0; i < a; ++i) ca[i] = i;
  do {
    std::vector<std::uint32_t> cb(b);
    for (std::uint32_t i = 0; i < b; ++i) cb[i] = i;
    do {
      best = std::max(best, count_edges_in(g, ca, cb));
    } while (next_combination(cb, g.right_size()));
  } while (next_combination(ca, g.left_size()));
  return best;
}

// Upper tail of Binomial(n, p) at k0: P[S >= k0]. Terms are accumulated
// from log-space coefficients so large n stays exact to ~1e-14 relative.
inline double exact_binomial_tail(int n, double p, int k0) {
  if (k0 <= 0) return 1.0;
  if (k0 > n) return 0.0;
  double tail = 0.0;
  for (int k = k0; k <= n; ++k) {
    double log_term = log2_binomial(n, k) * std::log(2.0);
    if (p > 0) log_term += k * std::log(p);
    if (p < 1) log_term += (n - k) * std::log(1 - p);
    if ((p == 0 && k > 0) || (p == 1 && k < n)) continue;
    tail += std::exp(log_term);
  }
  return tail;
}

// Decides whether t rectangles of size at most a_cap x b_cap can cover
// every edge. Exhaustive branch-and-cover over maximal candidate
// rectangles; requires |E| <= 64. Throws if the node budget is exhausted.
class CoverSearch {
 public:
  CoverSearch(const BipartiteGraph& g, std::uint32_t a_cap, std::uint32_t b_cap,
              std::uint64_t node_budget = 50'000'000)
      : g_(g),
        a_(std::min(a_cap, g.left_size())),
        b_(std::min(b_cap, g.right_size())),
        budget_(node_budget) {
    if (g.edge_count() > 64) throw std::invalid_argument("CoverSearch: too many edges");
    full_ = g.edge_count() == 64 ? ~std::uint64_t(0)
                                 : (std::uint64_t(1) << g.edge_count()) - 1;
    candidates_.resize(g.edge_count());
  }

  bool exists(std::uint32_t t) {
    if (g_.edge_count() == 0) return true;
    if (a_ == 0 || b_ == 0) return false;
    return search(0, t);
  }

 private:
  std::uint64_t rect_mask(const std::vector<std::uint32_t>& left,
                          const std::vector<std::uint32_t>& right) const {
    std::uint64_t mask = 0;
    std::size_t i = 0;
    for (const Edge& e : g_.edges()) {
      bool in_l = false, in_r = false;
      for (std::uint32_t x : left) in_l |= (x == e.x);
      for (std::uint32_t y : right) in_r |= (y == e.y);
      if (in_l && in_r) mask |= std::uint64_t(1) << i;
      ++i;
    }
    return mask;
  }

  // All maximal covered-edge masks of full-size rectangles through edge e.
  const std::vector<std::uint64_t>& candidates_for(std::size_t edge_idx) {
    auto& cached = candidates_[edge_idx];
    if (!cached.empty()) return cached;
    const Edge e = g_.edges()[edge_idx];

    std::vector<std::uint32_t> others_x, others_y;
    for (std::uint32_t x = 0; x < g_.left_size(); ++x)
      if (x != e.x) others_x.push_back(x);
    for (std::uint32_t y = 0; y < g_.right_size(); ++y)
      if (y != e.y) others_y.push_back(y);

    std::vector<std::uint64_t> masks;
    auto for_each_subset = [](const std::vector<std::uint32_t>& pool, std::uint32_t k,
                              auto&& fn) {
      if (k > pool.size()) k = static_cast<std::uint32_t>(pool.size());
      if (k == 0) {
        fn(std::vector<std::uint32_t>{});
        return;
      }
      std::vector<std::uint32_t> comb(k);
      for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
      do {
        std::vector<std::uint32_t> chosen;
        for (std::uint32_t i : comb) chosen.push_back(pool[i]);
        fn(chosen);
      } while (next_combination(comb, static_cast<std::uint32_t>(pool.size())));
    };

    for_each_subset(others_x, a_ - 1, [&](const std::vector<std::uint32_t>& xs) {
      std::vector<std::uint32_t> left = xs;
      left.push_back(e.x);
      for_each_subset(others_y, b_ - 1, [&](const std::vector<std::uint32_t>& ys) {
        std::vector<std::uint32_t> right = ys;
        right.push_back(e.y);
        masks.push_back(rect_mask(left, right));
      });
    });

    // keep only maximal masks
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t m : masks) {
      bool dominated = false;
      for (std::uint64_t o : masks)
        if (o != m && (m & o) == m && (m | o) != m) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(m);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    cached = std::move(maximal);
    return cached;
  }

  bool search(std::uint64_t covered, std::uint32_t t_left) {
    if (covered == full_) return true;
    if (t_left == 0) return false;
    if (budget_-- == 0) throw std::runtime_error("CoverSearch: node budget exhausted");
    const std::size_t pivot = std::countr_one(covered);  // first uncovered edge
    for (std::uint64_t mask : candidates_for(pivot)) {
      if (search(covered | mask, t_left - 1)) return true;
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::uint32_t a_, b_;
  std::uint64_t budget_;
  std::uint64_t full_ = 0;
  std::vector<std::vector<std::uint64_t>> candidates_;
};

// Random full-support distribution with entries bounded away from zero.
inline JointDistribution random_distribution(Rng& rng, std::size_t nx, std::size_t ny,
                                             double floor = 0.05) {
  std::vector<double> probs(nx * ny);
  double total = 0;
  for (double& p : probs) {
    p = floor + (1 - floor) * rng.uniform();
    total += p;
  }
  for (double& p : probs) p /= total;
  return JointDistribution(nx, ny, std::move(probs));
}

// Disconnected-support distribution: two random blocks on a split alphabet.
inline JointDistribution degenerate_distribution(Rng& rng, std::size_t nx, std::size_t ny) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("degenerate_distribution: need 2x2+");
  const std::size_t sx = 1 + rng.below(nx - 1);
  const std::size_t sy = 1 + rng.below(ny - 1);
  std::vector<double> probs(nx * ny, 0.0);
  double total = 0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const bool first = x < sx && y < sy;
      const bool second = x >= sx && y >= sy;
      if (first || second) {
        probs[x * ny + y] = 0.05 + rng.uniform();
        total += probs[x * ny + y];
      }
    }
  for (double& p : probs) p /= total;
  return JointDistribution(nx, ny, std::move(probs));
}

// Random bipartite graph with the given edge density.
inline BipartiteGraph random_graph(Rng& rng, std::uint32_t nx, std::uint32_t ny,
                                   double density) {
  std::vector<Edge> edges;
  for (std::uint32_t x = 0; x < nx; ++x)
    for (std::uint32_t y = 0; y < ny; ++y)
      if (rng.uniform() < density) edges.push_back({x, y});
  return BipartiteGraph(nx, ny, std::move(edges));
}

}  // namespace rectprof::testing

#endif  // RECTPROF_TESTS_ORACLES_HPP
