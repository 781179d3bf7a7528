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

#include "rectprof/rectangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rectprof {

Rectangle Rectangle::of(std::vector<std::uint32_t> left, std::vector<std::uint32_t> right) {
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  return Rectangle{std::move(left), std::move(right)};
}

bool Rectangle::contains_left(std::uint32_t x) const {
  return std::binary_search(left.begin(), left.end(), x);
}

bool Rectangle::contains_right(std::uint32_t y) const {
  return std::binary_search(right.begin(), right.end(), y);
}

void Rectangle::validate_within(const BipartiteGraph& g) const {
  for (std::uint32_t x : left)
    if (x >= g.left_size()) throw std::invalid_argument("Rectangle: left vertex out of range");
  for (std::uint32_t y : right)
    if (y >= g.right_size()) throw std::invalid_argument("Rectangle: right vertex out of range");
}

void validate(const ProfileTriple& t) {
  for (double v : {t.alpha, t.beta, t.gamma}) {
    if (!std::isfinite(v) || v < 0)
      throw std::invalid_argument("ProfileTriple: entries must be finite and nonnegative");
  }
}

Cover::Cover(GraphPtr graph, std::vector<Rectangle> rectangles)
    : graph_(std::move(graph)), rectangles_(std::move(rectangles)) {
  if (!graph_) throw std::invalid_argument("Cover: null graph");
  for (const Rectangle& r : rectangles_) r.validate_within(*graph_);
}

std::size_t Cover::max_left_size() const {
  std::size_t m = 0;
  for (const Rectangle& r : rectangles_) m = std::max(m, r.left.size());
  return m;
}

std::size_t Cover::max_right_size() const {
  std::size_t m = 0;
  for (const Rectangle& r : rectangles_) m = std::max(m, r.right.size());
  return m;
}

void for_each_edge_in(const BipartiteGraph& g, const Rectangle& r,
                      const std::function<void(std::uint64_t)>& fn) {
  // walk x's sorted neighbor run against the sorted right set; the run
  // offset gives the edge index directly
  for (std::uint32_t x : r.left) {
    const auto nbrs = g.left_neighbors(x);
    const std::uint64_t base = g.left_run_begin(x);
    std::size_t i = 0, j = 0;
    while (i < nbrs.size() && j < r.right.size()) {
      if (nbrs[i] < r.right[j]) {
        ++i;
      } else if (nbrs[i] > r.right[j]) {
        ++j;
      } else {
        fn(base + i);
        ++i;
        ++j;
      }
    }
  }
}

bool Cover::is_complete() const {
  const BipartiteGraph& g = *graph_;
  std::vector<char> covered(g.edge_count(), 0);
  std::uint64_t remaining = g.edge_count();
  for (const Rectangle& r : rectangles_) {
    for_each_edge_in(g, r, [&](std::uint64_t idx) {
      if (!covered[idx]) {
        covered[idx] = 1;
        --remaining;
      }
    });
    if (remaining == 0) return true;
  }
  return remaining == 0;
}

}  // namespace rectprof
