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

#ifndef RECTPROF_RECTANGLE_HPP
#define RECTPROF_RECTANGLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "rectprof/bipartite_graph.hpp"

namespace rectprof {

// Combinatorial rectangle A x B; vertex lists are kept sorted and unique.
struct Rectangle {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;

  static Rectangle of(std::vector<std::uint32_t> left, std::vector<std::uint32_t> right);

  bool contains_left(std::uint32_t x) const;
  bool contains_right(std::uint32_t y) const;
  bool empty() const { return left.empty() || right.empty(); }

  // Throws if any vertex is out of range for g.
  void validate_within(const BipartiteGraph& g) const;

  bool operator==(const Rectangle&) const = default;
};

// Message-length triple (alpha, beta, gamma), in bits.
struct ProfileTriple {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

// Throws unless all entries are finite and nonnegative.
void validate(const ProfileTriple& t);

// Invokes fn(edge_index) for every edge of g inside r. Edge indices refer
// to g.edges() order.
void for_each_edge_in(const BipartiteGraph& g, const Rectangle& r,
                      const std::function<void(std::uint64_t)>& fn);

// Ordered list of rectangles over a shared source graph.
class Cover {
 public:
  Cover(GraphPtr graph, std::vector<Rectangle> rectangles);

  const BipartiteGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<Rectangle>& rectangles() const { return rectangles_; }
  std::size_t size() const { return rectangles_.size(); }

  std::size_t max_left_size() const;
  std::size_t max_right_size() const;

  // True iff every edge of the source graph lies in some rectangle.
  bool is_complete() const;

 private:
  GraphPtr graph_;
  std::vector<Rectangle> rectangles_;
};

}  // namespace rectprof

#endif  // RECTPROF_RECTANGLE_HPP
