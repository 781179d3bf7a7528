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

#ifndef RECTPROF_BIPARTITE_GRAPH_HPP
#define RECTPROF_BIPARTITE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rectprof {

struct Edge {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  auto operator<=>(const Edge&) const = default;
};

// Finite bipartite graph E subseteq X x Y with dense integer vertex ids.
// Immutable after construction; safe to share across threads.
class BipartiteGraph {
 public:
  // Edges are sorted internally. Throws std::invalid_argument on duplicate
  // or out-of-range edges.
  BipartiteGraph(std::uint32_t left_size, std::uint32_t right_size,
                 std::vector<Edge> edges);

  static BipartiteGraph complete(std::uint32_t left_size, std::uint32_t right_size);

  std::uint32_t left_size() const { return left_size_; }
  std::uint32_t right_size() const { return right_size_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::uint32_t x, std::uint32_t y) const;
  // Position of (x, y) in the sorted edge list, or -1.
  std::int64_t edge_index(std::uint32_t x, std::uint32_t y) const;

  std::span<const std::uint32_t> left_neighbors(std::uint32_t x) const;
  std::span<const std::uint32_t> right_neighbors(std::uint32_t y) const;
  std::uint32_t left_degree(std::uint32_t x) const;
  std::uint32_t right_degree(std::uint32_t y) const;

  // Edges are sorted by (x, y), so edge i of x's run sits at
  // left_run_begin(x) + i and pairs x with left_neighbors(x)[i].
  std::uint64_t left_run_begin(std::uint32_t x) const { return left_offsets_[x]; }

  bool has_isolated_nodes() const;

 private:
  std::uint32_t left_size_;
  std::uint32_t right_size_;
  std::vector<Edge> edges_;  // sorted by (x, y)
  // CSR adjacency, both orientations
  std::vector<std::uint64_t> left_offsets_;
  std::vector<std::uint32_t> left_adj_;
  std::vector<std::uint64_t> right_offsets_;
  std::vector<std::uint32_t> right_adj_;
};

using GraphPtr = std::shared_ptr<const BipartiteGraph>;

struct GraphLoadReport {
  std::size_t duplicates_removed = 0;
};

// Text format: first line "|X| |Y|", then one "x y" pair per line.
// '#' starts a comment; blank lines are skipped. Duplicate edges are
// collapsed and counted in the report. Parse errors carry line numbers.
BipartiteGraph load_graph(std::istream& in, GraphLoadReport* report = nullptr);
BipartiteGraph load_graph_file(const std::string& path, GraphLoadReport* report = nullptr);
void save_graph(const BipartiteGraph& g, std::ostream& out);
void save_graph_file(const BipartiteGraph& g, const std::string& path);

// Resolves a graph spec string:
//   "fixed:n=<n>,d=<d>"   fixed-Hamming-distance graph on n-bit strings
//   "complete:<a>x<b>"    complete bipartite graph
//   anything else         treated as a path to a graph file
BipartiteGraph graph_from_spec(const std::string& spec);

}  // namespace rectprof

#endif  // RECTPROF_BIPARTITE_GRAPH_HPP
