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

#include "rectprof/bipartite_graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rectprof {

BipartiteGraph::BipartiteGraph(std::uint32_t left_size, std::uint32_t right_size,
                               std::vector<Edge> edges)
    : left_size_(left_size), right_size_(right_size), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.x >= left_size_ || e.y >= right_size_) {
      throw std::invalid_argument("BipartiteGraph: edge (" + std::to_string(e.x) + ", " +
                                  std::to_string(e.y) + ") out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("BipartiteGraph: duplicate edge (" + std::to_string(e.x) +
                                  ", " + std::to_string(e.y) + ")");
    }
  }

  left_offsets_.assign(std::size_t(left_size_) + 1, 0);
  right_offsets_.assign(std::size_t(right_size_) + 1, 0);
  for (const Edge& e : edges_) {
    ++left_offsets_[e.x + 1];
    ++right_offsets_[e.y + 1];
  }
  for (std::size_t i = 1; i < left_offsets_.size(); ++i) left_offsets_[i] += left_offsets_[i - 1];
  for (std::size_t i = 1; i < right_offsets_.size(); ++i)
    right_offsets_[i] += right_offsets_[i - 1];

  left_adj_.resize(edges_.size());
  right_adj_.resize(edges_.size());
  std::vector<std::uint64_t> lpos(left_offsets_.begin(), left_offsets_.end() - 1);
  std::vector<std::uint64_t> rpos(right_offsets_.begin(), right_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    left_adj_[lpos[e.x]++] = e.y;
    right_adj_[rpos[e.y]++] = e.x;
  }
  // left_adj_ runs are sorted because edges_ is; sort right-side runs.
  for (std::uint32_t y = 0; y < right_size_; ++y) {
    std::sort(right_adj_.begin() + right_offsets_[y], right_adj_.begin() + right_offsets_[y + 1]);
  }
}

BipartiteGraph BipartiteGraph::complete(std::uint32_t left_size, std::uint32_t right_size) {
  std::vector<Edge> edges;
  edges.reserve(std::size_t(left_size) * right_size);
  for (std::uint32_t x = 0; x < left_size; ++x)
    for (std::uint32_t y = 0; y < right_size; ++y) edges.push_back({x, y});
  return BipartiteGraph(left_size, right_size, std::move(edges));
}

bool BipartiteGraph::has_edge(std::uint32_t x, std::uint32_t y) const {
  return edge_index(x, y) >= 0;
}

std::int64_t BipartiteGraph::edge_index(std::uint32_t x, std::uint32_t y) const {
  const Edge probe{x, y};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it == edges_.end() || !(*it == probe)) return -1;
  return it - edges_.begin();
}

std::span<const std::uint32_t> BipartiteGraph::left_neighbors(std::uint32_t x) const {
  return {left_adj_.data() + left_offsets_[x],
          left_adj_.data() + left_offsets_[x + 1]};
}

std::span<const std::uint32_t> BipartiteGraph::right_neighbors(std::uint32_t y) const {
  return {right_adj_.data() + right_offsets_[y],
          right_adj_.data() + right_offsets_[y + 1]};
}

std::uint32_t BipartiteGraph::left_degree(std::uint32_t x) const {
  return static_cast<std::uint32_t>(left_offsets_[x + 1] - left_offsets_[x]);
}

std::uint32_t BipartiteGraph::right_degree(std::uint32_t y) const {
  return static_cast<std::uint32_t>(right_offsets_[y + 1] - right_offsets_[y]);
}

bool BipartiteGraph::has_isolated_nodes() const {
  for (std::uint32_t x = 0; x < left_size_; ++x)
    if (left_degree(x) == 0) return true;
  for (std::uint32_t y = 0; y < right_size_; ++y)
    if (right_degree(y) == 0) return true;
  return false;
}

namespace {

void strip_comment(std::string& line) {
  const auto pos = line.find('#');
  if (pos != std::string::npos) line.erase(pos);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("graph parse error at line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

BipartiteGraph load_graph(std::istream& in, GraphLoadReport* report) {
  std::string line;
  std::size_t lineno = 0;
  std::uint32_t nx = 0, ny = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ss(line);
    if (!have_header) {
      long long a = -1, b = -1;
      if (!(ss >> a >> b) || a < 0 || b < 0) parse_fail(lineno, "expected header \"|X| |Y|\"");
      nx = static_cast<std::uint32_t>(a);
      ny = static_cast<std::uint32_t>(b);
      have_header = true;
      continue;
    }
    long long x = -1, y = -1;
    if (!(ss >> x >> y) || x < 0 || y < 0) parse_fail(lineno, "expected edge \"x y\"");
    if (x >= nx || y >= ny) {
      parse_fail(lineno, "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                             ") out of range for " + std::to_string(nx) + "x" +
                             std::to_string(ny) + " graph");
    }
    edges.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
  }
  if (!have_header) throw std::runtime_error("graph parse error: empty input");

  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (report) report->duplicates_removed = before - edges.size();
  return BipartiteGraph(nx, ny, std::move(edges));
}

BipartiteGraph load_graph_file(const std::string& path, GraphLoadReport* report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in, report);
}

void save_graph(const BipartiteGraph& g, std::ostream& out) {
  out << g.left_size() << ' ' << g.right_size() << '\n';
  for (const Edge& e : g.edges()) out << e.x << ' ' << e.y << '\n';
}

void save_graph_file(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  save_graph(g, out);
}

}  // namespace rectprof
