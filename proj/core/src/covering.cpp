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

#include "rectprof/covering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "rectprof/rect_search.hpp"

namespace rectprof {

std::uint32_t Automorphism::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    out |= ((v >> i) & 1u) << perm[i];
  return out ^ static_cast<std::uint32_t>(shift);
}

AutomorphismSampler hypercube_automorphism_sampler(int n) {
  if (n < 1 || n > 31) throw std::invalid_argument("hypercube sampler: n outside [1, 31]");
  return [n](Rng& rng) {
    Automorphism a;
    a.perm = sample_distinct(rng, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n));
    a.shift = rng.below(std::uint64_t(1) << n);
    return a;
  };
}

std::uint64_t default_cover_size(double gamma, std::uint64_t edge_count) {
  if (edge_count < 2) return 1;
  return static_cast<std::uint64_t>(
      std::ceil(std::exp2(gamma) * std::log(static_cast<double>(edge_count))));
}

namespace {

// Applying a sampled map must send edges to edges; a wrong sampler would
// silently produce junk covers, so spot-check each map.
void check_edge_preservation(const BipartiteGraph& g, const Automorphism& a, Rng& rng) {
  const std::uint64_t checks = std::min<std::uint64_t>(g.edge_count(), 16);
  for (std::uint64_t i = 0; i < checks; ++i) {
    const Edge& e = g.edges()[rng.below(g.edge_count())];
    if (!g.has_edge(a.apply(e.x), a.apply(e.y)))
      throw std::runtime_error("random_cover: sampled map is not an automorphism");
  }
}

std::vector<std::uint32_t> map_sorted(const std::vector<std::uint32_t>& vs,
                                      const Automorphism& a) {
  std::vector<std::uint32_t> out;
  out.reserve(vs.size());
  for (std::uint32_t v : vs) out.push_back(a.apply(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cover random_cover(GraphPtr g, const AutomorphismSampler& sampler, const Rectangle& base,
                   std::uint64_t m, std::uint64_t seed) {
  if (!g) throw std::invalid_argument("random_cover: null graph");
  base.validate_within(*g);
  if (g->edge_count() > 0 && rect_edge_count(*g, base) == 0)
    throw std::invalid_argument("random_cover: base rectangle contains no edges");
  Rng rng(seed);
  std::vector<Rectangle> rects;
  rects.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const Automorphism a = sampler(rng);
    check_edge_preservation(*g, a, rng);
    rects.push_back(Rectangle{map_sorted(base.left, a), map_sorted(base.right, a)});
  }
  return Cover(std::move(g), std::move(rects));
}

Cover greedy_cover(GraphPtr g, std::uint32_t a_cap, std::uint32_t b_cap) {
  if (!g) throw std::invalid_argument("greedy_cover: null graph");
  const BipartiteGraph& graph = *g;
  if (graph.edge_count() == 0) return Cover(std::move(g), {});
  if (a_cap == 0 || b_cap == 0)
    throw std::invalid_argument("greedy_cover: caps must be positive");
  const std::uint32_t chunk = std::min(a_cap, b_cap);

  std::vector<char> covered(graph.edge_count(), 0);
  std::size_t scan = 0;  // edges before this index are covered
  std::vector<Rectangle> rects;

  while (true) {
    while (scan < graph.edge_count() && covered[scan]) ++scan;
    if (scan == graph.edge_count()) break;

    std::vector<std::uint32_t> left, right;
    std::size_t taken = 0;
    for (std::size_t i = scan; i < graph.edge_count() && taken < chunk; ++i) {
      if (covered[i]) continue;
      left.push_back(graph.edges()[i].x);
      right.push_back(graph.edges()[i].y);
      ++taken;
    }
    Rectangle r = Rectangle::of(std::move(left), std::move(right));

    // pad to the declared caps with the lowest-index unused vertices
    auto pad = [](std::vector<std::uint32_t>& side, std::uint32_t cap, std::uint32_t size) {
      std::uint32_t next = 0;
      while (side.size() < cap && next < size) {
        if (!std::binary_search(side.begin(), side.end(), next)) {
          side.push_back(next);
          std::sort(side.begin(), side.end());
        }
        ++next;
      }
    };
    pad(r.left, a_cap, graph.left_size());
    pad(r.right, b_cap, graph.right_size());

    for_each_edge_in(graph, r, [&](std::uint64_t idx) { covered[idx] = 1; });

    rects.push_back(std::move(r));
  }
  return Cover(std::move(g), std::move(rects));
}

Codec::Codec(Cover cover) : cover_(std::move(cover)) {
  if (!cover_.is_complete())
    throw std::invalid_argument("codec: cover does not cover every edge");
  alpha_bits_ = ceil_log2(cover_.max_left_size());
  beta_bits_ = ceil_log2(cover_.max_right_size());
  gamma_bits_ = ceil_log2(cover_.size());
}

Codec::Message Codec::encode(std::uint32_t x, std::uint32_t y) const {
  if (!cover_.graph().has_edge(x, y))
    throw std::domain_error("codec: (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge");
  const auto& rects = cover_.rectangles();
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rectangle& r = rects[i];
    const auto lx = std::lower_bound(r.left.begin(), r.left.end(), x);
    if (lx == r.left.end() || *lx != x) continue;
    const auto ly = std::lower_bound(r.right.begin(), r.right.end(), y);
    if (ly == r.right.end() || *ly != y) continue;
    return {static_cast<std::uint32_t>(lx - r.left.begin()),
            static_cast<std::uint32_t>(ly - r.right.begin()), static_cast<std::uint32_t>(i)};
  }
  // unreachable: construction verified completeness
  throw std::logic_error("codec: complete cover missed an edge");
}

Edge Codec::decode(const Message& m) const {
  const auto& rects = cover_.rectangles();
  if (m.c >= rects.size()) throw std::domain_error("codec: rectangle index out of range");
  const Rectangle& r = rects[m.c];
  if (m.a >= r.left.size() || m.b >= r.right.size())
    throw std::domain_error("codec: position out of range for rectangle");
  return {r.left[m.a], r.right[m.b]};
}

Codec codec_from_cover(Cover cover) { return Codec(std::move(cover)); }

ProfileTriple verify_witness(const Cover& cover) {
  const BipartiteGraph& g = cover.graph();
  const auto& rects = cover.rectangles();

  // first-match rectangle assignment for every edge, in one sweep
  constexpr std::uint32_t kUnassigned = ~std::uint32_t(0);
  std::vector<std::uint32_t> first_rect(g.edge_count(), kUnassigned);
  std::uint64_t remaining = g.edge_count();
  for (std::size_t i = 0; i < rects.size() && remaining > 0; ++i) {
    for_each_edge_in(g, rects[i], [&](std::uint64_t idx) {
      if (first_rect[idx] == kUnassigned) {
        first_rect[idx] = static_cast<std::uint32_t>(i);
        --remaining;
      }
    });
  }
  if (remaining > 0)
    throw std::invalid_argument("verify_witness: cover does not cover every edge");

  // materialize the decoder maps and check every edge round-trips
  for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edges()[idx];
    const Rectangle& r = rects[first_rect[idx]];
    const auto ax = std::lower_bound(r.left.begin(), r.left.end(), e.x);
    const auto by = std::lower_bound(r.right.begin(), r.right.end(), e.y);
    if (ax == r.left.end() || *ax != e.x || by == r.right.end() || *by != e.y)
      throw std::logic_error("verify_witness: assignment outside its rectangle");
    // f(a, c) and g(b, c)
    if (r.left[ax - r.left.begin()] != e.x || r.right[by - r.right.begin()] != e.y)
      throw std::logic_error("verify_witness: decoder mismatch");
  }
  return ProfileTriple{static_cast<double>(ceil_log2(cover.max_left_size())),
                       static_cast<double>(ceil_log2(cover.max_right_size())),
                       static_cast<double>(ceil_log2(cover.size()))};
}

ProfileTriple edge_transitive_cover_triple(const BipartiteGraph& g, std::uint64_t a_cap,
                                           std::uint64_t b_cap, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("edge_transitive_cover_triple: k must be positive");
  if (a_cap == 0 || b_cap == 0)
    throw std::invalid_argument("edge_transitive_cover_triple: caps must be positive");
  const double e = static_cast<double>(g.edge_count());
  double gamma = 0.0;
  if (g.edge_count() >= 2)
    gamma = std::max(0.0, std::log2(e / static_cast<double>(k)) + std::log2(std::log(e)));
  ProfileTriple t{std::log2(static_cast<double>(a_cap)), std::log2(static_cast<double>(b_cap)),
                  gamma};
  validate(t);
  return t;
}

void save_cover(const Cover& cover, const std::string& graph_spec, std::ostream& out) {
  nlohmann::json j;
  j["graph"] = graph_spec;
  j["left_size"] = cover.graph().left_size();
  j["right_size"] = cover.graph().right_size();
  nlohmann::json rects = nlohmann::json::array();
  for (const Rectangle& r : cover.rectangles()) {
    rects.push_back({{"left", r.left}, {"right", r.right}});
  }
  j["rectangles"] = std::move(rects);
  out << j.dump(2) << "\n";
}

Cover load_cover(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("cover parse error: ") + e.what());
  }
  if (!j.contains("graph") || !j.contains("rectangles"))
    throw std::runtime_error("cover parse error: missing \"graph\" or \"rectangles\"");
  auto graph = std::make_shared<BipartiteGraph>(graph_from_spec(j["graph"].get<std::string>()));
  std::vector<Rectangle> rects;
  for (const auto& rj : j["rectangles"]) {
    rects.push_back(Rectangle::of(rj["left"].get<std::vector<std::uint32_t>>(),
                                  rj["right"].get<std::vector<std::uint32_t>>()));
  }
  return Cover(std::move(graph), std::move(rects));
}

Cover load_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cover file: " + path);
  return load_cover(in);
}

}  // namespace rectprof
