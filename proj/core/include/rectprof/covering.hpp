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

#ifndef RECTPROF_COVERING_HPP
#define RECTPROF_COVERING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rectprof/bipartite_graph.hpp"
#include "rectprof/math_util.hpp"
#include "rectprof/rectangle.hpp"

namespace rectprof {

// Rectangle covers: the randomized shifted-copy construction for
// edge-transitive graphs, a greedy baseline, membership verification, and
// the three-message codec a complete cover induces.

// Automorphism of a graph on bit-string vertices: x -> perm(x) xor shift,
// applied to both sides. perm[i] is the destination position of bit i.
// This family generates the full automorphism action used for the
// fixed-distance graphs; callers with other edge-transitive graphs must
// supply their own sampler over the same shape.
struct Automorphism {
  std::vector<std::uint32_t> perm;
  std::uint64_t shift = 0;

  std::uint32_t apply(std::uint32_t v) const;
};

using AutomorphismSampler = std::function<Automorphism(Rng&)>;

// Uniform over coordinate permutations and xor shifts on n bits. The
// induced action maps a fixed edge of the fixed-distance graph to a
// uniformly random edge.
AutomorphismSampler hypercube_automorphism_sampler(int n);

// m = ceil(2^gamma * ln |E|): enough shifted copies to make the union
// bound in the randomized cover meaningful (natural log; override by
// passing your own m to random_cover).
std::uint64_t default_cover_size(double gamma, std::uint64_t edge_count);

// Covers E by m images of `base` under independently sampled
// automorphisms. The base must contain at least one edge. Each sampled map
// is spot-checked for edge preservation (throws std::runtime_error on
// failure). Success is only probable, not certain: inspect is_complete()
// and retry with a fresh seed on failure.
Cover random_cover(GraphPtr g, const AutomorphismSampler& sampler, const Rectangle& base,
                   std::uint64_t m, std::uint64_t seed);

// Repeatedly packs the next min(a_cap, b_cap) uncovered edges into one
// rectangle (padded to the caps with the lowest-index unused vertices).
// Always terminates with a complete cover of at most
// ceil(|E| / min(a_cap, b_cap)) rectangles.
Cover greedy_cover(GraphPtr g, std::uint32_t a_cap, std::uint32_t b_cap);

// Certifies that the cover witnesses membership of
//   (ceil log2 max|A_i|, ceil log2 max|B_i|, ceil log2 m)
// by materializing the decoder maps and checking every edge round-trips.
// Throws std::invalid_argument if the cover is incomplete.
ProfileTriple verify_witness(const Cover& cover);

// Three-message encoding derived from a complete cover: c is the index of
// the first rectangle containing the edge, a and b are the positions of x
// and y inside it.
class Codec {
 public:
  explicit Codec(Cover cover);

  struct Message {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;
  };

  // Throws std::domain_error if (x, y) is not an edge.
  Message encode(std::uint32_t x, std::uint32_t y) const;
  Edge decode(const Message& m) const;

  unsigned alpha_bits() const { return alpha_bits_; }
  unsigned beta_bits() const { return beta_bits_; }
  unsigned gamma_bits() const { return gamma_bits_; }
  const Cover& cover() const { return cover_; }

 private:
  Cover cover_;
  unsigned alpha_bits_, beta_bits_, gamma_bits_;
};

Codec codec_from_cover(Cover cover);

// Analytic membership triple for an edge-transitive graph holding a known
// rectangle with K edges:
//   (log2 a_cap, log2 b_cap, log2(|E|/K) + log2 ln |E|).
// The constructive counterpart is random_cover. Edge-transitivity is the
// caller's assertion; it is not verified here.
ProfileTriple edge_transitive_cover_triple(const BipartiteGraph& g, std::uint64_t a_cap,
                                           std::uint64_t b_cap, std::uint64_t k);

// Cover files: JSON object {"graph": <spec string>, "rectangles":
// [{"left": [...], "right": [...]}, ...]}.
void save_cover(const Cover& cover, const std::string& graph_spec, std::ostream& out);
Cover load_cover(std::istream& in);
Cover load_cover_file(const std::string& path);

}  // namespace rectprof

#endif  // RECTPROF_COVERING_HPP
