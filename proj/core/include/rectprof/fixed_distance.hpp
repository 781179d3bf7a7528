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

#ifndef RECTPROF_FIXED_DISTANCE_HPP
#define RECTPROF_FIXED_DISTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rectprof/bipartite_graph.hpp"
#include "rectprof/math_util.hpp"
#include "rectprof/rectangle.hpp"

namespace rectprof {

// The fixed-Hamming-distance graph on n-bit strings: (x, y) is an edge iff
// the Hamming distance between x and y is exactly d. Vertices are the
// integer encodings of the bit strings. Materialization is only possible
// for moderate n; the curve functions below are the analytic (n -> inf)
// counterparts and take a real-valued distance fraction.

struct FixedDistanceSpec {
  int n = 0;  // bit length
  int d = 0;  // exact Hamming distance, 0 < d <= n

  FixedDistanceSpec(int n_, int d_);
  double epsilon() const { return static_cast<double>(d) / n; }
};

// H(p) = -p log2 p - (1-p) log2(1-p), with H(0) = H(1) = 0.
double binary_entropy(double p);

enum class EntropyBranch { lower, upper };

// Inverse of H on [0, 1/2] (lower) or [1/2, 1] (upper), by bisection to 1e-12.
double entropy_inverse(double h, EntropyBranch branch);

// Materializes the graph; edge count is 2^n * C(n, d).
// Throws when n > 22 or the edge count exceeds max_edges.
BipartiteGraph build_fixed_graph(const FixedDistanceSpec& spec,
                                 std::uint64_t max_edges = std::uint64_t(1) << 26);

struct SphereRectangle {
  Rectangle rect;        // C x C with C = all weight-w strings
  std::uint64_t count;   // edges inside: C(n,w) * C(w,d/2) * C(n-w,d/2)
};

// The single-weight-class rectangle and its closed-form edge count.
// d must be even (each edge flips d/2 ones and d/2 zeros); w in [0, n].
SphereRectangle sphere_rectangle(const FixedDistanceSpec& spec, int weight);

// Closed-form count alone, exact.
std::uint64_t sphere_edge_count(int n, int d, int weight);
// log2 of the count for parameters beyond 64-bit range.
double sphere_edge_count_log2(double n, double d, double weight);

// Normalized exponent bounds for the densest 2^{tau n} x 2^{tau n}
// rectangle relative to the total edge count (limits as n -> inf):
//   lower: sphere/subsampling construction, two cases split at
//          tau = H(1 - sqrt(1 - eps));
//   upper: -(1 - tau)/(1 - eps).
double lambda_lower(double eps, double tau);
double lambda_upper(double eps, double tau);

struct ProfileRegion {
  double kappa_excluded_below;   // triples (tau, tau, kappa) with smaller kappa are out
  double kappa_included_above;   // larger kappa are in
};

// Per-tau thresholds combining the main bounds with the counting bounds.
ProfileRegion profile_region(double eps, double tau);

// x uniform on n bits; y = x with each bit flipped independently w.p. eps.
std::pair<std::uint64_t, std::uint64_t> sample_bsc_pair(int n, double eps, Rng& rng);

struct CurveGrid {
  double start = 0.01;
  double stop = 0.99;
  double step = 0.01;
};

enum class CurveKind {
  trivial_exclusion_side,   // 1 - tau
  trivial_exclusion_total,  // 1 + H(eps) - 2 tau
  main_exclusion,           // (1 - tau) / (1 - eps)
  constructive_inclusion,   // -lambda_lower
  trivial_inclusion,        // 2 - 2 tau
};

// Sampled threshold function tau -> kappa for plot emission.
struct BoundCurve {
  std::string parameter;  // grid variable name ("tau")
  CurveKind kind;
  std::vector<double> grid;    // strictly increasing
  std::vector<double> values;  // finite on the stated domain
};

std::vector<BoundCurve> profile_bound_curves(double eps, const CurveGrid& grid);

// CSV with one row per tau: the two counting exclusion curves, the main
// exclusion curve (1-tau)/(1-eps), the constructive inclusion threshold and
// the counting inclusion threshold. A header comment carries the reference
// table of 1/(1-eps) values (the comparison column; the competing constant
// from the conditional-independence method is not computable here and is
// emitted as "unavailable").
void emit_curves(double eps, const CurveGrid& grid, std::ostream& out);

// The reference column 1/(1-eps) at eps = 0.1, 0.2, 0.3, 0.4.
std::vector<std::pair<double, double>> reference_upper_bounds();

// Valid upper bound on the edge count of any a_size x b_size rectangle in
// the fixed-distance graph, via the rectangle-probability bound applied to
// the bit-flip coupling (every distance-d pair carries the same mass).
// delta_lower must be a certified lower bound on delta of the one-bit
// coupling at eps = d/n.
double fixed_distance_rect_upper(int n, int d, std::uint64_t a_size, std::uint64_t b_size,
                                 double delta_lower);

}  // namespace rectprof

#endif  // RECTPROF_FIXED_DISTANCE_HPP
