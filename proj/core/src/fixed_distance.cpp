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

#include "rectprof/fixed_distance.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rectprof/hypercontractivity.hpp"

namespace rectprof {

FixedDistanceSpec::FixedDistanceSpec(int n_, int d_) : n(n_), d(d_) {
  // d == n is the complement pairing and is a valid fixed-distance graph
  if (n < 2 || d <= 0 || d > n)
    throw std::invalid_argument("FixedDistanceSpec: need 0 < d <= n and n >= 2");
}

double binary_entropy(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("binary_entropy: p outside [0, 1]");
  if (p == 0 || p == 1) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double entropy_inverse(double h, EntropyBranch branch) {
  if (h < 0 || h > 1) throw std::invalid_argument("entropy_inverse: h outside [0, 1]");
  double lo = branch == EntropyBranch::lower ? 0.0 : 0.5;
  double hi = branch == EntropyBranch::lower ? 0.5 : 1.0;
  // H is increasing on [0, 1/2] and decreasing on [1/2, 1]
  const bool increasing = branch == EntropyBranch::lower;
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = binary_entropy(mid) < h;
    if (below == increasing)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// All n-bit values of popcount w, ascending (Gosper's hack).
std::vector<std::uint32_t> weight_class(int n, int w) {
  std::vector<std::uint32_t> out;
  if (w < 0 || w > n) return out;
  if (w == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t v = (std::uint32_t(1) << w) - 1;
  const std::uint32_t limit = std::uint32_t(1) << n;
  while (v < limit) {
    out.push_back(v);
    const std::uint32_t c = v & -v;
    const std::uint32_t r = v + c;
    if (r >= limit || r == 0) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace

BipartiteGraph build_fixed_graph(const FixedDistanceSpec& spec, std::uint64_t max_edges) {
  if (spec.n > 22)
    throw std::invalid_argument("build_fixed_graph: n > 22 cannot be materialized");
  const std::uint64_t side = std::uint64_t(1) << spec.n;
  const std::uint64_t total = side * binomial_u64(spec.n, spec.d);
  if (total > max_edges)
    throw std::invalid_argument("build_fixed_graph: edge count " + std::to_string(total) +
                                " exceeds limit " + std::to_string(max_edges));
  const std::vector<std::uint32_t> masks = weight_class(spec.n, spec.d);
  std::vector<Edge> edges;
  edges.reserve(total);
  for (std::uint32_t x = 0; x < side; ++x)
    for (std::uint32_t m : masks) edges.push_back({x, x ^ m});
  return BipartiteGraph(static_cast<std::uint32_t>(side), static_cast<std::uint32_t>(side),
                        std::move(edges));
}

std::uint64_t sphere_edge_count(int n, int d, int weight) {
  if (d % 2 != 0)
    throw std::invalid_argument("sphere_edge_count: odd distance has no single-weight rectangle");
  if (weight < 0 || weight > n) throw std::invalid_argument("sphere_edge_count: weight range");
  const int half = d / 2;
  if (weight < half || n - weight < half) return 0;
  return binomial_u64(n, weight) * binomial_u64(weight, half) * binomial_u64(n - weight, half);
}

double sphere_edge_count_log2(double n, double d, double weight) {
  return log2_binomial(n, weight) + log2_binomial(weight, d / 2) +
         log2_binomial(n - weight, d / 2);
}

SphereRectangle sphere_rectangle(const FixedDistanceSpec& spec, int weight) {
  const std::uint64_t count = sphere_edge_count(spec.n, spec.d, weight);
  std::vector<std::uint32_t> c = weight_class(spec.n, weight);
  Rectangle rect{c, c};
  return {std::move(rect), count};
}

double lambda_lower(double eps, double tau) {
  if (eps <= 0 || eps >= 1 || tau <= 0 || tau > 1)
    throw std::invalid_argument("lambda_lower: need 0 < eps < 1 and 0 < tau <= 1");
  const double threshold = binary_entropy(1 - std::sqrt(1 - eps));
  if (tau < threshold) return -(1 + binary_entropy(eps) - 2 * tau);
  const double alpha = entropy_inverse(tau, EntropyBranch::lower);
  // Feasible whenever tau >= threshold; clamp guards rounding at the seam.
  const double a1 = std::min(1.0, eps / (2 * alpha));
  const double a2 = eps / (2 * (1 - alpha));
  return -(1 + binary_entropy(eps) - tau - alpha * binary_entropy(a1) -
           (1 - alpha) * binary_entropy(a2));
}

double lambda_upper(double eps, double tau) {
  if (eps <= 0 || eps >= 1 || tau <= 0 || tau > 1)
    throw std::invalid_argument("lambda_upper: need 0 < eps < 1 and 0 < tau <= 1");
  return -(1 - tau) / (1 - eps);
}

ProfileRegion profile_region(double eps, double tau) {
  const double h = binary_entropy(eps);
  const double excluded = std::max({(1 - tau) / (1 - eps), 1 + h - 2 * tau, 1 - tau});
  const double included = std::min(-lambda_lower(eps, tau), 2 - 2 * tau);
  return {excluded, included};
}

std::pair<std::uint64_t, std::uint64_t> sample_bsc_pair(int n, double eps, Rng& rng) {
  if (n < 1 || n > 63) throw std::invalid_argument("sample_bsc_pair: n outside [1, 63]");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("sample_bsc_pair: eps outside (0, 1)");
  const std::uint64_t x = rng.next() & ((std::uint64_t(1) << n) - 1);
  std::uint64_t noise = 0;
  for (int i = 0; i < n; ++i)
    if (rng.uniform() < eps) noise |= std::uint64_t(1) << i;
  return {x, x ^ noise};
}

std::vector<BoundCurve> profile_bound_curves(double eps, const CurveGrid& grid) {
  if (grid.step <= 0 || grid.stop < grid.start)
    throw std::invalid_argument("profile_bound_curves: bad grid");
  std::vector<double> taus;
  for (double t = grid.start; t <= grid.stop + 1e-12; t += grid.step) taus.push_back(t);

  const double h = binary_entropy(eps);
  std::vector<BoundCurve> curves;
  auto add = [&](CurveKind kind, auto&& fn) {
    BoundCurve c{"tau", kind, taus, {}};
    c.values.reserve(taus.size());
    for (double t : taus) c.values.push_back(fn(t));
    curves.push_back(std::move(c));
  };
  add(CurveKind::trivial_exclusion_side, [](double t) { return 1 - t; });
  add(CurveKind::trivial_exclusion_total, [&](double t) { return 1 + h - 2 * t; });
  add(CurveKind::main_exclusion, [&](double t) { return (1 - t) / (1 - eps); });
  add(CurveKind::constructive_inclusion, [&](double t) { return -lambda_lower(eps, t); });
  add(CurveKind::trivial_inclusion, [](double t) { return 2 - 2 * t; });
  return curves;
}

std::vector<std::pair<double, double>> reference_upper_bounds() {
  std::vector<std::pair<double, double>> table;
  for (double eps : {0.1, 0.2, 0.3, 0.4}) table.emplace_back(eps, 1.0 / (1.0 - eps));
  return table;
}

void emit_curves(double eps, const CurveGrid& grid, std::ostream& out) {
  const std::vector<BoundCurve> curves = profile_bound_curves(eps, grid);
  out << "# profile bound curves for distance fraction eps = " << eps << "\n";
  out << "# reference column 1/(1-eps):\n";
  for (const auto& [e, v] : reference_upper_bounds())
    out << "#   eps=" << e << " -> " << v << "\n";
  out << "# conditional-independence constant c(eps): unavailable\n";
  out << "tau,trivial_exclusion_side,trivial_exclusion_total,main_exclusion,"
         "constructive_inclusion,trivial_inclusion\n";
  for (std::size_t i = 0; i < curves[0].grid.size(); ++i) {
    out << curves[0].grid[i];
    for (const BoundCurve& c : curves) out << ',' << c.values[i];
    out << "\n";
  }
}

double fixed_distance_rect_upper(int n, int d, std::uint64_t a_size, std::uint64_t b_size,
                                 double delta_lower) {
  FixedDistanceSpec spec(n, d);  // validates 0 < d < n
  const double side = std::pow(2.0, n);
  const double mu = std::min(1.0, static_cast<double>(a_size) / side);
  const double nu = std::min(1.0, static_cast<double>(b_size) / side);
  const double eps = spec.epsilon();
  // every distance-d pair carries mass 2^-n eps^d (1-eps)^(n-d) under the
  // bit-flip coupling; at d = n the (1-eps) factor drops out entirely
  double log2_pair = -n + d * std::log2(eps);
  if (n > d) log2_pair += (n - d) * std::log2(1 - eps);
  const double bound = rect_bound(mu, nu, delta_lower);
  return std::exp2(std::log2(bound) - log2_pair);
}

}  // namespace rectprof
