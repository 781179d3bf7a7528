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

#include "rectprof/hypercontractivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rectprof/math_util.hpp"

namespace rectprof {

namespace {

double q_exponent(double delta) {
  return 2.0 + delta / (1.0 - delta);
}

double weighted_l2(const std::vector<double>& f, std::span<const double> measure) {
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += measure[i] * f[i] * f[i];
  return std::sqrt(s);
}

double norm_under(const std::vector<double>& values, std::span<const double> measure, double p) {
  double mx = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (measure[i] > 0) mx = std::max(mx, std::abs(values[i]));
  if (mx == 0) return 0;
  if (std::isinf(p)) return mx;
  double s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (measure[i] <= 0) continue;
    s += measure[i] * std::pow(std::abs(values[i]) / mx, p);
  }
  return mx * std::pow(s, 1.0 / p);
}

std::vector<double> apply_raw(const JointDistribution& d, const std::vector<double>& f) {
  const std::size_t nx = d.left_size(), ny = d.right_size();
  std::vector<double> out(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    double s = 0;
    for (std::size_t y = 0; y < ny; ++y) s += d.prob(x, y) * f[y];
    out[x] = s / d.marginal_x()[x];
  }
  return out;
}

}  // namespace

WeightedFunction apply_operator(const JointDistribution& d, const WeightedFunction& f) {
  if (f.values.size() != d.right_size())
    throw std::invalid_argument("apply_operator: function dimension does not match |Y|");
  WeightedFunction out;
  out.values = apply_raw(d, f.values);
  out.measure.assign(d.marginal_x().begin(), d.marginal_x().end());
  return out;
}

double lp_norm(const WeightedFunction& f, double p) {
  if (f.values.size() != f.measure.size())
    throw std::invalid_argument("lp_norm: dimension mismatch");
  if (p < 1) throw std::invalid_argument("lp_norm: p must be >= 1");
  return norm_under(f.values, f.measure, p);
}

double norm_gap(const JointDistribution& d, const std::vector<double>& f, double delta) {
  if (f.size() != d.right_size()) throw std::invalid_argument("norm_gap: dimension mismatch");
  if (delta < 0 || delta > 1) throw std::invalid_argument("norm_gap: delta outside [0, 1]");
  const double q = delta >= 1 ? std::numeric_limits<double>::infinity() : q_exponent(delta);
  const double p = 2.0 - delta;
  const std::vector<double> tf = apply_raw(d, f);
  return norm_under(tf, d.marginal_x(), q) - norm_under(f, d.marginal_y(), p);
}

bool contraction_check(const JointDistribution& d, double p, std::uint32_t trials,
                       std::uint64_t seed, std::vector<double>* counterexample) {
  if (p < 1) throw std::invalid_argument("contraction_check: p must be >= 1");
  Rng rng(seed);
  std::vector<double> f(d.right_size());
  for (std::uint32_t t = 0; t < trials; ++t) {
    for (double& v : f) v = rng.normal();
    const std::vector<double> tf = apply_raw(d, f);
    const double lhs = norm_under(tf, d.marginal_x(), p);
    const double rhs = norm_under(f, d.marginal_y(), p);
    if (lhs > rhs + 1e-12) {
      if (counterexample) *counterexample = f;
      return false;
    }
  }
  return true;
}

namespace {

// Gradient of ||T f||_q - ||f||_p at f (away from the nonsmooth set).
void gap_gradient(const JointDistribution& d, const std::vector<double>& f, double p, double q,
                  std::vector<double>& grad) {
  const std::size_t nx = d.left_size(), ny = d.right_size();
  const std::vector<double> g = apply_raw(d, f);
  const double nq = norm_under(g, d.marginal_x(), q);
  const double np = norm_under(f, d.marginal_y(), p);
  grad.assign(ny, 0.0);
  if (nq > 0) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double gx = g[x];
      if (gx == 0) continue;
      const double w = std::copysign(std::pow(std::abs(gx) / nq, q - 1.0), gx);
      for (std::size_t y = 0; y < ny; ++y) grad[y] += d.prob(x, y) * w;
    }
  }
  if (np > 0) {
    const auto my = d.marginal_y();
    for (std::size_t y = 0; y < ny; ++y) {
      const double fy = f[y];
      if (fy == 0) continue;
      grad[y] -= my[y] * std::copysign(std::pow(std::abs(fy) / np, p - 1.0), fy);
    }
  }
}

struct AscentResult {
  double gap = -1;
  std::vector<double> f;
};

// Projected gradient ascent over the L2(D_Y) unit sphere with backtracking;
// bails out as soon as the gap certifies a violation.
AscentResult ascend(const JointDistribution& d, std::vector<double> f, double delta,
                    const OptimizerConfig& cfg) {
  const double p = 2.0 - delta;
  const double q = q_exponent(delta);
  const auto my = d.marginal_y();

  const double init = weighted_l2(f, my);
  if (init <= 0) return {};
  for (double& v : f) v /= init;

  AscentResult res;
  res.gap = norm_gap(d, f, delta);
  res.f = f;
  double step = 0.5;
  std::vector<double> grad, trial;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (res.gap > cfg.violation_threshold) return res;
    gap_gradient(d, f, p, q, grad);
    // project out the radial component
    double dot = 0;
    for (std::size_t y = 0; y < f.size(); ++y) dot += my[y] * grad[y] * f[y];
    for (std::size_t y = 0; y < f.size(); ++y) grad[y] -= dot * f[y];
    const double gnorm = weighted_l2(grad, my);
    if (gnorm < cfg.gradient_tolerance) break;

    bool improved = false;
    while (step > 1e-14) {
      trial = f;
      for (std::size_t y = 0; y < f.size(); ++y) trial[y] += step * grad[y];
      const double n2 = weighted_l2(trial, my);
      if (n2 > 0) {
        for (double& v : trial) v /= n2;
        const double g2 = norm_gap(d, trial, delta);
        if (g2 > res.gap + 1e-18) {
          f = trial;
          res.gap = g2;
          res.f = f;
          step *= 1.8;
          improved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return res;
}

// Exact decision at delta = 1: sup over the L1 ball of ||T f||_inf is
// attained at a scaled coordinate indicator, so the inequality holds iff
// D(x, y) <= D_X(x) D_Y(y) everywhere, i.e. iff D is a product.
DeltaCheck decide_at_one(const JointDistribution& d) {
  const std::size_t nx = d.left_size(), ny = d.right_size();
  double best = 0;
  std::size_t best_y = 0;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const double v = d.prob(x, y) - d.marginal_x()[x] * d.marginal_y()[y];
      if (v > best) {
        best = v;
        best_y = y;
      }
    }
  if (best > 1e-12) {
    std::vector<double> f(ny, 0.0);
    f[best_y] = 1.0;
    DeltaCheck c;
    c.holds = false;
    c.witness = std::move(f);
    c.margin = norm_gap(d, *c.witness, 1.0);
    return c;
  }
  return {};
}

}  // namespace

DeltaCheck holds_at_delta(const JointDistribution& d, double delta, const OptimizerConfig& cfg) {
  if (delta < 0 || delta > 1)
    throw std::invalid_argument("holds_at_delta: delta outside [0, 1]");
  if (delta >= 1.0) return decide_at_one(d);
  if (delta == 0.0) return {};  // the operator is an L2 contraction

  const std::size_t ny = d.right_size();
  const auto my = d.marginal_y();

  // Deterministic grid: indicators and centered indicators of every subset
  // of Y (the extremal candidates in the rectangle-bound chain).
  if (ny <= 12) {
    std::vector<double> f(ny);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << ny); ++mask) {
      double nu = 0;
      for (std::size_t y = 0; y < ny; ++y) {
        f[y] = (mask >> y) & 1 ? 1.0 : 0.0;
        nu += f[y] * my[y];
      }
      const double g1 = norm_gap(d, f, delta);
      if (g1 > cfg.violation_threshold)
        return {false, f, g1};
      for (std::size_t y = 0; y < ny; ++y) f[y] -= nu;
      const double g2 = norm_gap(d, f, delta);
      if (g2 > cfg.violation_threshold)
        return {false, f, g2};
    }
  }

  // Multi-start ascent: centered singletons, constant-plus-bump, Gaussians.
  const unsigned starts = static_cast<unsigned>(std::max(1, cfg.starts));
  std::vector<AscentResult> results(starts);
  parallel_chunks(starts, cfg.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t s = begin; s < end; ++s) {
      std::vector<double> f0(ny, 0.0);
      if (s < ny) {
        f0[s] = 1.0;
        for (std::size_t y = 0; y < ny; ++y) f0[y] -= my[s];
      } else if (s < 2 * ny) {
        std::fill(f0.begin(), f0.end(), 1.0);
        f0[s - ny] += 2.0;
      } else {
        Rng rng(mix_seed(cfg.seed, s));
        for (double& v : f0) v = rng.normal();
      }
      results[s] = ascend(d, std::move(f0), delta, cfg);
    }
  });
  for (const AscentResult& r : results) {
    if (r.gap > cfg.violation_threshold) return {false, r.f, r.gap};
  }
  return {};
}

DeltaEstimate delta_estimate(const JointDistribution& d, double tol, const OptimizerConfig& cfg) {
  if (tol <= 0) throw std::invalid_argument("delta_estimate: tol must be positive");
  DeltaEstimate est;
  est.tolerance = tol;

  DeltaCheck at_one = holds_at_delta(d, 1.0, cfg);
  if (at_one.holds) {
    est.lower = est.upper = 1.0;
    return est;
  }
  est.lower = 0.0;
  est.upper = 1.0;
  est.witness = std::move(at_one.witness);
  while (est.upper - est.lower > tol) {
    const double mid = 0.5 * (est.lower + est.upper);
    DeltaCheck c = holds_at_delta(d, mid, cfg);
    if (c.holds) {
      est.lower = mid;
    } else {
      est.upper = mid;
      est.witness = std::move(c.witness);
    }
  }
  return est;
}

double rect_bound(double mu, double nu, double delta) {
  if (mu < 0 || mu > 1 || nu < 0 || nu > 1)
    throw std::invalid_argument("rect_bound: mu, nu must lie in [0, 1]");
  if (delta < 0 || delta > 1) throw std::invalid_argument("rect_bound: delta outside [0, 1]");
  const double e = 2.0 - delta;
  auto centered_norm = [e](double t) {
    const double s = std::pow(t, e) * (1 - t) + t * std::pow(1 - t, e);
    return std::pow(s, 1.0 / e);
  };
  return mu * nu + centered_norm(mu) * centered_norm(nu);
}

double rect_bound_asymptotic(double mu, double nu, double delta) {
  if (mu < 0 || mu > 1 || nu < 0 || nu > 1)
    throw std::invalid_argument("rect_bound_asymptotic: mu, nu must lie in [0, 1]");
  if (delta < 0 || delta > 1)
    throw std::invalid_argument("rect_bound_asymptotic: delta outside [0, 1]");
  return std::pow(mu * nu, 1.0 / (2.0 - delta));
}

double common_information_deficit(double log_x, double log_y, double delta, double n,
                                  double a, double b, double c) {
  if (n < 1) throw std::invalid_argument("common_information_deficit: n must be >= 1");
  return a + b + (2.0 - delta) * c - (log_x + log_y) * n;
}

JointDistribution tensor(const JointDistribution& d1, const JointDistribution& d2,
                         std::size_t max_cells) {
  const std::size_t nx = d1.left_size() * d2.left_size();
  const std::size_t ny = d1.right_size() * d2.right_size();
  if (nx * ny > max_cells)
    throw std::invalid_argument("tensor: product alphabet exceeds the configured size limit");
  std::vector<double> probs(nx * ny);
  for (std::size_t x1 = 0; x1 < d1.left_size(); ++x1)
    for (std::size_t x2 = 0; x2 < d2.left_size(); ++x2)
      for (std::size_t y1 = 0; y1 < d1.right_size(); ++y1)
        for (std::size_t y2 = 0; y2 < d2.right_size(); ++y2) {
          const std::size_t x = x1 * d2.left_size() + x2;
          const std::size_t y = y1 * d2.right_size() + y2;
          probs[x * ny + y] = d1.prob(x1, y1) * d2.prob(x2, y2);
        }
  return JointDistribution(nx, ny, std::move(probs));
}

}  // namespace rectprof
