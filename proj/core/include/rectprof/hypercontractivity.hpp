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

#ifndef RECTPROF_HYPERCONTRACTIVITY_HPP
#define RECTPROF_HYPERCONTRACTIVITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rectprof/joint_distribution.hpp"

namespace rectprof {

// The conditional-expectation operator T of a joint distribution maps
// functions on Y to functions on X:  (T f)(x) = E[f(y) | x].  T is an
// L_p contraction for every p in [1, inf].  delta(D) is the largest
// delta <= 1 with ||T f||_{2 + delta/(1-delta)} <= ||f||_{2 - delta} for
// all f; it is positive exactly when the support graph is connected, and
// it drives the rectangle-probability bound below.

// Real-valued function together with the marginal measure its norms are
// taken under.
struct WeightedFunction {
  std::vector<double> values;
  std::vector<double> measure;
};

// (T f)(x) = sum_y D(x, y) f(y) / D_X(x). f must live on Y.
WeightedFunction apply_operator(const JointDistribution& d, const WeightedFunction& f);

// E[|f|^p]^{1/p} under f's measure; p = inf gives max over the support.
// Computed with the max factored out so large p stays stable.
double lp_norm(const WeightedFunction& f, double p);

// ||T f||_{2+delta/(1-delta)} - ||f||_{2-delta} for a candidate witness;
// positive means the defining inequality fails at this delta.
double norm_gap(const JointDistribution& d, const std::vector<double>& f, double delta);

// Samples random functions and checks ||T f||_p <= ||f||_p + 1e-12 for
// each. A false return (with the violating f stored in *counterexample,
// when given) would indicate an implementation bug, not a property of d.
bool contraction_check(const JointDistribution& d, double p, std::uint32_t trials,
                       std::uint64_t seed, std::vector<double>* counterexample = nullptr);

struct OptimizerConfig {
  int starts = 64;
  int max_iterations = 500;
  double gradient_tolerance = 1e-10;
  // A candidate refutes only if the norm gap exceeds this; keeps floating-
  // point noise from producing false certificates.
  double violation_threshold = 1e-11;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
};

struct DeltaCheck {
  bool holds = true;
  // Present iff refuted; re-checkable via norm_gap.
  std::optional<std::vector<double>> witness;
  double margin = 0.0;
};

// Searches for a violating f by a deterministic grid of signed/centered
// indicators plus multi-start projected gradient ascent over the L2 unit
// sphere. "holds" is numerical evidence; "refuted" is a hard certificate.
// delta = 1 is decided exactly via the (inf, 1)-norm pair.
DeltaCheck holds_at_delta(const JointDistribution& d, double delta,
                          const OptimizerConfig& cfg = {});

struct DeltaEstimate {
  double lower = 0.0;  // largest probed delta at which no violation was found
  double upper = 1.0;  // smallest refuted delta, or 1
  std::optional<std::vector<double>> witness;  // violates at upper (and above)
  double tolerance = 0.0;
};

// Bisection on delta using holds_at_delta; upper - lower <= tol.
// Monotonicity of the norms in delta makes `lower` safe to plug into
// rect_bound.
DeltaEstimate delta_estimate(const JointDistribution& d, double tol = 1e-3,
                             const OptimizerConfig& cfg = {});

// Upper bound on Pr[x in A, y in B] for sets with marginal measures mu, nu:
//   mu*nu + (mu^{2-d}(1-mu) + mu(1-mu)^{2-d})^{1/(2-d)}
//         * (nu^{2-d}(1-nu) + nu(1-nu)^{2-d})^{1/(2-d)}.
double rect_bound(double mu, double nu, double delta);

// Leading-order shape of rect_bound for vanishing mu, nu: (mu*nu)^{1/(2-delta)}.
double rect_bound_asymptotic(double mu, double nu, double delta);

// a + b + (2 - delta) * c - (log_x + log_y) * n.  Negative values certify
// that total message lengths (a, b, c) are asymptotically infeasible for a
// source with uniform marginals on alphabets of the given log sizes.
double common_information_deficit(double log_x, double log_y, double delta, double n,
                                  double a, double b, double c);

// Product distribution on (X1 x X2) x (Y1 x Y2); index = i1 * |X2| + i2.
JointDistribution tensor(const JointDistribution& d1, const JointDistribution& d2,
                         std::size_t max_cells = std::size_t(1) << 22);

}  // namespace rectprof

#endif  // RECTPROF_HYPERCONTRACTIVITY_HPP
