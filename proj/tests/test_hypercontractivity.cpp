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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rectprof/hypercontractivity.hpp"
#include "rectprof/joint_distribution.hpp"
#include "support/oracles.hpp"

using namespace rectprof;

namespace {

JointDistribution identity_coupling() { return JointDistribution(2, 2, {0.5, 0, 0, 0.5}); }

JointDistribution product_uniform() { return JointDistribution(2, 2, {0.25, 0.25, 0.25, 0.25}); }

WeightedFunction on_y(const JointDistribution& d, std::vector<double> values) {
  return {std::move(values), {d.marginal_y().begin(), d.marginal_y().end()}};
}

}  // namespace

TEST_CASE("conditional expectation operator on the documented cases") {
  SUBCASE("identity coupling acts as the identity") {
    const auto d = identity_coupling();
    const auto tf = apply_operator(d, on_y(d, {0.3, -1.7}));
    CHECK(tf.values[0] == doctest::Approx(0.3));
    CHECK(tf.values[1] == doctest::Approx(-1.7));
  }
  SUBCASE("product distributions give the mean") {
    const auto d = product_uniform();
    const auto tf = apply_operator(d, on_y(d, {1.0, 3.0}));
    CHECK(tf.values[0] == doctest::Approx(2.0));
    CHECK(tf.values[1] == doctest::Approx(2.0));
  }
  SUBCASE("one-bit coupling shrinks the odd part by 1 - 2 eps") {
    const auto d = bsc_distribution(0.1);
    const auto tf = apply_operator(d, on_y(d, {1.0, -1.0}));
    CHECK(tf.values[0] == doctest::Approx(0.8));
    CHECK(tf.values[1] == doctest::Approx(-0.8));
  }
  SUBCASE("dimension mismatch is rejected") {
    const auto d = bsc_distribution(0.1);
    CHECK_THROWS_AS(apply_operator(d, on_y(d, {1.0, 2.0, 3.0})), std::invalid_argument);
  }
}

TEST_CASE("norms under a measure") {
  const auto d = product_uniform();
  CHECK(lp_norm(on_y(d, {-3.0, -3.0}), 1.7) == doctest::Approx(3.0));
  CHECK(lp_norm(on_y(d, {1.0, -1.0}), 2.0) == doctest::Approx(1.0));
  CHECK(lp_norm(on_y(d, {1.0, 0.0}), 2.0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(lp_norm(on_y(d, {5.0, -7.0}), std::numeric_limits<double>::infinity()) ==
        doctest::Approx(7.0));
  CHECK_THROWS_AS(lp_norm(on_y(d, {1.0, 1.0}), 0.5), std::invalid_argument);

  SUBCASE("indicator of measure mu has norm mu^(1/p)") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const auto dist = testing::random_distribution(rng, 3, 4);
      const double p = 1.0 + 3 * rng.uniform();
      std::vector<double> ind(4, 0.0);
      double mu = 0;
      for (std::size_t y = 0; y < 4; ++y)
        if (rng.uniform() < 0.5) {
          ind[y] = 1.0;
          mu += dist.marginal_y()[y];
        }
      if (mu == 0) continue;
      CHECK(lp_norm(on_y(dist, ind), p) == doctest::Approx(std::pow(mu, 1.0 / p)));
    }
  }

  SUBCASE("norms are nondecreasing in p, strictly unless constant") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
      const auto dist = testing::random_distribution(rng, 3, 3);
      std::vector<double> f(3);
      for (auto& v : f) v = rng.normal();
      const double p = 1.0 + 2 * rng.uniform();
      const double q = p + 2 * rng.uniform() + 1e-3;
      CHECK(lp_norm(on_y(dist, f), p) <= lp_norm(on_y(dist, f), q) + 1e-12);
    }
  }
}

TEST_CASE("the operator contracts every L_p norm") {
  CHECK(contraction_check(bsc_distribution(0.3), 2.0, 1000, 1));
  CHECK(contraction_check(product_uniform(), 1.0, 1000, 2));
  CHECK(contraction_check(identity_coupling(), 3.0, 1000, 3));
  Rng rng(77);
  for (int t = 0; t < 5; ++t)
    CHECK(contraction_check(testing::random_distribution(rng, 4, 3), 1 + 3 * rng.uniform(),
                            300, t));
}

TEST_CASE("norm inequality decisions at a fixed delta") {
  SUBCASE("one-bit coupling holds below twice the flip probability") {
    const DeltaCheck c = holds_at_delta(bsc_distribution(0.1), 0.19);
    CHECK(c.holds);
  }
  SUBCASE("identity coupling is refuted at any positive delta") {
    const DeltaCheck c = holds_at_delta(identity_coupling(), 0.01);
    REQUIRE_FALSE(c.holds);
    REQUIRE(c.witness.has_value());
    CHECK(norm_gap(identity_coupling(), *c.witness, 0.01) > 0);
  }
  SUBCASE("product distributions survive the endpoint") {
    CHECK(holds_at_delta(product_uniform(), 1.0).holds);
  }
}

TEST_CASE("bracketed estimates of the contraction parameter") {
  SUBCASE("product uniform reaches the endpoint") {
    const DeltaEstimate e = delta_estimate(product_uniform(), 1e-3);
    CHECK(e.lower >= 1.0 - 1e-3);
    CHECK(e.upper == 1.0);
  }
  SUBCASE("identity coupling collapses to zero") {
    const DeltaEstimate e = delta_estimate(identity_coupling(), 1e-3);
    CHECK(e.upper <= 1e-3);
    CHECK(e.lower == 0.0);
  }
  SUBCASE("one-bit coupling brackets twice the flip probability") {
    const DeltaEstimate e = delta_estimate(bsc_distribution(0.25), 1e-3);
    CHECK(e.lower >= 0.5 - 1e-3);
    CHECK(e.upper >= 0.5 - 2e-3);
    CHECK(e.upper <= 0.5 + 5e-3);
  }
  SUBCASE("witness violates at upper and beyond (monotone in delta)") {
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
      const auto d = testing::random_distribution(rng, 3, 3);
      const DeltaEstimate e = delta_estimate(d, 1e-3);
      if (e.witness) {
        CHECK(norm_gap(d, *e.witness, e.upper) > 0);
        CHECK(norm_gap(d, *e.witness, std::min(1.0, e.upper + e.tolerance)) > 0);
      }
      // re-probing the lower end never refutes
      CHECK(holds_at_delta(d, e.lower).holds);
    }
  }
}

TEST_CASE("estimates are deterministic for a fixed seed across thread counts") {
  Rng rng(404);
  for (int t = 0; t < 3; ++t) {
    const auto d = testing::random_distribution(rng, 4, 4);
    OptimizerConfig one, four;
    four.threads = 4;
    const DeltaEstimate a = delta_estimate(d, 1e-3, one);
    const DeltaEstimate b = delta_estimate(d, 1e-3, four);
    const DeltaEstimate c = delta_estimate(d, 1e-3, one);  // repeat run
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.lower == c.lower);
    CHECK(a.upper == c.upper);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) CHECK(*a.witness == *b.witness);
  }
}

TEST_CASE("contraction violations would surface their counterexample") {
  // the inequality is a theorem, so no counterexample can appear; the
  // out-parameter must stay untouched on success
  std::vector<double> counterexample{42.0};
  CHECK(contraction_check(bsc_distribution(0.2), 2.5, 500, 9, &counterexample));
  CHECK(counterexample == std::vector<double>{42.0});
}

TEST_CASE("positive parameter exactly for connected supports") {
  Rng rng(123);
  for (int t = 0; t < 10; ++t) {
    const auto d = testing::random_distribution(rng, 3 + t % 2, 3 + t % 2);
    CHECK(delta_estimate(d, 1e-3).lower > 0);
  }
  for (int t = 0; t < 4; ++t) {
    const auto d = testing::degenerate_distribution(rng, 3 + t % 2, 4 - t % 2);
    const DeltaEstimate e = delta_estimate(d, 1e-3);
    CHECK(e.upper <= 1e-3);
  }
}

TEST_CASE("tensor products do not drop below the weaker factor") {
  Rng rng(2718);
  for (int t = 0; t < 6; ++t) {
    const auto d1 = testing::random_distribution(rng, 2 + t % 2, 2 + t % 2);
    const auto d2 = testing::random_distribution(rng, 2, 2);
    const double lo1 = delta_estimate(d1, 1e-3).lower;
    const double lo2 = delta_estimate(d2, 1e-3).lower;
    const DeltaEstimate te = delta_estimate(tensor(d1, d2), 1e-3);
    CHECK(te.upper >= std::min(lo1, lo2) - 2e-3);
  }
}

TEST_CASE("rectangle probability bound formula") {
  CHECK(rect_bound(0.5, 0.5, 0.0) == doctest::Approx(0.5));
  CHECK(rect_bound(0.0, 0.7, 0.3) == doctest::Approx(0.0));
  CHECK(rect_bound(0.5, 0.5, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(rect_bound(-0.1, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(rect_bound(0.5, 0.5, 1.5), std::invalid_argument);

  SUBCASE("asymptotic shape") {
    CHECK(rect_bound_asymptotic(0.125, 0.125, 0.0) == doctest::Approx(0.125));
    CHECK(rect_bound_asymptotic(0.3, 0.2, 1.0) == doctest::Approx(0.06));
    CHECK(rect_bound_asymptotic(0.25, 0.25, 0.5) ==
          doctest::Approx(std::pow(1.0 / 16, 2.0 / 3)));  // ~0.15749
  }
}

TEST_CASE("bound holds for every subset pair at the certified lower end") {
  Rng rng(31415);
  for (int t = 0; t < 6; ++t) {
    const std::size_t nx = 2 + rng.below(3), ny = 2 + rng.below(3);
    const auto d = testing::random_distribution(rng, nx, ny);
    const double lo = delta_estimate(d, 1e-3).lower;
    for (std::uint32_t ma = 1; ma < (1u << nx); ++ma)
      for (std::uint32_t mb = 1; mb < (1u << ny); ++mb) {
        double mu = 0, nu = 0, pr = 0;
        for (std::size_t x = 0; x < nx; ++x)
          if ((ma >> x) & 1) mu += d.marginal_x()[x];
        for (std::size_t y = 0; y < ny; ++y)
          if ((mb >> y) & 1) nu += d.marginal_y()[y];
        for (std::size_t x = 0; x < nx; ++x)
          for (std::size_t y = 0; y < ny; ++y)
            if (((ma >> x) & 1) && ((mb >> y) & 1)) pr += d.prob(x, y);
        CHECK(pr <= rect_bound(std::min(mu, 1.0), std::min(nu, 1.0), lo) + 1e-9);
      }
  }
}

TEST_CASE("centered indicator norms match the closed form") {
  Rng rng(999);
  for (int t = 0; t < 8; ++t) {
    const auto d = testing::random_distribution(rng, 4, 4);
    const double delta = rng.uniform() * 0.9;
    const double p = 2.0 - delta;
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      double mu = 0;
      std::vector<double> f(4);
      for (std::size_t x = 0; x < 4; ++x)
        if ((mask >> x) & 1) mu += d.marginal_x()[x];
      mu = std::min(mu, 1.0);  // full-subset rounding can land at 1 + eps
      for (std::size_t x = 0; x < 4; ++x) f[x] = (((mask >> x) & 1) ? 1.0 : 0.0) - mu;
      const WeightedFunction wf{f, {d.marginal_x().begin(), d.marginal_x().end()}};
      const double closed =
          std::pow(mu * std::pow(1 - mu, p) + std::pow(mu, p) * (1 - mu), 1.0 / p);
      CHECK(lp_norm(wf, p) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("three-message deficit") {
  // boundary: a = b = 0, c = n (log|X| + log|Y|) / (2 - delta)
  const double c = 4 * (1.0 + 1.0) / (2.0 - 0.3);
  CHECK(common_information_deficit(1, 1, 0.3, 4, 0, 0, c) == doctest::Approx(0.0));
  // delta = 0 reduces to a + b + 2c >= n (log|X| + log|Y|)
  CHECK(common_information_deficit(1, 1, 0.0, 2, 1, 1, 1) == doctest::Approx(-0.0).epsilon(1e-12));
  // uniform one-bit pair at delta = 2 eps: the zero is at c = n / (1 - eps)
  const double eps = 0.2, n = 10;
  const double c0 = 2 * n / (2 - 2 * eps);
  CHECK(c0 == doctest::Approx(n / (1 - eps)));
  CHECK(common_information_deficit(1, 1, 2 * eps, n, 0, 0, c0) == doctest::Approx(0.0));
  CHECK(common_information_deficit(1, 1, 2 * eps, n, 0, 0, c0 - 1) < 0);
}

TEST_CASE("tensor construction") {
  const auto t = tensor(bsc_distribution(0.15), bsc_distribution(0.15));
  const auto ref = bsc_distribution_power(2, 0.15);
  REQUIRE(t.left_size() == 4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      CHECK(t.prob(x, y) == doctest::Approx(ref.prob(x, y)).epsilon(1e-12));

  SUBCASE("marginals of the tensor are tensors of the marginals") {
    Rng rng(1);
    const auto a = testing::random_distribution(rng, 2, 3);
    const auto b = testing::random_distribution(rng, 3, 2);
    const auto tp = tensor(a, b);
    for (std::size_t x1 = 0; x1 < 2; ++x1)
      for (std::size_t x2 = 0; x2 < 3; ++x2)
        CHECK(tp.marginal_x()[x1 * 3 + x2] ==
              doctest::Approx(a.marginal_x()[x1] * b.marginal_x()[x2]));
  }

  SUBCASE("point-mass factor changes nothing") {
    const auto point = JointDistribution(1, 1, {1.0});
    const auto d = bsc_distribution(0.3);
    const auto tp = tensor(d, point);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) CHECK(tp.prob(x, y) == doctest::Approx(d.prob(x, y)));
  }

  SUBCASE("size limit") {
    const auto d = bsc_distribution_power(4, 0.2);  // 16 x 16
    CHECK_THROWS_AS(tensor(d, d, 1000), std::invalid_argument);
  }
}
