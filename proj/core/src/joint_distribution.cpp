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

#include "rectprof/joint_distribution.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace rectprof {

namespace {

constexpr double kMassTolerance = 1e-9;

// Union-find over the support cells to detect a disconnected support graph.
bool support_disconnected(std::size_t nx, std::size_t ny, const std::vector<double>& probs) {
  std::vector<std::uint32_t> parent(nx + ny);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (probs[x * ny + y] > 0) unite(static_cast<std::uint32_t>(x),
                                       static_cast<std::uint32_t>(nx + y));
  const std::uint32_t root = find(0);
  for (std::uint32_t v = 1; v < nx + ny; ++v)
    if (find(v) != root) return true;
  return false;
}

}  // namespace

JointDistribution::JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> probs)
    : nx_(nx), ny_(ny), probs_(std::move(probs)) {
  if (nx_ == 0 || ny_ == 0) throw std::invalid_argument("JointDistribution: empty alphabet");
  if (probs_.size() != nx_ * ny_)
    throw std::invalid_argument("JointDistribution: probs size mismatch");

  double total = 0;
  for (double p : probs_) {
    if (p < 0) throw std::invalid_argument("JointDistribution: negative entry");
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw std::invalid_argument("JointDistribution: entries sum to " + std::to_string(total) +
                                ", expected 1 within 1e-9");

  marginal_x_.assign(nx_, 0.0);
  marginal_y_.assign(ny_, 0.0);
  for (std::size_t x = 0; x < nx_; ++x)
    for (std::size_t y = 0; y < ny_; ++y) {
      marginal_x_[x] += probs_[x * ny_ + y];
      marginal_y_[y] += probs_[x * ny_ + y];
    }
  for (std::size_t x = 0; x < nx_; ++x)
    if (marginal_x_[x] <= 0)
      throw std::invalid_argument("JointDistribution: row " + std::to_string(x) +
                                  " has zero marginal");
  for (std::size_t y = 0; y < ny_; ++y)
    if (marginal_y_[y] <= 0)
      throw std::invalid_argument("JointDistribution: column " + std::to_string(y) +
                                  " has zero marginal");

  degenerate_ = support_disconnected(nx_, ny_, probs_);
}

bool degenerate_check(const JointDistribution& d) { return d.is_degenerate(); }

JointDistribution load_distribution(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("distribution parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array())
    throw std::runtime_error("distribution parse error: expected object with \"probs\" rows");
  const auto& rows = j["probs"];
  const std::size_t nx = rows.size();
  if (nx == 0) throw std::runtime_error("distribution parse error: no rows");
  const std::size_t ny = rows[0].size();
  std::vector<double> probs;
  probs.reserve(nx * ny);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != ny)
      throw std::runtime_error("distribution parse error: ragged rows");
    for (const auto& v : row) probs.push_back(v.get<double>());
  }
  return JointDistribution(nx, ny, std::move(probs));
}

JointDistribution load_distribution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution file: " + path);
  return load_distribution(in);
}

JointDistribution bsc_distribution(double eps) {
  if (eps < 0 || eps > 1) throw std::invalid_argument("bsc_distribution: eps outside [0, 1]");
  const double same = (1 - eps) / 2, diff = eps / 2;
  return JointDistribution(2, 2, {same, diff, diff, same});
}

JointDistribution bsc_distribution_power(int n, double eps) {
  if (n < 1 || n > 12) throw std::invalid_argument("bsc_distribution_power: n outside [1, 12]");
  if (eps < 0 || eps > 1) throw std::invalid_argument("bsc_distribution_power: eps outside [0, 1]");
  const std::size_t size = std::size_t(1) << n;
  std::vector<double> probs(size * size);
  const double scale = std::pow(0.5, n);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      const int d = std::popcount(x ^ y);
      probs[x * size + y] = scale * std::pow(eps, d) * std::pow(1 - eps, n - d);
    }
  return JointDistribution(size, size, std::move(probs));
}

JointDistribution distribution_from_spec(const std::string& spec) {
  if (spec.rfind("bsc:", 0) == 0) {
    std::string body = spec.substr(4);
    int n = 1;
    const auto comma = body.find(",n=");
    if (comma != std::string::npos) {
      n = std::stoi(body.substr(comma + 3));
      body = body.substr(0, comma);
    }
    const double eps = std::stod(body);
    return n == 1 ? bsc_distribution(eps) : bsc_distribution_power(n, eps);
  }
  return load_distribution_file(spec);
}

}  // namespace rectprof
