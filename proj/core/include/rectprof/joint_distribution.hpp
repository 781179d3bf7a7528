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

#ifndef RECTPROF_JOINT_DISTRIBUTION_HPP
#define RECTPROF_JOINT_DISTRIBUTION_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rectprof {

// Probability matrix over X x Y with full-support marginals.
//
// Construction enforces: nonnegative entries, total mass 1 within 1e-9, and
// no zero marginal row or column (such rows/columns would let X or Y be
// reduced, so they are rejected at load time). A distribution whose support
// graph is disconnected is loadable but flagged degenerate.
class JointDistribution {
 public:
  // probs is row-major |X| x |Y|.
  JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> probs);

  std::size_t left_size() const { return nx_; }
  std::size_t right_size() const { return ny_; }
  double prob(std::size_t x, std::size_t y) const { return probs_[x * ny_ + y]; }
  const std::vector<double>& probs() const { return probs_; }
  std::span<const double> marginal_x() const { return marginal_x_; }
  std::span<const double> marginal_y() const { return marginal_y_; }

  // True iff the support, viewed as a bipartite graph, is disconnected.
  bool is_degenerate() const { return degenerate_; }

 private:
  std::size_t nx_;
  std::size_t ny_;
  std::vector<double> probs_;
  std::vector<double> marginal_x_;
  std::vector<double> marginal_y_;
  bool degenerate_;
};

// True iff the support graph of D has two or more connected components.
bool degenerate_check(const JointDistribution& d);

// JSON input with field "probs" = array of rows of numbers.
JointDistribution load_distribution(std::istream& in);
JointDistribution load_distribution_file(const std::string& path);

// Symmetric binary channel coupling on one bit: x uniform, y = x flipped
// with probability eps. probs = [[ (1-e)/2, e/2 ], [ e/2, (1-e)/2 ]].
JointDistribution bsc_distribution(double eps);

// n-fold product of bsc_distribution(eps); indices are n-bit strings.
JointDistribution bsc_distribution_power(int n, double eps);

// Resolves "bsc:<eps>" / "bsc:<eps>,n=<k>" / path to a JSON file.
JointDistribution distribution_from_spec(const std::string& spec);

}  // namespace rectprof

#endif  // RECTPROF_JOINT_DISTRIBUTION_HPP
