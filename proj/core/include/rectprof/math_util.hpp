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

#ifndef RECTPROF_MATH_UTIL_HPP
#define RECTPROF_MATH_UTIL_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace rectprof {

// Small deterministic PRNG (splitmix64). Every randomized routine in the
// library takes an explicit seed and derives its stream from it, so results
// are reproducible across platforms and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, n) without modulo bias.
  std::uint64_t below(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives an independent stream seed from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Fisher-Yates prefix: k distinct values from [0, n), order random.
std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k);

// Number of bits needed to index k items: ceil(log2(k)) for k >= 2, else 0.
unsigned ceil_log2(std::uint64_t k);

// Exact binomial coefficient; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(unsigned n, unsigned k);

// log2 of C(n, k) via lgamma, usable far beyond 64-bit range.
double log2_binomial(double n, double k);

// Advances `comb` (strictly increasing indices into [0, n)) to the next
// combination in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t n);

// Combination of size k over [0, n) with the given lexicographic rank.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                              std::uint64_t rank);

// Runs fn(begin, end, thread_index) over [0, total) split into `threads`
// contiguous chunks. threads <= 1 runs inline.
void parallel_chunks(std::uint64_t total, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn);

}  // namespace rectprof

#endif  // RECTPROF_MATH_UTIL_HPP
