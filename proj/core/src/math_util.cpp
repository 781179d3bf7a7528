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

#include "rectprof/math_util.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rectprof {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix64(state_); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // rejection sampling over the largest multiple of n
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1, u2;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + (index << 1));
  splitmix64(s);
  return splitmix64(s);
}

std::vector<std::uint32_t> sample_distinct(Rng& rng, std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("sample_distinct: k > n");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

unsigned ceil_log2(std::uint64_t k) {
  if (k <= 1) return 0;
  unsigned bits = 0;
  std::uint64_t v = k - 1;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(~std::uint64_t(0)))
      throw std::overflow_error("binomial_u64: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

double log2_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  const double ln2 = std::log(2.0);
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / ln2;
}

bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t n) {
  const std::size_t k = comb.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                              std::uint64_t rank) {
  std::vector<std::uint32_t> comb(k);
  std::uint32_t v = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    while (true) {
      // combinations starting with v at slot i
      double lg = log2_binomial(n - v - 1, k - i - 1);
      std::uint64_t cnt;
      if (lg > 62) {
        cnt = ~std::uint64_t(0);  // effectively infinite, never skip
      } else {
        cnt = binomial_u64(n - v - 1, k - i - 1);
      }
      if (rank < cnt) break;
      rank -= cnt;
      ++v;
    }
    comb[i] = v++;
  }
  return comb;
}

void parallel_chunks(std::uint64_t total, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
  if (threads <= 1 || total <= 1) {
    fn(0, total, 0);
    return;
  }
  if (threads > total) threads = static_cast<unsigned>(total);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rectprof
