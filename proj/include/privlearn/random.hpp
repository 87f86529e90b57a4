// Copyright 2026 The privlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVLEARN_RANDOM_HPP_
#define PRIVLEARN_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "privlearn/rational.hpp"

namespace privlearn {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Seeded, splittable stream of random draws. Identical (seed, stream_id, call
// sequence) yields identical draws; derive() hands disjoint substreams to
// subroutines and trials so runs are replayable and order-independent.
//
// All draws are produced from raw 64-bit engine output (rejection sampling
// for bounded integers, 53-bit mantissa for reals) rather than
// std::*_distribution, whose output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed),
        stream_id_(stream_id),
        engine_(detail::splitmix64(detail::splitmix64(seed) ^ stream_id)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Independent substream; child ids need only be distinct per parent.
  RandomStream derive(std::uint64_t child_id) const {
    return RandomStream(
        seed_, detail::splitmix64(stream_id_ * 0x9e3779b97f4a7c15ULL + 1) ^
                   detail::splitmix64(child_id + 0x2545f4914f6cdd1dULL));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, n), unbiased via rejection.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be >= 1");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x < limit) return static_cast<std::size_t>(x % bound);
    }
  }

  // Uniform in [0, 1).
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard Gumbel deviate, -log(-log(U)) with U strictly inside (0, 1).
  double gumbel() {
    const double u =
        (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    return -std::log(-std::log(u));
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  // Exact Bernoulli(p) for rational p in [0, 1].
  bool bernoulli(const Rational& p) {
    if (p.numerator() < 0 || p.numerator() > p.denominator()) {
      throw std::invalid_argument("bernoulli: p outside [0, 1]");
    }
    return static_cast<long long>(uniform_index(
               static_cast<std::size_t>(p.denominator()))) < p.numerator();
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace privlearn

#endif  // PRIVLEARN_RANDOM_HPP_
