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

#ifndef PRIVLEARN_SYNTH_HPP_
#define PRIVLEARN_SYNTH_HPP_

#include <numeric>
#include <stdexcept>
#include <vector>

#include "privlearn/data.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/random.hpp"

namespace privlearn {

// Uniform marginal over [0, N); p1(x) = 1 - eta for x >= t_star, else eta.
// The best threshold is t_star with error exactly eta.
inline DistributionSpec gen_noisy_threshold(int domain_size, int t_star,
                                            const Rational& eta) {
  if (domain_size < 2) throw std::invalid_argument("domain size must be >= 2");
  if (t_star < 0 || t_star > domain_size) {
    throw std::invalid_argument("t_star must lie in [0, N]");
  }
  if (eta < Rational(0) || eta >= Rational(1, 2)) {
    throw std::invalid_argument("noise rate must lie in [0, 1/2)");
  }
  DistributionSpec d;
  d.marginal.assign(static_cast<std::size_t>(domain_size),
                    Rational(1, domain_size));
  d.p1.resize(static_cast<std::size_t>(domain_size));
  for (int x = 0; x < domain_size; ++x) {
    d.p1[static_cast<std::size_t>(x)] =
        x >= t_star ? Rational(1) - eta : eta;
  }
  return d;
}

// Uniform marginal; p1(x) = 1 - eta inside [a, b), else eta.
inline DistributionSpec gen_noisy_interval(int domain_size, int a, int b,
                                           const Rational& eta) {
  if (domain_size < 2) throw std::invalid_argument("domain size must be >= 2");
  if (a < 0 || b < a || b > domain_size) {
    throw std::invalid_argument("interval must satisfy 0 <= a <= b <= N");
  }
  if (eta < Rational(0) || eta >= Rational(1, 2)) {
    throw std::invalid_argument("noise rate must lie in [0, 1/2)");
  }
  DistributionSpec d;
  d.marginal.assign(static_cast<std::size_t>(domain_size),
                    Rational(1, domain_size));
  d.p1.resize(static_cast<std::size_t>(domain_size));
  for (int x = 0; x < domain_size; ++x) {
    d.p1[static_cast<std::size_t>(x)] =
        (a <= x && x < b) ? Rational(1) - eta : eta;
  }
  return d;
}

// Uniform marginal with p1 = 1/2 everywhere: every hypothesis errs 1/2.
inline DistributionSpec gen_uniform_random_labels(int domain_size) {
  if (domain_size < 2) throw std::invalid_argument("domain size must be >= 2");
  DistributionSpec d;
  d.marginal.assign(static_cast<std::size_t>(domain_size),
                    Rational(1, domain_size));
  d.p1.assign(static_cast<std::size_t>(domain_size), Rational(1, 2));
  return d;
}

// n i.i.d. draws from the distribution, sampled exactly: the marginal is
// inverted over a common integer denominator, labels via exact Bernoulli.
inline Dataset sample_dataset(const DistributionSpec& d, std::size_t n,
                              RandomStream& rng) {
  d.validate();
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  long long lcm = 1;
  for (const auto& m : d.marginal) {
    lcm = std::lcm(lcm, m.denominator());
  }
  std::vector<long long> cumulative(d.marginal.size());
  long long acc = 0;
  for (std::size_t i = 0; i < d.marginal.size(); ++i) {
    acc += d.marginal[i].numerator() * (lcm / d.marginal[i].denominator());
    cumulative[i] = acc;
  }
  Dataset out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long u =
        static_cast<long long>(rng.uniform_index(static_cast<std::size_t>(lcm)));
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const int x = static_cast<int>(it - cumulative.begin());
    const int y = rng.bernoulli(d.p1[static_cast<std::size_t>(x)]) ? 1 : 0;
    out.push_back({x, y});
  }
  return out;
}

}  // namespace privlearn

#endif  // PRIVLEARN_SYNTH_HPP_
