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

#ifndef PRIVLEARN_BOUNDS_HPP_
#define PRIVLEARN_BOUNDS_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "privlearn/metrics.hpp"

namespace privlearn {

// Sample-size calculators for the generalization bounds. Logarithms are
// evaluated in floating point and the result is rounded up.

// n >= c * (d ln(1/alpha) + ln(1/beta)) / alpha
inline std::size_t realizable_sample_bound(std::size_t d,
                                           const AccuracyParams& acc,
                                           const BoundConstants& k = {}) {
  if (d < 1) throw std::invalid_argument("VC dimension must be >= 1");
  acc.validate();
  k.validate();
  const double alpha = to_double(acc.alpha);
  const double beta = to_double(acc.beta);
  const double raw = to_double(k.c_realizable) *
                     (static_cast<double>(d) * std::log(1.0 / alpha) +
                      std::log(1.0 / beta)) /
                     alpha;
  return static_cast<std::size_t>(std::ceil(raw));
}

// n >= c * (d + ln(1/beta)) / alpha^2
inline std::size_t agnostic_sample_bound(std::size_t d,
                                         const AccuracyParams& acc,
                                         const BoundConstants& k = {}) {
  if (d < 1) throw std::invalid_argument("VC dimension must be >= 1");
  acc.validate();
  k.validate();
  const double alpha = to_double(acc.alpha);
  const double beta = to_double(acc.beta);
  const double raw = to_double(k.c_agnostic) *
                     (static_cast<double>(d) + std::log(1.0 / beta)) /
                     (alpha * alpha);
  return static_cast<std::size_t>(std::ceil(raw));
}

// n * alpha >= d ln(e n / d) + ln(1/beta)
inline bool vc_tech_inequality_holds(std::size_t d, const AccuracyParams& acc,
                                     std::size_t n) {
  const double alpha = to_double(acc.alpha);
  const double beta = to_double(acc.beta);
  const double lhs = static_cast<double>(n) * alpha;
  const double rhs =
      static_cast<double>(d) *
          std::log(std::exp(1.0) * static_cast<double>(n) / static_cast<double>(d)) +
      std::log(1.0 / beta);
  return lhs >= rhs;
}

// Smallest prescribed n0 = ceil((2 d ln(2/alpha) + 2 ln(1/beta)) / alpha); the
// inequality above is guaranteed at n0 and is re-checked before returning.
inline std::size_t vc_tech_threshold(std::size_t d, const AccuracyParams& acc) {
  if (d < 1) throw std::invalid_argument("VC dimension must be >= 1");
  acc.validate();
  const double alpha = to_double(acc.alpha);
  const double beta = to_double(acc.beta);
  const double raw = (2.0 * static_cast<double>(d) * std::log(2.0 / alpha) +
                      2.0 * std::log(1.0 / beta)) /
                     alpha;
  const auto n0 = static_cast<std::size_t>(std::ceil(raw));
  if (!vc_tech_inequality_holds(d, acc, n0)) {
    throw std::logic_error("vc_tech inequality violated at its own threshold");
  }
  return n0;
}

}  // namespace privlearn

#endif  // PRIVLEARN_BOUNDS_HPP_
