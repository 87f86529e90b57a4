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

#ifndef PRIVLEARN_MECHANISMS_HPP_
#define PRIVLEARN_MECHANISMS_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/random.hpp"

namespace privlearn {

struct PrivacyParams {
  Rational epsilon{1};
  Rational delta{0};

  void validate() const {
    if (epsilon <= Rational(0)) throw std::invalid_argument("epsilon must be > 0");
    if (delta < Rational(0) || delta >= Rational(1)) {
      throw std::invalid_argument("delta must lie in [0, 1)");
    }
  }
};

// Scores to select over (lower is better) plus the score sensitivity.
struct ScoredCandidates {
  std::vector<Rational> scores;
  Rational sensitivity{1};

  void validate() const {
    if (scores.empty()) throw std::invalid_argument("no candidates to select from");
    if (sensitivity <= Rational(0)) {
      throw std::invalid_argument("sensitivity must be > 0");
    }
  }
};

// Exact selection probabilities exp(-eps q_i / 2 Delta) / sum, computed with
// a max shift. Used by tests and the analytic privacy checks.
inline std::vector<double> em_selection_probabilities(
    const ScoredCandidates& cands, double eps) {
  cands.validate();
  if (eps <= 0) throw std::invalid_argument("epsilon must be > 0");
  const double delta_sens = to_double(cands.sensitivity);
  std::vector<double> logw(cands.scores.size());
  double max_logw = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cands.scores.size(); ++i) {
    logw[i] = -eps * to_double(cands.scores[i]) / (2.0 * delta_sens);
    max_logw = std::max(max_logw, logw[i]);
  }
  double total = 0.0;
  std::vector<double> probs(logw.size());
  for (std::size_t i = 0; i < logw.size(); ++i) {
    probs[i] = std::exp(logw[i] - max_logw);
    total += probs[i];
  }
  for (auto& p : probs) p /= total;
  return probs;
}

// Draws an index with probability proportional to exp(-eps q_i / 2 Delta).
// Sampled as argmax of log-weight plus independent Gumbel noise, which avoids
// underflow for strongly separated scores.
inline std::size_t exponential_mechanism(const ScoredCandidates& cands,
                                         double eps, RandomStream& rng) {
  cands.validate();
  if (eps <= 0) throw std::invalid_argument("epsilon must be > 0");
  const double delta_sens = to_double(cands.sensitivity);
  std::size_t best = 0;
  double best_key = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cands.scores.size(); ++i) {
    const double key =
        -eps * to_double(cands.scores[i]) / (2.0 * delta_sens) + rng.gumbel();
    if (key > best_key) {
      best_key = key;
      best = i;
    }
  }
  return best;
}

// (2 Delta / eps) ln(|H| / beta): the score gap the mechanism stays within
// with probability 1 - beta.
inline double em_utility_gap(std::size_t num_candidates, double delta_sens,
                             double eps, double beta) {
  if (num_candidates < 1 || delta_sens <= 0 || eps <= 0 || beta <= 0 ||
      beta > 1) {
    throw std::invalid_argument("invalid utility gap parameters");
  }
  return (2.0 * delta_sens / eps) *
         std::log(static_cast<double>(num_candidates) / beta);
}

// A randomized learning procedure: dataset in, hypothesis out. `proper` means
// every output carries a concept tag from the class.
struct Learner {
  std::function<Hypothesis(const Dataset&, RandomStream&)> run;
  bool proper = false;
};

// A learner wrapped for low empirical error on its own input, via resampling.
struct EmpiricalLearner {
  Learner learner;              // consumes input_size examples
  std::size_t base_sample_size; // m fed to the wrapped base learner
  std::size_t input_size;       // n = ceil(6 eps m)
  double eps_prime;             // 6 eps m / n, the amplified epsilon (<= 1)
  double delta_factor;          // exp(eps_prime) * 4m/n, multiplies base delta
};

// Wraps an (eps, delta)-DP base PAC learner taking m examples into a
// (1, delta_factor * delta)-DP empirical learner taking n = ceil(6 eps m)
// examples: resample m points uniformly with replacement, run the base.
inline EmpiricalLearner amplify_to_empirical(const Learner& base,
                                             const Rational& eps,
                                             std::size_t m) {
  if (eps <= Rational(0) || eps > Rational(1)) {
    throw std::invalid_argument("amplification requires 0 < eps <= 1");
  }
  if (m < 1) throw std::invalid_argument("base sample size must be >= 1");
  const long long num = 6 * eps.numerator() * static_cast<long long>(m);
  const long long den = eps.denominator();
  const long long n = (num + den - 1) / den;  // ceil(6 eps m)
  if (n < 2) {
    throw std::invalid_argument(
        "amplified input size ceil(6 eps m) must be >= 2");
  }
  EmpiricalLearner out;
  out.base_sample_size = m;
  out.input_size = static_cast<std::size_t>(n);
  out.eps_prime = 6.0 * to_double(eps) * static_cast<double>(m) /
                  static_cast<double>(n);
  out.delta_factor = std::exp(out.eps_prime) * 4.0 * static_cast<double>(m) /
                     static_cast<double>(n);
  out.learner.proper = base.proper;
  out.learner.run = [base_run = base.run, m](const Dataset& s,
                                             RandomStream& rng) {
    Dataset resampled = resample_with_replacement(s, m, rng.derive(0));
    auto base_rng = rng.derive(1);
    return base_run(resampled, base_rng);
  };
  return out;
}

// Stock proper (eps, 0)-DP empirical learner: exponential mechanism over the
// dichotomies of S_X scored by empirical error, sensitivity 1/|S|.
inline Learner em_private_empirical_learner(const ConceptClassDescriptor& desc,
                                            const Rational& eps) {
  desc.validate();
  if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be > 0");
  Learner learner;
  learner.proper = true;
  learner.run = [desc, eps](const Dataset& s, RandomStream& rng) {
    if (s.empty()) throw std::invalid_argument("learner needs at least one example");
    const CandidateSet cands = dichotomies(desc, points_of(s));
    ScoredCandidates scored;
    scored.sensitivity = Rational(1, static_cast<long long>(s.size()));
    scored.scores.reserve(cands.size());
    for (const auto& rep : cands.representatives) {
      scored.scores.push_back(empirical_error(rep, s));
    }
    const std::size_t pick = exponential_mechanism(scored, to_double(eps), rng);
    return to_hypothesis(cands.representatives[pick], desc.domain_size);
  };
  return learner;
}

// Non-private exhaustive ERM baseline: canonical minimizer of empirical error.
inline Learner erm_baseline_learner(const ConceptClassDescriptor& desc) {
  desc.validate();
  Learner learner;
  learner.proper = true;
  learner.run = [desc](const Dataset& s, RandomStream&) {
    if (s.empty()) throw std::invalid_argument("learner needs at least one example");
    WeightedInstance inst;
    inst.reserve(s.size());
    for (const auto& e : s) inst.push_back({e.x, e.y, Rational(1)});
    return to_hypothesis(weighted_erm(desc, inst).first, desc.domain_size);
  };
  return learner;
}

}  // namespace privlearn

#endif  // PRIVLEARN_MECHANISMS_HPP_
