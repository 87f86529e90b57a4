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

#ifndef PRIVLEARN_AUDIT_HPP_
#define PRIVLEARN_AUDIT_HPP_

#include <boost/math/distributions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "privlearn/data.hpp"
#include "privlearn/mechanisms.hpp"
#include "privlearn/random.hpp"

namespace privlearn {

// Exact (Clopper-Pearson) two-sided binomial interval at the given coverage.
inline std::pair<double, double> clopper_pearson(std::size_t successes,
                                                 std::size_t trials,
                                                 double confidence) {
  if (trials == 0 || successes > trials) {
    throw std::invalid_argument("invalid binomial counts");
  }
  if (confidence <= 0 || confidence >= 1) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  const double tail = (1.0 - confidence) / 2.0;
  const double k = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  double lo = 0.0, hi = 1.0;
  if (successes > 0) {
    lo = boost::math::quantile(boost::math::beta_distribution<>(k, n - k + 1),
                               tail);
  }
  if (successes < trials) {
    hi = boost::math::quantile(
        boost::math::beta_distribution<>(k + 1, n - k), 1.0 - tail);
  }
  return {lo, hi};
}

// A black-box mechanism under audit maps (dataset, stream) to a discrete
// event key; distinct keys partition the output space.
using AuditedMechanism =
    std::function<std::uint64_t(const Dataset&, RandomStream&)>;

struct AuditPlan {
  AuditedMechanism mechanism;
  Dataset s1;
  Dataset s2;  // neighboring to s1 (same length, at most one entry differs)
  std::size_t trials = 100000;
  double confidence = 0.95;

  void validate() const {
    if (!mechanism) throw std::invalid_argument("no mechanism to audit");
    if (s1.size() != s2.size()) {
      throw std::invalid_argument("neighboring datasets must have equal length");
    }
    std::size_t differing = 0;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      if (!(s1[i] == s2[i])) ++differing;
    }
    if (differing > 1) {
      throw std::invalid_argument("datasets differ in more than one entry");
    }
    if (trials < 1000) throw std::invalid_argument("need at least 1000 trials");
    if (confidence <= 0 || confidence >= 1) {
      throw std::invalid_argument("confidence must lie in (0, 1)");
    }
  }
};

struct EventStats {
  std::uint64_t key = 0;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
  double p1_lo = 0, p1_hi = 1;
  double p2_lo = 0, p2_hi = 1;
  // Certified lower bound on max(ln(p1/p2), ln(p2/p1)) for this event.
  double log_ratio_lower = 0;
};

struct AuditReport {
  double eps_hat = 0;        // certified lower bound on the privacy loss
  bool inconclusive = false; // no event was observed often enough to certify
  std::size_t trials = 0;
  double confidence = 0;
  std::vector<EventStats> events;
};

// Monte Carlo lower bound on epsilon under pure DP: run the mechanism on both
// datasets, take exact binomial intervals per event, and certify
// ln(lower(p_a) / upper(p_b)) in the worst direction. Never overshoots the
// true epsilon beyond the stated confidence.
inline AuditReport estimate_epsilon(const AuditPlan& plan, RandomStream& rng) {
  plan.validate();
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> counts;
  auto rng1 = rng.derive(1);
  auto rng2 = rng.derive(2);
  for (std::size_t t = 0; t < plan.trials; ++t) {
    auto trial_rng = rng1.derive(t);
    counts[plan.mechanism(plan.s1, trial_rng)].first++;
  }
  for (std::size_t t = 0; t < plan.trials; ++t) {
    auto trial_rng = rng2.derive(t);
    counts[plan.mechanism(plan.s2, trial_rng)].second++;
  }

  AuditReport report;
  report.trials = plan.trials;
  report.confidence = plan.confidence;
  bool any_certified = false;
  for (const auto& [key, c] : counts) {
    EventStats ev;
    ev.key = key;
    ev.count1 = c.first;
    ev.count2 = c.second;
    std::tie(ev.p1_lo, ev.p1_hi) =
        clopper_pearson(c.first, plan.trials, plan.confidence);
    std::tie(ev.p2_lo, ev.p2_hi) =
        clopper_pearson(c.second, plan.trials, plan.confidence);
    double ratio = 0.0;
    if (ev.p1_lo > 0 && ev.p2_hi > 0) {
      ratio = std::max(ratio, std::log(ev.p1_lo / ev.p2_hi));
    }
    if (ev.p2_lo > 0 && ev.p1_hi > 0) {
      ratio = std::max(ratio, std::log(ev.p2_lo / ev.p1_hi));
    }
    ev.log_ratio_lower = ratio;
    if (ev.p1_lo > 0 || ev.p2_lo > 0) any_certified = true;
    report.eps_hat = std::max(report.eps_hat, ratio);
    report.events.push_back(ev);
  }
  report.inconclusive = !any_certified;
  return report;
}

// Exact worst-direction log-probability ratio between two exponential
// mechanism instances. `alignment[i]` names the candidate of c2 matched with
// candidate i of c1; candidate sets of equal size default to the identity.
inline double analytic_em_ratio(const ScoredCandidates& c1,
                                const ScoredCandidates& c2, double eps,
                                const std::vector<std::size_t>& alignment) {
  if (alignment.size() != c1.scores.size()) {
    throw std::invalid_argument("alignment must cover every candidate of c1");
  }
  const std::vector<double> p1 = em_selection_probabilities(c1, eps);
  const std::vector<double> p2 = em_selection_probabilities(c2, eps);
  double worst = 0.0;
  for (std::size_t i = 0; i < alignment.size(); ++i) {
    if (alignment[i] >= p2.size()) {
      throw std::invalid_argument("alignment index out of range");
    }
    const double ratio = std::log(p1[i]) - std::log(p2[alignment[i]]);
    worst = std::max(worst, std::abs(ratio));
  }
  return worst;
}

inline double analytic_em_ratio(const ScoredCandidates& c1,
                                const ScoredCandidates& c2, double eps) {
  if (c1.scores.size() != c2.scores.size()) {
    throw std::invalid_argument(
        "candidate sets of different sizes need an explicit alignment");
  }
  std::vector<std::size_t> identity(c1.scores.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return analytic_em_ratio(c1, c2, eps, identity);
}

}  // namespace privlearn

#endif  // PRIVLEARN_AUDIT_HPP_
