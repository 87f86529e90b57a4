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

#ifndef PRIVLEARN_PREDICTION_HPP_
#define PRIVLEARN_PREDICTION_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "privlearn/bounds.hpp"
#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/mechanisms.hpp"
#include "privlearn/random.hpp"
#include "privlearn/transform.hpp"

namespace privlearn {

// Raised when a chunk of the input admits no consistent concept.
struct not_realizable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// r = ceil(6 ln(4/alpha) / eps) ensemble members.
inline std::size_t predictor_instance_count(double eps, double alpha) {
  if (eps <= 0 || alpha <= 0 || alpha >= 1) {
    throw std::invalid_argument("need eps > 0 and alpha in (0, 1)");
  }
  return static_cast<std::size_t>(std::ceil(6.0 * std::log(4.0 / alpha) / eps));
}

// An ensemble of concepts trained on disjoint chunks; queries are answered by
// a binary exponential mechanism over the vote counts (sensitivity 1), which
// is eps-DP per query since one changed example touches at most one member.
struct PredictorState {
  std::vector<Concept> hypotheses;
  Rational eps_per_query{1};
  int domain_size = 2;

  std::size_t instance_count() const { return hypotheses.size(); }
};

// Splits S into r contiguous disjoint chunks of size floor(|S|/r) (remainder
// discarded) and fits the canonical consistent concept on each.
inline PredictorState fit_realizable_predictor(
    const ConceptClassDescriptor& desc, const Dataset& s, const Rational& eps,
    const Rational& alpha, RandomStream& /*rng*/) {
  desc.validate();
  validate_dataset(s, desc.domain_size);
  const std::size_t r =
      predictor_instance_count(to_double(eps), to_double(alpha));
  if (s.size() < r) {
    throw std::invalid_argument("need at least r = " + std::to_string(r) +
                                " examples, got " + std::to_string(s.size()));
  }
  const std::size_t chunk = s.size() / r;
  PredictorState state;
  state.eps_per_query = eps;
  state.domain_size = desc.domain_size;
  state.hypotheses.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Dataset part(s.begin() + static_cast<long>(i * chunk),
                 s.begin() + static_cast<long>((i + 1) * chunk));
    auto fitted = consistent_concept(desc, part);
    if (!fitted) {
      throw not_realizable_error("chunk " + std::to_string(i) +
                                 " admits no consistent concept");
    }
    state.hypotheses.push_back(std::move(*fitted));
  }
  return state;
}

inline std::pair<std::size_t, std::size_t> vote_counts(
    const PredictorState& state, int x) {
  std::size_t ones = 0;
  for (const auto& g : state.hypotheses) {
    ones += static_cast<std::size_t>(g.evaluate(x));
  }
  return {state.hypotheses.size() - ones, ones};
}

// Exact P[predict(x) = 1]: binary exponential mechanism over the vote counts.
inline double predict_probability_one(const PredictorState& state, int x) {
  const auto [zeros, ones] = vote_counts(state, x);
  const double eps = to_double(state.eps_per_query);
  // score(b) = -votes(b), sensitivity 1:
  // P[1]/P[0] = exp(eps (ones - zeros) / 2)
  const double margin =
      eps * (static_cast<double>(ones) - static_cast<double>(zeros)) / 2.0;
  return 1.0 / (1.0 + std::exp(-margin));
}

inline int predict(const PredictorState& state, int x, RandomStream& rng) {
  if (state.hypotheses.empty()) throw std::invalid_argument("empty predictor");
  if (x < 0 || x >= state.domain_size) {
    throw std::invalid_argument("query point outside [0, N)");
  }
  const auto [zeros, ones] = vote_counts(state, x);
  ScoredCandidates scored;
  scored.sensitivity = Rational(1);
  scored.scores = {Rational(-static_cast<long long>(zeros)),
                   Rational(-static_cast<long long>(ones))};
  return static_cast<int>(
      exponential_mechanism(scored, to_double(state.eps_per_query), rng));
}

// Exact err_D of the randomized predictor: no sampling, the per-point output
// law is in closed form from the vote counts.
inline double predictor_error(const PredictorState& state,
                              const DistributionSpec& d) {
  d.validate();
  if (d.domain_size() != state.domain_size) {
    throw std::invalid_argument("distribution and predictor domains differ");
  }
  double err = 0.0;
  for (int x = 0; x < d.domain_size(); ++x) {
    const auto xu = static_cast<std::size_t>(x);
    const double p_one = predict_probability_one(state, x);
    const double p1 = to_double(d.p1[xu]);
    err += to_double(d.marginal[xu]) * (p1 * (1.0 - p_one) + (1.0 - p1) * p_one);
  }
  return err;
}

// Chunk size n' = ceil(c (d ln(1/alpha) + ln(r/beta)) / alpha) required of
// each ensemble member in the agnostic construction.
inline std::size_t agnostic_predictor_chunk_size(
    const ConceptClassDescriptor& desc, const AccuracyParams& acc,
    std::size_t r, const BoundConstants& k = {}) {
  acc.validate();
  k.validate();
  const double alpha = to_double(acc.alpha);
  const double beta = to_double(acc.beta);
  const double d = static_cast<double>(vc_dimension(desc));
  const double raw = to_double(k.c_realizable) *
                     (d * std::log(1.0 / alpha) +
                      std::log(static_cast<double>(r) / beta)) /
                     alpha;
  return static_cast<std::size_t>(std::ceil(raw));
}

// Agnostic prediction: subsample/split/relabel as in the agnostic learner,
// then fit the realizable predictor on T^h (realizable by construction, so
// this never raises not_realizable_error).
// Substreams: 0 subsampling, 1 selection (matching agnostic_learn_detailed).
inline PredictorState fit_agnostic_predictor(const ConceptClassDescriptor& desc,
                                             const Dataset& s,
                                             const Rational& eps,
                                             const AccuracyParams& acc,
                                             const BoundConstants& k,
                                             RandomStream& rng) {
  desc.validate();
  acc.validate();
  validate_dataset(s, desc.domain_size);
  const std::size_t n = s.size();
  if (eps * Rational(static_cast<long long>(n)) < Rational(1)) {
    throw std::invalid_argument("subsample empty: eps * n must be >= 1");
  }
  const std::size_t r =
      predictor_instance_count(to_double(eps), to_double(acc.alpha));
  const std::size_t chunk = agnostic_predictor_chunk_size(desc, acc, r, k);
  const std::size_t t_size = subsample_size(eps, n);
  if (t_size < r * chunk) {
    throw std::invalid_argument(
        "subsample too small: need ceil(eps n) >= r * n' = " +
        std::to_string(r) + " * " + std::to_string(chunk) + " = " +
        std::to_string(r * chunk) + ", got " + std::to_string(t_size));
  }
  if (t_size >= n) {
    throw std::invalid_argument("ceil(eps n) must leave a nonempty remainder W");
  }
  auto sub_rng = rng.derive(0);
  auto em_rng = rng.derive(1);
  auto fit_rng = rng.derive(2);

  const IndexSet indices = subsample_uniform_indices(n, t_size, sub_rng);
  auto [t, w] = split_by_index(s, indices);
  const RelabelOutcome rel = relabel(desc, t, w, eps, em_rng);
  return fit_realizable_predictor(desc, rel.relabeled, eps, acc.alpha, fit_rng);
}

}  // namespace privlearn

#endif  // PRIVLEARN_PREDICTION_HPP_
