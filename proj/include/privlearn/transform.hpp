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

#ifndef PRIVLEARN_TRANSFORM_HPP_
#define PRIVLEARN_TRANSFORM_HPP_

#include <iostream>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "privlearn/bounds.hpp"
#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/mechanisms.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/random.hpp"

namespace privlearn {

// q(T o W, h) = min_{f in C} { dis_{T_X}(h, f) + err_W(f) }, evaluated exactly
// as a single weighted ERM instance: T points weighted 1/|T| with target h(x),
// W entries weighted 1/|W| with their own labels.
inline Rational score_q(const ConceptClassDescriptor& desc, const Concept& h,
                        const UnlabeledDataset& tx, const Dataset& w) {
  if (tx.empty() || w.empty()) {
    throw std::invalid_argument("score q needs nonempty T and W");
  }
  WeightedInstance inst;
  inst.reserve(tx.size() + w.size());
  const Rational wt(1, static_cast<long long>(tx.size()));
  const Rational ww(1, static_cast<long long>(w.size()));
  for (int x : tx) inst.push_back({x, h.evaluate(x), wt});
  for (const auto& e : w) inst.push_back({e.x, e.y, ww});
  return weighted_erm(desc, inst).second;
}

// Which score drives the relabeling selection. kTransform is the full-data
// score q above; kEmpirical scores err_W(h) with the same sensitivity 1/|W|
// and, with W set to a copy of T, reproduces the subsample-only pipeline.
enum class RelabelScore { kTransform, kEmpirical };

struct RelabelOutcome {
  Concept chosen;
  Dataset relabeled;        // T^h, order preserved
  Rational score_of_chosen;
  std::size_t candidate_count = 0;
  std::size_t chosen_index = 0;
};

inline ScoredCandidates relabel_candidate_scores(
    const ConceptClassDescriptor& desc, const CandidateSet& cands,
    const UnlabeledDataset& tx, const Dataset& w, RelabelScore score_kind) {
  ScoredCandidates scored;
  scored.sensitivity = Rational(1, static_cast<long long>(w.size()));
  scored.scores.reserve(cands.size());
  for (const auto& rep : cands.representatives) {
    scored.scores.push_back(score_kind == RelabelScore::kTransform
                                ? score_q(desc, rep, tx, w)
                                : empirical_error(rep, w));
  }
  return scored;
}

// Candidate set from Pi_C(T_X), exponential mechanism with privacy parameter
// eps and sensitivity 1/|W|, then relabel T by the chosen concept.
inline RelabelOutcome relabel(const ConceptClassDescriptor& desc,
                              const Dataset& t, const Dataset& w,
                              const Rational& eps, RandomStream& rng,
                              RelabelScore score_kind = RelabelScore::kTransform) {
  if (t.empty() || w.empty()) {
    throw std::invalid_argument("relabel needs nonempty T and W");
  }
  const UnlabeledDataset tx = points_of(t);
  const CandidateSet cands = dichotomies(desc, tx);
  const ScoredCandidates scored =
      relabel_candidate_scores(desc, cands, tx, w, score_kind);
  const std::size_t pick = exponential_mechanism(scored, to_double(eps), rng);

  RelabelOutcome out;
  out.chosen = cands.representatives[pick];
  out.chosen_index = pick;
  out.candidate_count = cands.size();
  out.score_of_chosen = scored.scores[pick];
  out.relabeled.reserve(t.size());
  for (const auto& e : t) out.relabeled.push_back({e.x, out.chosen.evaluate(e.x)});
  return out;
}

struct AgnConfig {
  ConceptClassDescriptor concept_class;
  Rational eps{1, 5};
  Learner base;                      // assumed (1, delta)-DP empirical learner
  std::ostream* warnings = nullptr;  // eps > 1/3 notice lands here if set

  void validate() const {
    concept_class.validate();
    if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be > 0");
  }
};

struct AgnOutcome {
  Hypothesis hypothesis;
  RelabelOutcome relabeling;
  IndexSet subsample;
};

// ceil(eps * n) as exact integer arithmetic.
inline std::size_t subsample_size(const Rational& eps, std::size_t n) {
  const long long num = eps.numerator() * static_cast<long long>(n);
  const long long den = eps.denominator();
  return static_cast<std::size_t>((num + den - 1) / den);
}

// The agnostic learner: subsample T of size ceil(eps n), relabel T scoring
// candidates against the whole remainder W, then run the base learner on T^h.
// Substreams: 0 subsampling, 1 selection, 2 base learner.
inline AgnOutcome agnostic_learn_detailed(const AgnConfig& cfg, const Dataset& s,
                                          RandomStream& rng) {
  cfg.validate();
  const std::size_t n = s.size();
  if (cfg.eps * Rational(static_cast<long long>(n)) < Rational(1)) {
    throw std::invalid_argument("subsample empty: eps * n must be >= 1");
  }
  if (cfg.eps > Rational(1, 3) && cfg.warnings != nullptr) {
    *cfg.warnings << "warning: eps > 1/3 is outside the analyzed privacy regime\n";
  }
  const std::size_t k = subsample_size(cfg.eps, n);
  if (k >= n) {
    throw std::invalid_argument("ceil(eps n) must leave a nonempty remainder W");
  }
  auto sub_rng = rng.derive(0);
  auto em_rng = rng.derive(1);
  auto base_rng = rng.derive(2);

  AgnOutcome out;
  out.subsample = subsample_uniform_indices(n, k, sub_rng);
  auto [t, w] = split_by_index(s, out.subsample);
  out.relabeling = relabel(cfg.concept_class, t, w, cfg.eps, em_rng);
  out.hypothesis = cfg.base.run(out.relabeling.relabeled, base_rng);
  return out;
}

inline Hypothesis agnostic_learn(const AgnConfig& cfg, const Dataset& s,
                                 RandomStream& rng) {
  return agnostic_learn_detailed(cfg, s, rng).hypothesis;
}

struct AuxOutcome {
  Hypothesis output;   // A(T^h) xor h_bar
  Hypothesis learned;  // g = A(T^h)
  Concept h_bar;       // consistent with V^h
  Concept chosen;      // the relabeling concept h
  std::size_t candidate_count = 0;
};

// The auxiliary construction: relabel T = U o V against W, pick h_bar in C
// consistent with V^h (always possible since h itself realizes V^h), run the
// base learner on T^h, output the xor with h_bar.
// Substreams: 1 selection, 2 base learner (matching agnostic_learn_detailed).
inline AuxOutcome aux_run(const ConceptClassDescriptor& desc, const Dataset& u,
                          const Dataset& v, const Dataset& w,
                          const Rational& eps, const Learner& base,
                          RandomStream& rng) {
  if (u.empty() || v.empty() || w.empty()) {
    throw std::invalid_argument("aux needs nonempty U, V, W");
  }
  auto em_rng = rng.derive(1);
  auto base_rng = rng.derive(2);
  const Dataset t = concat(u, v);
  RelabelOutcome rel = relabel(desc, t, w, eps, em_rng);

  Dataset v_relabeled(rel.relabeled.begin() + static_cast<long>(u.size()),
                      rel.relabeled.end());
  auto h_bar = consistent_concept(desc, v_relabeled);
  if (!h_bar) throw std::logic_error("V^h must be realizable by construction");

  AuxOutcome out;
  out.learned = base.run(rel.relabeled, base_rng);
  out.output = xor_hypothesis(out.learned, to_hypothesis(*h_bar, desc.domain_size));
  out.h_bar = *h_bar;
  out.chosen = rel.chosen;
  out.candidate_count = rel.candidate_count;
  return out;
}

}  // namespace privlearn

#endif  // PRIVLEARN_TRANSFORM_HPP_
