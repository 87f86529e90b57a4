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

#ifndef PRIVLEARN_METRICS_HPP_
#define PRIVLEARN_METRICS_HPP_

#include <stdexcept>
#include <vector>

#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/rational.hpp"

namespace privlearn {

// Target accuracy (alpha) and failure probability (beta), both in (0, 1).
struct AccuracyParams {
  Rational alpha{1, 10};
  Rational beta{1, 10};

  void validate() const {
    if (alpha <= Rational(0) || alpha >= Rational(1)) {
      throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (beta <= Rational(0) || beta >= Rational(1)) {
      throw std::invalid_argument("beta must lie in (0, 1)");
    }
  }
};

// The generalization lemmas hold for "some universal constant"; these knobs
// stand in for it and default to 1.
struct BoundConstants {
  Rational c_realizable{1};
  Rational c_agnostic{1};

  void validate() const {
    if (c_realizable <= Rational(0) || c_agnostic <= Rational(0)) {
      throw std::invalid_argument("bound constants must be positive");
    }
  }
};

// A distribution over [0, N) x {0, 1}: exact marginal plus P[y = 1 | x].
struct DistributionSpec {
  std::vector<Rational> marginal;
  std::vector<Rational> p1;

  int domain_size() const { return static_cast<int>(marginal.size()); }

  void validate() const {
    if (marginal.size() < 2 || marginal.size() != p1.size()) {
      throw std::invalid_argument("marginal and p1 must cover a domain of size >= 2");
    }
    Rational total(0);
    for (const auto& m : marginal) {
      if (m < Rational(0)) throw std::invalid_argument("negative marginal mass");
      total += m;
    }
    if (total != Rational(1)) {
      throw std::invalid_argument("marginal must sum to exactly 1");
    }
    for (const auto& p : p1) {
      if (p < Rational(0) || p > Rational(1)) {
        throw std::invalid_argument("conditional label probability outside [0, 1]");
      }
    }
  }
};

template <typename Predictor>
Rational empirical_error_of(const Predictor& h, const Dataset& s) {
  if (s.empty()) throw std::invalid_argument("empirical error of an empty dataset");
  long long mistakes = 0;
  for (const auto& e : s) {
    if (h.evaluate(e.x) != e.y) ++mistakes;
  }
  return Rational(mistakes, static_cast<long long>(s.size()));
}

inline Rational empirical_error(const Hypothesis& h, const Dataset& s) {
  return empirical_error_of(h, s);
}

inline Rational empirical_error(const Concept& c, const Dataset& s) {
  return empirical_error_of(c, s);
}

template <typename P1, typename P2>
Rational empirical_disagreement_of(const P1& h1, const P2& h2,
                                   const UnlabeledDataset& sx) {
  if (sx.empty()) {
    throw std::invalid_argument("empirical disagreement of an empty dataset");
  }
  long long differ = 0;
  for (int x : sx) {
    if (h1.evaluate(x) != h2.evaluate(x)) ++differ;
  }
  return Rational(differ, static_cast<long long>(sx.size()));
}

inline Rational empirical_disagreement(const Hypothesis& h1,
                                       const Hypothesis& h2,
                                       const UnlabeledDataset& sx) {
  return empirical_disagreement_of(h1, h2, sx);
}

inline Rational empirical_disagreement(const Concept& c1, const Concept& c2,
                                       const UnlabeledDataset& sx) {
  return empirical_disagreement_of(c1, c2, sx);
}

// err_D(h) = Pr_{(x,y) ~ D}[h(x) != y], exact on the finite domain.
template <typename Predictor>
Rational generalization_error_of(const Predictor& h, const DistributionSpec& d) {
  d.validate();
  Rational err(0);
  for (int x = 0; x < d.domain_size(); ++x) {
    const auto xu = static_cast<std::size_t>(x);
    const Rational wrong_mass =
        h.evaluate(x) == 1 ? Rational(1) - d.p1[xu] : d.p1[xu];
    err += d.marginal[xu] * wrong_mass;
  }
  return err;
}

inline Rational generalization_error(const Hypothesis& h,
                                     const DistributionSpec& d) {
  return generalization_error_of(h, d);
}

inline Rational generalization_error(const Concept& c,
                                     const DistributionSpec& d) {
  return generalization_error_of(c, d);
}

// inf_{c in C} err_D(c), exact: one weighted ERM call on the distribution's
// own mistake weights.
inline Rational optimal_error(const ConceptClassDescriptor& desc,
                              const DistributionSpec& d) {
  d.validate();
  if (d.domain_size() != desc.domain_size) {
    throw std::invalid_argument("distribution and class domain sizes differ");
  }
  WeightedInstance inst;
  inst.reserve(2 * static_cast<std::size_t>(d.domain_size()));
  for (int x = 0; x < d.domain_size(); ++x) {
    const auto xu = static_cast<std::size_t>(x);
    const Rational mass1 = d.marginal[xu] * d.p1[xu];
    const Rational mass0 = d.marginal[xu] * (Rational(1) - d.p1[xu]);
    if (mass1 != Rational(0)) inst.push_back({x, 1, mass1});
    if (mass0 != Rational(0)) inst.push_back({x, 0, mass0});
  }
  if (inst.empty()) return Rational(0);
  return weighted_erm(desc, inst).second;
}

// (h1 xor h2)(x) = 1 iff the two hypotheses disagree at x.
inline Hypothesis xor_hypothesis(const Hypothesis& h1, const Hypothesis& h2) {
  if (h1.table.size() != h2.table.size()) {
    throw std::invalid_argument("xor of hypotheses over different domains");
  }
  Hypothesis out;
  out.table.resize(h1.table.size());
  for (std::size_t i = 0; i < out.table.size(); ++i) {
    out.table[i] = static_cast<std::uint8_t>(h1.table[i] != h2.table[i]);
  }
  return out;
}

}  // namespace privlearn

#endif  // PRIVLEARN_METRICS_HPP_
