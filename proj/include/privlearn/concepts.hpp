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

#ifndef PRIVLEARN_CONCEPTS_HPP_
#define PRIVLEARN_CONCEPTS_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "privlearn/data.hpp"
#include "privlearn/rational.hpp"

namespace privlearn {

enum class ClassKind { kPoints, kThresholds, kIntervals, kUnionIntervals };

inline std::string class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::kPoints:
      return "points";
    case ClassKind::kThresholds:
      return "thresholds";
    case ClassKind::kIntervals:
      return "intervals";
    case ClassKind::kUnionIntervals:
      return "union_k_intervals";
  }
  throw std::logic_error("unknown class kind");
}

// One of the supported concept classes over the integer domain [0, N).
//
//   points:      c_z(x) = 1 iff x == z,            z in [0, N)
//   thresholds:  c_t(x) = 1 iff x >= t,            t in [0, N]
//   intervals:   c_{a,b}(x) = 1 iff a <= x < b,    0 <= a <= b <= N
//   union_k:     union of at most k disjoint intervals
struct ConceptClassDescriptor {
  ClassKind kind = ClassKind::kThresholds;
  int domain_size = 2;
  int max_intervals = 1;  // only meaningful for kUnionIntervals

  void validate() const {
    if (domain_size < 2) throw std::invalid_argument("domain size must be >= 2");
    if (kind == ClassKind::kUnionIntervals && max_intervals < 1) {
      throw std::invalid_argument("union class needs k >= 1");
    }
  }
};

inline ConceptClassDescriptor points_class(int domain_size) {
  ConceptClassDescriptor d{ClassKind::kPoints, domain_size, 1};
  d.validate();
  return d;
}

inline ConceptClassDescriptor thresholds_class(int domain_size) {
  ConceptClassDescriptor d{ClassKind::kThresholds, domain_size, 1};
  d.validate();
  return d;
}

inline ConceptClassDescriptor intervals_class(int domain_size) {
  ConceptClassDescriptor d{ClassKind::kIntervals, domain_size, 1};
  d.validate();
  return d;
}

inline ConceptClassDescriptor union_k_intervals_class(int domain_size, int k) {
  ConceptClassDescriptor d{ClassKind::kUnionIntervals, domain_size, k};
  d.validate();
  return d;
}

// A parameterized member of a concept class.
//
// Parameter layout: points {z}; thresholds {t}; intervals {a, b}; unions the
// flattened maximal-run form {a1, b1, a2, b2, ...} with a1 < b1 < a2 - 1 + 1
// <= ... (runs nonempty, sorted, non-adjacent). Canonical comparisons are
// lexicographic on this tuple, with a shorter tuple ordered before any
// extension of it.
struct Concept {
  ClassKind kind = ClassKind::kThresholds;
  std::vector<int> params;

  int evaluate(int x) const {
    switch (kind) {
      case ClassKind::kPoints:
        return x == params[0] ? 1 : 0;
      case ClassKind::kThresholds:
        return x >= params[0] ? 1 : 0;
      case ClassKind::kIntervals:
        return (params[0] <= x && x < params[1]) ? 1 : 0;
      case ClassKind::kUnionIntervals:
        for (std::size_t i = 0; i + 1 < params.size(); i += 2) {
          if (params[i] <= x && x < params[i + 1]) return 1;
        }
        return 0;
    }
    throw std::logic_error("unknown class kind");
  }

  friend bool operator==(const Concept&, const Concept&) = default;
};

inline Concept make_point_concept(int z) {
  return Concept{ClassKind::kPoints, {z}};
}

inline Concept make_threshold_concept(int t) {
  return Concept{ClassKind::kThresholds, {t}};
}

inline Concept make_interval_concept(int a, int b) {
  return Concept{ClassKind::kIntervals, {a, b}};
}

inline Concept make_union_concept(std::vector<int> flattened_runs) {
  return Concept{ClassKind::kUnionIntervals, std::move(flattened_runs)};
}

inline void validate_concept(const ConceptClassDescriptor& desc,
                             const Concept& c) {
  const int n = desc.domain_size;
  if (c.kind != desc.kind) throw std::invalid_argument("concept kind mismatch");
  switch (c.kind) {
    case ClassKind::kPoints:
      if (c.params.size() != 1 || c.params[0] < 0 || c.params[0] >= n) {
        throw std::invalid_argument("point concept parameter out of range");
      }
      return;
    case ClassKind::kThresholds:
      if (c.params.size() != 1 || c.params[0] < 0 || c.params[0] > n) {
        throw std::invalid_argument("threshold parameter out of range");
      }
      return;
    case ClassKind::kIntervals:
      if (c.params.size() != 2 || c.params[0] < 0 || c.params[1] < c.params[0] ||
          c.params[1] > n) {
        throw std::invalid_argument("interval parameters out of range");
      }
      return;
    case ClassKind::kUnionIntervals: {
      if (c.params.size() % 2 != 0 ||
          c.params.size() > 2 * static_cast<std::size_t>(desc.max_intervals)) {
        throw std::invalid_argument("union concept has too many intervals");
      }
      int prev_end = std::numeric_limits<int>::min();
      for (std::size_t i = 0; i < c.params.size(); i += 2) {
        const int a = c.params[i];
        const int b = c.params[i + 1];
        if (a < 0 || b > n || a >= b) {
          throw std::invalid_argument("union run out of range or empty");
        }
        if (prev_end != std::numeric_limits<int>::min() && a <= prev_end) {
          throw std::invalid_argument("union runs must be sorted with gaps");
        }
        prev_end = b;
      }
      return;
    }
  }
}

// Evaluable 0/1 predicate over the domain: a concept plus its materialized
// truth table (proper), or a bare table (improper).
struct Hypothesis {
  std::optional<Concept> concept_tag;
  std::vector<std::uint8_t> table;

  int evaluate(int x) const { return table[static_cast<std::size_t>(x)]; }
  int domain_size() const { return static_cast<int>(table.size()); }
  bool proper() const { return concept_tag.has_value(); }

  friend bool operator==(const Hypothesis& a, const Hypothesis& b) {
    return a.table == b.table;
  }
};

inline Hypothesis to_hypothesis(const Concept& c, int domain_size) {
  Hypothesis h;
  h.concept_tag = c;
  h.table.resize(static_cast<std::size_t>(domain_size));
  for (int x = 0; x < domain_size; ++x) {
    h.table[static_cast<std::size_t>(x)] =
        static_cast<std::uint8_t>(c.evaluate(x));
  }
  return h;
}

inline Hypothesis hypothesis_from_table(std::vector<std::uint8_t> bits,
                                        int domain_size) {
  if (bits.size() != static_cast<std::size_t>(domain_size)) {
    throw std::invalid_argument("truth table length must equal the domain size");
  }
  for (auto b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("table entries must be 0/1");
  }
  Hypothesis h;
  h.table = std::move(bits);
  return h;
}

// The candidate set H of Algorithm-style relabeling: one entry per labeling
// of S_X realizable by the class, each with its canonical representative.
// Entries are sorted by labeling, lexicographically.
struct CandidateSet {
  std::vector<std::vector<std::uint8_t>> labelings;  // aligned with S_X order
  std::vector<Concept> representatives;

  std::size_t size() const { return representatives.size(); }
};

// A weighted mistake-count minimization instance: sum of weight over entries
// where the concept disagrees with the target label.
struct WeightedPoint {
  int x = 0;
  int target = 0;
  Rational weight{0};
};

using WeightedInstance = std::vector<WeightedPoint>;

inline std::size_t vc_dimension(const ConceptClassDescriptor& desc) {
  switch (desc.kind) {
    case ClassKind::kPoints:
    case ClassKind::kThresholds:
      return 1;
    case ClassKind::kIntervals:
      return 2;
    case ClassKind::kUnionIntervals:
      return 2 * static_cast<std::size_t>(desc.max_intervals);
  }
  throw std::logic_error("unknown class kind");
}

namespace detail {

inline long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("weight scaling overflow");
  }
  return out;
}

// Per-domain-value labeling costs on a common integer scale.
// cost1[x]: cost of labeling x as 1 (weights whose target is 0);
// cost0[x]: cost of labeling x as 0 (weights whose target is 1).
struct ScaledCosts {
  std::vector<long long> cost0;
  std::vector<long long> cost1;
  long long scale = 1;
};

inline ScaledCosts scale_instance(const WeightedInstance& inst, int domain_size) {
  ScaledCosts sc;
  sc.cost0.assign(static_cast<std::size_t>(domain_size), 0);
  sc.cost1.assign(static_cast<std::size_t>(domain_size), 0);
  long long lcm = 1;
  for (const auto& wp : inst) {
    if (wp.weight < Rational(0)) {
      throw std::invalid_argument("weights must be nonnegative");
    }
    const long long den = wp.weight.denominator();
    lcm = checked_mul(lcm / std::gcd(lcm, den), den);
  }
  sc.scale = lcm;
  for (const auto& wp : inst) {
    if (wp.x < 0 || wp.x >= domain_size) {
      throw std::invalid_argument("instance point outside [0, N)");
    }
    if (wp.target != 0 && wp.target != 1) {
      throw std::invalid_argument("instance target must be 0/1");
    }
    const long long scaled =
        checked_mul(wp.weight.numerator(), lcm / wp.weight.denominator());
    auto& bucket = (wp.target == 1) ? sc.cost0 : sc.cost1;
    bucket[static_cast<std::size_t>(wp.x)] += scaled;
  }
  return sc;
}

inline std::pair<Concept, long long> erm_points(const ScaledCosts& sc) {
  const int n = static_cast<int>(sc.cost0.size());
  long long total0 = 0;
  for (long long c : sc.cost0) total0 += c;
  long long best = std::numeric_limits<long long>::max();
  int best_z = 0;
  for (int z = 0; z < n; ++z) {
    const long long cost = total0 - sc.cost0[static_cast<std::size_t>(z)] +
                           sc.cost1[static_cast<std::size_t>(z)];
    if (cost < best) {
      best = cost;
      best_z = z;
    }
  }
  return {make_point_concept(best_z), best};
}

inline std::pair<Concept, long long> erm_thresholds(const ScaledCosts& sc) {
  const int n = static_cast<int>(sc.cost0.size());
  // cost(t) = sum_{x < t} cost0[x] + sum_{x >= t} cost1[x]
  long long suffix1 = 0;
  for (long long c : sc.cost1) suffix1 += c;
  long long prefix0 = 0;
  long long best = std::numeric_limits<long long>::max();
  int best_t = 0;
  for (int t = 0; t <= n; ++t) {
    const long long cost = prefix0 + suffix1;
    if (cost < best) {
      best = cost;
      best_t = t;
    }
    if (t < n) {
      prefix0 += sc.cost0[static_cast<std::size_t>(t)];
      suffix1 -= sc.cost1[static_cast<std::size_t>(t)];
    }
  }
  return {make_threshold_concept(best_t), best};
}

inline std::pair<Concept, long long> erm_intervals(const ScaledCosts& sc) {
  const int n = static_cast<int>(sc.cost0.size());
  long long total0 = 0;
  for (long long c : sc.cost0) total0 += c;
  // cost(a, b) = total0 + sum_{x in [a,b)} (cost1[x] - cost0[x])
  std::vector<long long> gain(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 0; x < n; ++x) {
    gain[static_cast<std::size_t>(x) + 1] =
        gain[static_cast<std::size_t>(x)] +
        sc.cost1[static_cast<std::size_t>(x)] -
        sc.cost0[static_cast<std::size_t>(x)];
  }
  long long best = std::numeric_limits<long long>::max();
  int best_a = 0, best_b = 0;
  for (int a = 0; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      const long long cost = total0 + gain[static_cast<std::size_t>(b)] -
                             gain[static_cast<std::size_t>(a)];
      if (cost < best) {
        best = cost;
        best_a = a;
        best_b = b;
      }
    }
  }
  return {make_interval_concept(best_a, best_b), best};
}

// Minimum-cost labeling of the domain cells by a union of at most k maximal
// runs of ones, reconstructed as the lexicographically smallest run tuple.
inline std::pair<Concept, long long> erm_union(const ScaledCosts& sc, int k) {
  const int n = static_cast<int>(sc.cost0.size());
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  // Suffix tables over cells [x, N): g = outside a run, h = inside a run.
  // Second index: runs used so far (runs are counted when they open).
  std::vector<std::vector<long long>> g(static_cast<std::size_t>(n) + 1,
                                        std::vector<long long>(
                                            static_cast<std::size_t>(k) + 1, 0)),
      h = g;
  for (int x = n - 1; x >= 0; --x) {
    for (int r = k; r >= 0; --r) {
      const auto xu = static_cast<std::size_t>(x);
      const auto ru = static_cast<std::size_t>(r);
      long long stay_out = sc.cost0[xu] + g[xu + 1][ru];
      long long open = (r < k) ? sc.cost1[xu] + h[xu + 1][ru + 1] : kInf;
      g[xu][ru] = std::min(stay_out, open);
      long long stay_in = sc.cost1[xu] + h[xu + 1][ru];
      long long close = sc.cost0[xu] + g[xu + 1][ru];
      h[xu][ru] = std::min(stay_in, close);
    }
  }
  const long long opt = g[0][0];

  std::vector<long long> prefix0(static_cast<std::size_t>(n) + 1, 0),
      prefix1 = prefix0;
  for (int x = 0; x < n; ++x) {
    prefix0[static_cast<std::size_t>(x) + 1] =
        prefix0[static_cast<std::size_t>(x)] + sc.cost0[static_cast<std::size_t>(x)];
    prefix1[static_cast<std::size_t>(x) + 1] =
        prefix1[static_cast<std::size_t>(x)] + sc.cost1[static_cast<std::size_t>(x)];
  }
  const auto zeros = [&](int u, int v) {
    return prefix0[static_cast<std::size_t>(v)] - prefix0[static_cast<std::size_t>(u)];
  };
  const auto ones = [&](int u, int v) {
    return prefix1[static_cast<std::size_t>(v)] - prefix1[static_cast<std::size_t>(u)];
  };

  std::vector<int> runs;
  int pos = 0;
  int used = 0;
  long long remaining = opt;
  while (pos < n) {
    if (zeros(pos, n) == remaining) break;  // lex-smallest: stop opening runs
    int a = -1;
    for (int cand = pos; cand < n; ++cand) {
      if (used >= k) break;
      const long long with_open =
          zeros(pos, cand) + sc.cost1[static_cast<std::size_t>(cand)] +
          h[static_cast<std::size_t>(cand) + 1][static_cast<std::size_t>(used) + 1];
      if (with_open == remaining) {
        a = cand;
        break;
      }
    }
    if (a < 0) throw std::logic_error("union ERM reconstruction failed (start)");
    int b = -1;
    for (int cand = a + 1; cand <= n; ++cand) {
      long long cost = zeros(pos, a) + ones(a, cand);
      if (cand < n) {
        cost += sc.cost0[static_cast<std::size_t>(cand)] +
                g[static_cast<std::size_t>(cand) + 1][static_cast<std::size_t>(used) + 1];
      }
      if (cost == remaining) {
        b = cand;
        break;
      }
    }
    if (b < 0) throw std::logic_error("union ERM reconstruction failed (end)");
    runs.push_back(a);
    runs.push_back(b);
    remaining -= zeros(pos, a) + ones(a, b);
    if (b < n) remaining -= sc.cost0[static_cast<std::size_t>(b)];
    pos = (b < n) ? b + 1 : n;
    ++used;
  }
  return {make_union_concept(std::move(runs)), opt};
}

}  // namespace detail

// Exact minimizer of the weighted mistake count, with the value attained.
// Ties break to the lexicographically smallest parameter tuple.
inline std::pair<Concept, Rational> weighted_erm(
    const ConceptClassDescriptor& desc, const WeightedInstance& inst) {
  desc.validate();
  if (inst.empty()) throw std::invalid_argument("weighted ERM needs a nonempty instance");
  const auto sc = detail::scale_instance(inst, desc.domain_size);
  std::pair<Concept, long long> best;
  switch (desc.kind) {
    case ClassKind::kPoints:
      best = detail::erm_points(sc);
      break;
    case ClassKind::kThresholds:
      best = detail::erm_thresholds(sc);
      break;
    case ClassKind::kIntervals:
      best = detail::erm_intervals(sc);
      break;
    case ClassKind::kUnionIntervals:
      best = detail::erm_union(sc, desc.max_intervals);
      break;
  }
  return {best.first, Rational(best.second, sc.scale)};
}

// Canonical zero-mistake concept on S, or nullopt if the class has none.
// The empty dataset is vacuously consistent with the minimal concept.
inline std::optional<Concept> consistent_concept(
    const ConceptClassDescriptor& desc, const Dataset& s) {
  desc.validate();
  if (s.empty()) {
    switch (desc.kind) {
      case ClassKind::kPoints:
        return make_point_concept(0);
      case ClassKind::kThresholds:
        return make_threshold_concept(0);
      case ClassKind::kIntervals:
        return make_interval_concept(0, 0);
      case ClassKind::kUnionIntervals:
        return make_union_concept({});
    }
  }
  WeightedInstance inst;
  inst.reserve(s.size());
  for (const auto& e : s) inst.push_back({e.x, e.y, Rational(1)});
  auto [concept_found, value] = weighted_erm(desc, inst);
  if (value != Rational(0)) return std::nullopt;
  return concept_found;
}

namespace detail {

// Labelings over the distinct sorted points with at most k maximal runs of
// ones; exactly the traces realizable by unions of at most k intervals.
inline void enumerate_run_bounded_labelings(
    std::size_t m, int max_runs,
    std::vector<std::vector<std::uint8_t>>& out) {
  std::vector<std::uint8_t> current(m, 0);
  const auto recurse = [&](auto&& self, std::size_t idx, int runs,
                           std::uint8_t last) -> void {
    if (idx == m) {
      out.push_back(current);
      return;
    }
    current[idx] = 0;
    self(self, idx + 1, runs, 0);
    const int next_runs = (last == 0) ? runs + 1 : runs;
    if (next_runs <= max_runs) {
      current[idx] = 1;
      self(self, idx + 1, next_runs, 1);
      current[idx] = 0;
    }
  };
  recurse(recurse, 0, 0, 0);
}

}  // namespace detail

// All labelings of S_X realizable by the class, one canonical representative
// each. |entries| is exactly |Pi_C(S_X)|.
inline CandidateSet dichotomies(const ConceptClassDescriptor& desc,
                                const UnlabeledDataset& sx) {
  desc.validate();
  if (sx.empty()) throw std::invalid_argument("dichotomies need at least one point");
  for (int x : sx) {
    if (x < 0 || x >= desc.domain_size) {
      throw std::invalid_argument("point outside [0, N)");
    }
  }
  std::vector<int> distinct(sx.begin(), sx.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t m = distinct.size();
  const auto index_of = [&](int x) {
    return static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), x) -
        distinct.begin());
  };

  // (labeling over distinct sorted points, representative)
  std::vector<std::pair<std::vector<std::uint8_t>, Concept>> entries;
  switch (desc.kind) {
    case ClassKind::kThresholds: {
      for (std::size_t i = 0; i <= m; ++i) {
        std::vector<std::uint8_t> lab(m, 0);
        for (std::size_t j = i; j < m; ++j) lab[j] = 1;
        const int t = (i == 0) ? 0 : distinct[i - 1] + 1;
        entries.emplace_back(std::move(lab), make_threshold_concept(t));
      }
      break;
    }
    case ClassKind::kPoints: {
      if (m < static_cast<std::size_t>(desc.domain_size)) {
        int z = 0;
        while (std::binary_search(distinct.begin(), distinct.end(), z)) ++z;
        entries.emplace_back(std::vector<std::uint8_t>(m, 0),
                             make_point_concept(z));
      }
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::uint8_t> lab(m, 0);
        lab[j] = 1;
        entries.emplace_back(std::move(lab), make_point_concept(distinct[j]));
      }
      break;
    }
    case ClassKind::kIntervals: {
      entries.emplace_back(std::vector<std::uint8_t>(m, 0),
                           make_interval_concept(0, 0));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
          std::vector<std::uint8_t> lab(m, 0);
          for (std::size_t l = i; l <= j; ++l) lab[l] = 1;
          const int a = (i == 0) ? 0 : distinct[i - 1] + 1;
          const int b = distinct[j] + 1;
          entries.emplace_back(std::move(lab), make_interval_concept(a, b));
        }
      }
      break;
    }
    case ClassKind::kUnionIntervals: {
      std::vector<std::vector<std::uint8_t>> labs;
      detail::enumerate_run_bounded_labelings(m, desc.max_intervals, labs);
      for (auto& lab : labs) {
        Dataset labeled;
        labeled.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
          labeled.push_back({distinct[j], static_cast<int>(lab[j])});
        }
        auto rep = consistent_concept(desc, labeled);
        if (!rep) throw std::logic_error("run-bounded labeling must be realizable");
        entries.emplace_back(std::move(lab), std::move(*rep));
      }
      break;
    }
  }

  // Expand each labeling to the original point order (duplicates repeated)
  // and emit entries sorted by expanded labeling.
  CandidateSet out;
  out.labelings.reserve(entries.size());
  out.representatives.reserve(entries.size());
  std::vector<std::size_t> order(entries.size());
  std::vector<std::vector<std::uint8_t>> expanded(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    expanded[e].resize(sx.size());
    for (std::size_t t = 0; t < sx.size(); ++t) {
      expanded[e][t] = entries[e].first[index_of(sx[t])];
    }
    order[e] = e;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return expanded[a] < expanded[b];
  });
  for (std::size_t e : order) {
    out.labelings.push_back(std::move(expanded[e]));
    out.representatives.push_back(std::move(entries[e].second));
  }
  return out;
}

}  // namespace privlearn

#endif  // PRIVLEARN_CONCEPTS_HPP_
