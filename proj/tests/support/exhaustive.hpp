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

// Test-only brute-force oracles. Everything here enumerates parameter tuples
// directly and evaluates them with its own logic, independent of the library
// implementations it cross-checks.

#ifndef PRIVLEARN_TESTS_SUPPORT_EXHAUSTIVE_HPP_
#define PRIVLEARN_TESTS_SUPPORT_EXHAUSTIVE_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/rational.hpp"

namespace privlearn::testing {

// Independent evaluator over raw parameter tuples.
inline int oracle_eval(ClassKind kind, const std::vector<int>& params, int x) {
  switch (kind) {
    case ClassKind::kPoints:
      return params[0] == x ? 1 : 0;
    case ClassKind::kThresholds:
      return x < params[0] ? 0 : 1;
    case ClassKind::kIntervals:
    case ClassKind::kUnionIntervals: {
      int result = 0;
      for (std::size_t i = 0; i + 1 < params.size(); i += 2) {
        const bool inside = x >= params[i] && x <= params[i + 1] - 1;
        if (inside) result = 1;
      }
      return result;
    }
  }
  return 0;
}

// Every parameter tuple of the class, in canonical lexicographic order
// (shorter tuples before their extensions).
inline std::vector<std::vector<int>> enumerate_param_tuples(
    const ConceptClassDescriptor& desc) {
  const int n = desc.domain_size;
  std::vector<std::vector<int>> out;
  switch (desc.kind) {
    case ClassKind::kPoints:
      for (int z = 0; z < n; ++z) out.push_back({z});
      return out;
    case ClassKind::kThresholds:
      for (int t = 0; t <= n; ++t) out.push_back({t});
      return out;
    case ClassKind::kIntervals:
      for (int a = 0; a <= n; ++a) {
        for (int b = a; b <= n; ++b) out.push_back({a, b});
      }
      return out;
    case ClassKind::kUnionIntervals: {
      // Maximal-run form: nonempty runs, sorted, separated by a gap.
      std::vector<int> current;
      const auto dfs = [&](auto&& self, int min_start, int runs_left) -> void {
        out.push_back(current);
        if (runs_left == 0) return;
        for (int a = min_start; a < n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            current.push_back(a);
            current.push_back(b);
            self(self, b + 1, runs_left - 1);
            current.pop_back();
            current.pop_back();
          }
        }
      };
      dfs(dfs, 0, desc.max_intervals);
      return out;
    }
  }
  return out;
}

// Exhaustive weighted ERM: first tuple (in canonical order) attaining the
// exact minimum weighted mistake count.
inline std::pair<std::vector<int>, Rational> exhaustive_weighted_erm(
    const ConceptClassDescriptor& desc, const WeightedInstance& inst) {
  std::vector<int> best_params;
  Rational best_value(0);
  bool first = true;
  for (const auto& params : enumerate_param_tuples(desc)) {
    Rational value(0);
    for (const auto& wp : inst) {
      if (oracle_eval(desc.kind, params, wp.x) != wp.target) value += wp.weight;
    }
    if (first || value < best_value) {
      best_params = params;
      best_value = value;
      first = false;
    }
  }
  return {best_params, best_value};
}

// All labelings of sx realizable by the class.
inline std::set<std::vector<std::uint8_t>> exhaustive_labelings(
    const ConceptClassDescriptor& desc, const UnlabeledDataset& sx) {
  std::set<std::vector<std::uint8_t>> labelings;
  for (const auto& params : enumerate_param_tuples(desc)) {
    std::vector<std::uint8_t> lab(sx.size());
    for (std::size_t i = 0; i < sx.size(); ++i) {
      lab[i] = static_cast<std::uint8_t>(oracle_eval(desc.kind, params, sx[i]));
    }
    labelings.insert(std::move(lab));
  }
  return labelings;
}

// Brute-force VC dimension over the class's own domain: the largest subset of
// [0, N) on which every labeling is realizable. Checks subsets up to
// max_probe points.
inline std::size_t exhaustive_vc_dimension(const ConceptClassDescriptor& desc,
                                           std::size_t max_probe) {
  const int n = desc.domain_size;
  std::size_t best = 0;
  std::vector<int> subset;
  const auto shattered = [&](const std::vector<int>& pts) {
    return exhaustive_labelings(desc, pts).size() ==
           (std::size_t{1} << pts.size());
  };
  const auto dfs = [&](auto&& self, int next, std::size_t want) -> bool {
    if (subset.size() == want) return shattered(subset);
    for (int x = next; x < n; ++x) {
      subset.push_back(x);
      if (self(self, x + 1, want)) {
        subset.pop_back();
        return true;
      }
      subset.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= max_probe; ++size) {
    if (dfs(dfs, 0, size)) {
      best = size;
    } else {
      break;
    }
  }
  return best;
}

// Exhaustive q(T o W, h): min over all concepts f of dis_{T_X}(h, f) +
// err_W(f), with both terms accumulated point by point.
inline Rational exhaustive_score_q(const ConceptClassDescriptor& desc,
                                   const Concept& h, const UnlabeledDataset& tx,
                                   const Dataset& w) {
  Rational best(0);
  bool first = true;
  for (const auto& params : enumerate_param_tuples(desc)) {
    long long t_mistakes = 0;
    for (int x : tx) {
      if (oracle_eval(desc.kind, params, x) != h.evaluate(x)) ++t_mistakes;
    }
    long long w_mistakes = 0;
    for (const auto& e : w) {
      if (oracle_eval(desc.kind, params, e.x) != e.y) ++w_mistakes;
    }
    const Rational value =
        Rational(t_mistakes, static_cast<long long>(tx.size())) +
        Rational(w_mistakes, static_cast<long long>(w.size()));
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  return best;
}

// Total variation distance between an empirical frequency vector and an
// exact probability vector.
inline double tv_distance(const std::vector<double>& a,
                          const std::vector<double>& b) {
  double tv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv / 2.0;
}

}  // namespace privlearn::testing

#endif  // PRIVLEARN_TESTS_SUPPORT_EXHAUSTIVE_HPP_
