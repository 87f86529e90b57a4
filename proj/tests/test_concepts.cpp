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

#include "privlearn/concepts.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "privlearn/random.hpp"
#include "support/exhaustive.hpp"

namespace privlearn {
namespace {

using testing::enumerate_param_tuples;
using testing::exhaustive_labelings;
using testing::exhaustive_vc_dimension;
using testing::exhaustive_weighted_erm;
using testing::oracle_eval;

std::vector<ConceptClassDescriptor> all_classes(int domain_size) {
  return {points_class(domain_size), thresholds_class(domain_size),
          intervals_class(domain_size), union_k_intervals_class(domain_size, 2)};
}

TEST(EvaluateTest, ThresholdDefinition) {
  const Concept t4 = make_threshold_concept(4);
  EXPECT_EQ(t4.evaluate(4), 1);
  EXPECT_EQ(t4.evaluate(3), 0);
}

TEST(EvaluateTest, PointDefinition) {
  const Concept z7 = make_point_concept(7);
  EXPECT_EQ(z7.evaluate(7), 1);
  EXPECT_EQ(z7.evaluate(6), 0);
}

TEST(EvaluateTest, UnionOfIntervals) {
  const Concept u = make_union_concept({1, 3, 5, 7});
  EXPECT_EQ(u.evaluate(0), 0);
  EXPECT_EQ(u.evaluate(1), 1);
  EXPECT_EQ(u.evaluate(2), 1);
  EXPECT_EQ(u.evaluate(3), 0);
  EXPECT_EQ(u.evaluate(5), 1);
  EXPECT_EQ(u.evaluate(7), 0);
}

TEST(EvaluateTest, MatchesOracleEverywhere) {
  for (const auto& desc : all_classes(9)) {
    for (const auto& params : enumerate_param_tuples(desc)) {
      const Concept c{desc.kind, params};
      for (int x = 0; x < desc.domain_size; ++x) {
        ASSERT_EQ(c.evaluate(x), oracle_eval(desc.kind, params, x))
            << class_kind_name(desc.kind) << " at x=" << x;
      }
    }
  }
}

TEST(VcDimensionTest, MatchesBruteForceShattering) {
  EXPECT_EQ(vc_dimension(points_class(8)), 1u);
  EXPECT_EQ(exhaustive_vc_dimension(points_class(8), 3), 1u);

  EXPECT_EQ(vc_dimension(thresholds_class(8)), 1u);
  EXPECT_EQ(exhaustive_vc_dimension(thresholds_class(8), 3), 1u);

  EXPECT_EQ(vc_dimension(intervals_class(8)), 2u);
  EXPECT_EQ(exhaustive_vc_dimension(intervals_class(8), 3), 2u);

  EXPECT_EQ(vc_dimension(union_k_intervals_class(10, 2)), 4u);
  EXPECT_EQ(exhaustive_vc_dimension(union_k_intervals_class(10, 2), 5), 4u);
}

TEST(DichotomiesTest, ThresholdExampleOverElevenPoints) {
  const auto cands = dichotomies(thresholds_class(11), {2, 5, 8});
  ASSERT_EQ(cands.size(), 4u);
  const std::set<std::vector<std::uint8_t>> expected = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  std::set<std::vector<std::uint8_t>> got(cands.labelings.begin(),
                                          cands.labelings.end());
  EXPECT_EQ(got, expected);
}

TEST(DichotomiesTest, PointsExample) {
  const auto cands = dichotomies(points_class(10), {1, 4});
  ASSERT_EQ(cands.size(), 3u);
  const std::set<std::vector<std::uint8_t>> expected = {
      {0, 0}, {1, 0}, {0, 1}};
  std::set<std::vector<std::uint8_t>> got(cands.labelings.begin(),
                                          cands.labelings.end());
  EXPECT_EQ(got, expected);
}

TEST(DichotomiesTest, SinglePointHasAtMostTwoLabelings) {
  for (const auto& desc : all_classes(6)) {
    EXPECT_LE(dichotomies(desc, {3}).size(), 2u);
  }
}

TEST(DichotomiesTest, MatchesExhaustiveEnumeration) {
  RandomStream rng(101);
  for (const auto& desc : all_classes(12)) {
    for (int round = 0; round < 30; ++round) {
      auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
      const std::size_t m = 1 + round_rng.uniform_index(6);
      UnlabeledDataset sx;
      for (std::size_t i = 0; i < m; ++i) {
        sx.push_back(static_cast<int>(round_rng.uniform_index(12)));
      }
      const auto cands = dichotomies(desc, sx);
      const auto expected = exhaustive_labelings(desc, sx);
      ASSERT_EQ(cands.size(), expected.size());
      std::set<std::vector<std::uint8_t>> got(cands.labelings.begin(),
                                              cands.labelings.end());
      ASSERT_EQ(got, expected) << class_kind_name(desc.kind);
      // Every representative realizes its labeling.
      for (std::size_t e = 0; e < cands.size(); ++e) {
        for (std::size_t i = 0; i < sx.size(); ++i) {
          ASSERT_EQ(cands.representatives[e].evaluate(sx[i]),
                    cands.labelings[e][i]);
        }
      }
    }
  }
}

TEST(DichotomiesTest, ThresholdCountIsDistinctPlusOne) {
  RandomStream rng(55);
  for (int round = 0; round < 50; ++round) {
    auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
    const std::size_t m = 1 + round_rng.uniform_index(64);
    UnlabeledDataset sx;
    std::set<int> distinct;
    for (std::size_t i = 0; i < m; ++i) {
      const int x = static_cast<int>(round_rng.uniform_index(64));
      sx.push_back(x);
      distinct.insert(x);
    }
    EXPECT_EQ(dichotomies(thresholds_class(64), sx).size(),
              distinct.size() + 1);
  }
}

TEST(DichotomiesTest, SauerBoundHolds) {
  RandomStream rng(66);
  for (const auto& desc : all_classes(16)) {
    const double d = static_cast<double>(vc_dimension(desc));
    for (int round = 0; round < 20; ++round) {
      auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
      const std::size_t m =
          static_cast<std::size_t>(d) + round_rng.uniform_index(24);
      UnlabeledDataset sx;
      for (std::size_t i = 0; i < m; ++i) {
        sx.push_back(static_cast<int>(round_rng.uniform_index(16)));
      }
      const double n = static_cast<double>(sx.size());
      const double bound = std::pow(std::exp(1.0) * n / d, d);
      EXPECT_LE(static_cast<double>(dichotomies(desc, sx).size()), bound + 1e-9);
    }
  }
}

TEST(DichotomiesTest, RepresentativesAreCanonical) {
  // Representatives must coincide with the canonical consistent concept of
  // their own labeling.
  RandomStream rng(77);
  for (const auto& desc : all_classes(10)) {
    for (int round = 0; round < 20; ++round) {
      auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
      const std::size_t m = 1 + round_rng.uniform_index(5);
      UnlabeledDataset sx;
      for (std::size_t i = 0; i < m; ++i) {
        sx.push_back(static_cast<int>(round_rng.uniform_index(10)));
      }
      const auto cands = dichotomies(desc, sx);
      for (std::size_t e = 0; e < cands.size(); ++e) {
        Dataset labeled;
        for (std::size_t i = 0; i < sx.size(); ++i) {
          labeled.push_back({sx[i], cands.labelings[e][i]});
        }
        const auto canonical = consistent_concept(desc, labeled);
        ASSERT_TRUE(canonical.has_value());
        EXPECT_EQ(cands.representatives[e], *canonical);
      }
    }
  }
}

TEST(WeightedErmTest, ThresholdZeroCostExample) {
  const WeightedInstance inst = {{2, 0, Rational(1)}, {7, 1, Rational(1)}};
  const auto [concept_found, value] = weighted_erm(thresholds_class(10), inst);
  EXPECT_EQ(value, Rational(0));
  EXPECT_EQ(concept_found, make_threshold_concept(3));
}

TEST(WeightedErmTest, AllZeroWeightsPickCanonicalMinimal) {
  const WeightedInstance inst = {{2, 0, Rational(0)}, {7, 1, Rational(0)}};
  for (const auto& desc : all_classes(10)) {
    const auto [concept_found, value] = weighted_erm(desc, inst);
    EXPECT_EQ(value, Rational(0));
    EXPECT_EQ(concept_found.params, enumerate_param_tuples(desc).front());
  }
}

TEST(WeightedErmTest, ConflictingLabelsWeighHeavierSide) {
  const WeightedInstance inst = {{5, 1, Rational(1)}, {5, 0, Rational(2)}};
  const auto [concept_found, value] = weighted_erm(thresholds_class(10), inst);
  EXPECT_EQ(value, Rational(1));
  EXPECT_EQ(concept_found, make_threshold_concept(6));
}

TEST(WeightedErmTest, MatchesExhaustiveSearchOnRandomInstances) {
  RandomStream rng(202);
  for (const auto& desc : all_classes(14)) {
    for (int round = 0; round < 200; ++round) {
      auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
      const std::size_t m = 1 + round_rng.uniform_index(10);
      WeightedInstance inst;
      for (std::size_t i = 0; i < m; ++i) {
        inst.push_back(
            {static_cast<int>(round_rng.uniform_index(14)),
             static_cast<int>(round_rng.uniform_index(2)),
             Rational(static_cast<long long>(round_rng.uniform_index(5)),
                      1 + static_cast<long long>(round_rng.uniform_index(4)))});
      }
      const auto [concept_found, value] = weighted_erm(desc, inst);
      const auto [oracle_params, oracle_value] =
          exhaustive_weighted_erm(desc, inst);
      ASSERT_EQ(value, oracle_value) << class_kind_name(desc.kind);
      ASSERT_EQ(concept_found.params, oracle_params)
          << class_kind_name(desc.kind);
    }
  }
}

TEST(WeightedErmTest, RepeatedCallsAreDeterministic) {
  const WeightedInstance inst = {
      {1, 1, Rational(1, 3)}, {5, 0, Rational(1, 3)}, {9, 1, Rational(1, 3)}};
  for (const auto& desc : all_classes(12)) {
    const auto first = weighted_erm(desc, inst);
    for (int i = 0; i < 5; ++i) {
      const auto again = weighted_erm(desc, inst);
      EXPECT_EQ(again.first, first.first);
      EXPECT_EQ(again.second, first.second);
    }
  }
}

TEST(ConsistentConceptTest, ThresholdWindow) {
  const Dataset s = {{3, 0}, {6, 1}};
  const auto c = consistent_concept(thresholds_class(10), s);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, make_threshold_concept(4));
}

TEST(ConsistentConceptTest, ContradictionYieldsNone) {
  const Dataset s = {{3, 1}, {6, 0}};
  EXPECT_FALSE(consistent_concept(thresholds_class(10), s).has_value());
}

TEST(ConsistentConceptTest, EmptyDatasetIsVacuouslyConsistent) {
  for (const auto& desc : all_classes(8)) {
    const auto c = consistent_concept(desc, {});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->params, enumerate_param_tuples(desc).front());
  }
}

TEST(ConsistentConceptTest, ConsistentIffLabelingIsRealizable) {
  RandomStream rng(303);
  for (const auto& desc : all_classes(9)) {
    for (int round = 0; round < 80; ++round) {
      auto round_rng = rng.derive(static_cast<std::uint64_t>(round));
      const std::size_t m = 1 + round_rng.uniform_index(6);
      Dataset s;
      UnlabeledDataset sx;
      std::vector<std::uint8_t> labels;
      for (std::size_t i = 0; i < m; ++i) {
        const int x = static_cast<int>(round_rng.uniform_index(9));
        const int y = static_cast<int>(round_rng.uniform_index(2));
        s.push_back({x, y});
        sx.push_back(x);
        labels.push_back(static_cast<std::uint8_t>(y));
      }
      const bool realizable =
          exhaustive_labelings(desc, sx).count(labels) > 0;
      EXPECT_EQ(consistent_concept(desc, s).has_value(), realizable);
    }
  }
}

TEST(HypothesisTest, TableFactoryValidatesLength) {
  EXPECT_THROW(hypothesis_from_table(std::vector<std::uint8_t>(7, 0), 8),
               std::invalid_argument);
  const Hypothesis zero = hypothesis_from_table(std::vector<std::uint8_t>(8, 0), 8);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(zero.evaluate(x), 0);
  EXPECT_FALSE(zero.proper());
}

TEST(HypothesisTest, TableOfThresholdMatchesConcept) {
  const Concept t4 = make_threshold_concept(4);
  std::vector<std::uint8_t> bits(10);
  for (int x = 0; x < 10; ++x) bits[x] = x >= 4 ? 1 : 0;
  const Hypothesis h = hypothesis_from_table(bits, 10);
  for (int x = 0; x < 10; ++x) EXPECT_EQ(h.evaluate(x), t4.evaluate(x));
  const Hypothesis proper = to_hypothesis(t4, 10);
  EXPECT_TRUE(proper.proper());
  EXPECT_EQ(proper, h);
}

TEST(ValidationTest, UnionConceptsMustBeSortedWithGaps) {
  const auto desc = union_k_intervals_class(10, 2);
  EXPECT_NO_THROW(validate_concept(desc, make_union_concept({1, 3, 5, 7})));
  EXPECT_THROW(validate_concept(desc, make_union_concept({1, 3, 3, 7})),
               std::invalid_argument);
  EXPECT_THROW(validate_concept(desc, make_union_concept({5, 7, 1, 3})),
               std::invalid_argument);
  EXPECT_THROW(validate_concept(desc, make_union_concept({1, 1})),
               std::invalid_argument);
  EXPECT_THROW(validate_concept(desc, make_union_concept({0, 2, 4, 6, 8, 9})),
               std::invalid_argument);
}

}  // namespace
}  // namespace privlearn
