// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/analysis.hpp"
#include "pgfree/constructions.hpp"

namespace pgfree {
namespace {

TEST(Analyze, K5Report) {
  const AnalysisReport rep = analyze(k5(), {3});
  EXPECT_EQ(rep.size, 10u);
  EXPECT_EQ(rep.matroid_rank, 4);
  EXPECT_FALSE(rep.pg_freeness.at(3).found);
  ASSERT_TRUE(rep.critical_number.exact());
  EXPECT_EQ(rep.critical_number.value(), 3);
  EXPECT_EQ(rep.triangle_count_ordered, oracle::ordered_triangles(k5()));
  EXPECT_TRUE(rep.triangle_count_cross_checked);
  EXPECT_EQ(rep.density, Rational(5, 8));
  EXPECT_EQ(rep.epsilon_min, oracle::hyperplane_epsilon(k5()));
  // |E| equals the threshold, so the flat search is not run.
  EXPECT_FALSE(rep.flat_search.has_value());
}

TEST(Analyze, AffineSet) {
  const AnalysisReport rep = analyze(affine_set(5, 1), {2});
  EXPECT_FALSE(rep.pg_freeness.at(2).found);
  EXPECT_EQ(rep.critical_number.value(), 1);
  EXPECT_EQ(rep.epsilon_min, Rational(1, 2));
  EXPECT_EQ(rep.triangle_count_ordered, 0u);
  ASSERT_TRUE(rep.flat_search.has_value());
  EXPECT_EQ(rep.flat_search->level, 2);
  EXPECT_TRUE(rep.flat_search->result.found);
}

TEST(Analyze, EmptySetIsDegenerate) {
  const AnalysisReport rep = analyze(PointSet(4), {2});
  EXPECT_TRUE(rep.degenerate_empty);
  EXPECT_EQ(rep.size, 0u);
  EXPECT_EQ(rep.critical_number.value(), 0);
  const Json j = to_json(rep);
  EXPECT_TRUE(j["degenerate"]["empty_set"].get<bool>());
}

TEST(Analyze, WitnessForNonFreeSet) {
  const AnalysisReport rep = analyze(PointSet::full(4), {2, 3});
  ASSERT_TRUE(rep.pg_freeness.at(3).found);
  rep.pg_freeness.at(3).subspace->for_each_point([](Word p) { EXPECT_LT(p, 16u); });
  EXPECT_FALSE(rep.flat_search.has_value());
}

TEST(Analyze, FlatSearchUsesLargestEligibleLevel) {
  const AnalysisReport rep = analyze(bose_burton(5, 4), {2, 3, 4});
  ASSERT_TRUE(rep.flat_search.has_value());
  EXPECT_EQ(rep.flat_search->level, 4);
  EXPECT_TRUE(rep.flat_search->result.found);
}

TEST(Analyze, JsonCarriesVersions) {
  const Json j = to_json(analyze(k5(), {3}));
  EXPECT_EQ(j["format_version"].get<int>(), kFormatVersion);
  EXPECT_EQ(j["library_version"].get<std::string>(), kLibraryVersion);
  EXPECT_EQ(j["critical_number"]["value"].get<int>(), 3);
  EXPECT_EQ(j["triangle_count_ordered"].get<int>(), 60);
}

TEST(Analyze, BudgetedCriticalNumberReportsBounds) {
  std::mt19937_64 rng(109);
  const PointSet e = oracle::random_set(10, rng);
  AnalyzeOptions opts;
  opts.chi_work_budget = 5;
  const AnalysisReport rep = analyze(e, {3}, opts);
  EXPECT_LE(rep.critical_number.lower, rep.critical_number.upper);
  const Json j = to_json(rep);
  EXPECT_EQ(j["critical_number"]["exact"].get<bool>(), rep.critical_number.exact());
}

TEST(Analyze, RejectsBadLevels) { EXPECT_THROW(analyze(k5(), {0}), InvalidArgument); }

}  // namespace
}  // namespace pgfree
