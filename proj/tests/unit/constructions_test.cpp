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

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/constructions.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"

namespace pgfree {
namespace {

TEST(BoseBurton, MeetsTheBoundAndIsFree) {
  for (int r = 2; r <= 6; ++r) {
    for (int n = 2; n <= r; ++n) {
      const PointSet e = bose_burton(r, n);
      EXPECT_EQ(e.size(), (std::size_t{1} << r) - (std::size_t{1} << (r - n + 1))) << r << "," << n;
      EXPECT_TRUE(oracle::pg_free(e, n));
      EXPECT_LE(oracle::critical_number(e), n - 1);
      // Adding any point creates a copy.
      e.complement().for_each([&](Word p) {
        PointSet more = e;
        more.insert(p);
        EXPECT_FALSE(oracle::pg_free(more, n));
      });
    }
  }
  EXPECT_THROW(bose_burton(4, 1), InvalidArgument);
  EXPECT_THROW(bose_burton(4, 5), InvalidArgument);
}

TEST(BoseBurton, CanonicalWords) {
  // Complement of span{e_1, e_2} at r = 4: every point with a high bit set.
  const PointSet e = bose_burton(4, 3);
  e.for_each([](Word p) { EXPECT_GE(p, 4u); });
  EXPECT_EQ(e.size(), 12u);
}

TEST(AffineSet, SizeAndUniformity) {
  for (int r = 1; r <= 10; ++r) {
    const PointSet e = affine_set(r, Word{1} << (r - 1));
    EXPECT_EQ(e.size(), std::size_t{1} << (r - 1));
    EXPECT_EQ(oracle::hyperplane_epsilon(e), Rational(1, 2));
    EXPECT_EQ(triangle_count_naive(e), 0u);
  }
  EXPECT_THROW(affine_set(3, 0), InvalidArgument);
  EXPECT_THROW(affine_set(3, 8), InvalidArgument);
}

TEST(Graphic, SmallCompleteGraphs) {
  const PointSet k3 = graphic_representation(complete_graph(3));
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_EQ(k3.rank(), 2);
  EXPECT_EQ(oracle::ordered_triangles(k3), 6u);

  const PointSet k4 = graphic_representation(complete_graph(4));
  EXPECT_EQ(k4.size(), 6u);
  EXPECT_EQ(k4.rank(), 3);
  EXPECT_EQ(matroid_rank(k4), 3);
}

TEST(Graphic, K5IsTheTightnessExample) {
  const PointSet e = k5();
  EXPECT_EQ(e.size(), 10u);
  EXPECT_EQ(e.rank(), 4);
  EXPECT_EQ(matroid_rank(e), 4);
  EXPECT_TRUE(oracle::pg_free(e, 3));
  EXPECT_EQ(oracle::critical_number(e), 3);
  EXPECT_EQ(Rational(static_cast<Int128>(e.size())), density_threshold(4, 3, 3));
  // Ten triangles of K_5, each counted six times.
  EXPECT_EQ(oracle::ordered_triangles(e), 60u);
  EXPECT_EQ(k5(), e);
}

TEST(Graphic, RejectsBadGraphs) {
  EXPECT_THROW(graphic_representation(GraphSpec{3, {{0, 0}}}), InvalidArgument);
  EXPECT_THROW(graphic_representation(GraphSpec{3, {{0, 1}, {1, 0}}}), InvalidArgument);
  EXPECT_THROW(graphic_representation(GraphSpec{3, {{0, 3}}}), InvalidArgument);
  EXPECT_THROW(graphic_representation(GraphSpec{3, {}}), InvalidArgument);
}

TEST(Graphic, ForestIsIndependent) {
  const PointSet path = graphic_representation(GraphSpec{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}});
  EXPECT_EQ(path.size(), 4u);
  EXPECT_EQ(path.rank(), 4);
  EXPECT_EQ(oracle::ordered_triangles(path), 0u);
}

TEST(DirectSum, TriangleCountsAdd) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet a = oracle::random_set(1 + trial % 4, rng);
    const PointSet b = oracle::random_set(1 + (trial / 4) % 4, rng);
    const PointSet s = direct_sum(a, b);
    EXPECT_EQ(s.rank(), a.rank() + b.rank());
    EXPECT_EQ(s.size(), a.size() + b.size());
    EXPECT_EQ(oracle::ordered_triangles(s), oracle::ordered_triangles(a) + oracle::ordered_triangles(b));
  }
  const PointSet b = k5();
  const PointSet s = direct_sum(PointSet(2), b);
  EXPECT_EQ(s.size(), b.size());
  EXPECT_TRUE(oracle::linearly_equivalent(restrict_to_flat(s, Flat::span(6, {4, 8, 16, 32})).set, b));
  EXPECT_THROW(direct_sum(PointSet(20), PointSet(5)), ResourceCapError);
}

TEST(Extensions, BlowUpAndDoublingPreserveFreeness) {
  const PointSet e = k5();
  const PointSet b = blow_up(e, 1);
  EXPECT_EQ(b.size(), 20u);
  EXPECT_TRUE(oracle::pg_free(b, 3));
  const PointSet d = doubling(e);
  EXPECT_EQ(d.size(), 26u);
  EXPECT_TRUE(oracle::pg_free(d, 4));
  EXPECT_FALSE(oracle::pg_free(d, 3));
}

TEST(Extensions, K5ExtensionSitsAtTheThreshold) {
  for (int n = 3; n <= 5; ++n) {
    for (int r = n + 1; r <= 8; ++r) {
      const PointSet e = k5_extension(r, n);
      EXPECT_EQ(Rational(static_cast<Int128>(e.size())), density_threshold(r, 3, n)) << r << "," << n;
      EXPECT_TRUE(is_pg_free(e, n));
      if (r <= 6) {
        EXPECT_TRUE(oracle::pg_free(e, n));
      }
    }
  }
  EXPECT_THROW(k5_extension(4, 4), InvalidArgument);
}

TEST(LinearMaps, ImagesAreEquivalent) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet a = oracle::random_set(4, rng);
    const PointSet b = apply_linear_map(a, random_invertible_columns(4, rng), 4);
    EXPECT_EQ(a.size(), b.size());
    EXPECT_EQ(oracle::ordered_triangles(a), oracle::ordered_triangles(b));
    EXPECT_TRUE(are_linearly_equivalent(a, b));
    EXPECT_TRUE(oracle::linearly_equivalent(a, b));
  }
  EXPECT_FALSE(are_linearly_equivalent(k5(), bose_burton(4, 3)));
  PointSet other = k5();
  other.erase(other.points().front());
  other.insert(other.complement().points().front());
  EXPECT_EQ(are_linearly_equivalent(k5(), other), oracle::linearly_equivalent(k5(), other));
}

TEST(TightnessExplorer, RankFourFindsK5) {
  const auto found = tightness_explorer(4, 3, 2000, 7);
  ASSERT_FALSE(found.empty());
  bool has_k5 = false;
  for (const PointSet& e : found) {
    EXPECT_EQ(e.size(), 10u);
    EXPECT_TRUE(oracle::pg_free(e, 3));
    EXPECT_FALSE(oracle::has_dense_triangle_free_flat(e, 1));
    has_k5 = has_k5 || oracle::linearly_equivalent(e, k5());
  }
  EXPECT_TRUE(has_k5);
  EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
}

TEST(TightnessExplorer, RankFiveWitnessesAreCertified) {
  for (const PointSet& e : tightness_explorer(5, 3, 1000, 3)) {
    EXPECT_EQ(e.size(), 20u);
    EXPECT_TRUE(oracle::pg_free(e, 3));
    EXPECT_FALSE(oracle::has_dense_triangle_free_flat(e, 1));
  }
}

TEST(TightnessExplorer, IsDeterministic) {
  EXPECT_EQ(tightness_explorer(5, 3, 600, 11), tightness_explorer(5, 3, 600, 11));
  EXPECT_THROW(tightness_explorer(3, 3, 10), InvalidArgument);
}

}  // namespace
}  // namespace pgfree
