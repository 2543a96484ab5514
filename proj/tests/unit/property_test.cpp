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

// Invariants checked on seeded random point sets.

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/constructions.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"

namespace pgfree {
namespace {

class RandomSets : public ::testing::TestWithParam<int> {
 protected:
  std::mt19937_64 rng{static_cast<std::uint64_t>(1000 + GetParam())};
};

TEST_P(RandomSets, HyperplaneCountsFromCoefficients) {
  const int r = GetParam();
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet e = oracle::random_set(r, rng);
    const Spectrum s = walsh_hadamard(e);
    for (Word g = 1; g < e.vector_count(); g += 1 + static_cast<Word>(rng() % 7)) {
      const std::int64_t inside = static_cast<std::int64_t>(e.count_in(hyperplane_of(r, g)));
      ASSERT_EQ(2 * inside, static_cast<std::int64_t>(e.size()) + s[g]);
    }
  }
}

TEST_P(RandomSets, LinearMapsPreserveEverything) {
  const int r = GetParam();
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet e = oracle::random_set(r, rng, 0.6);
    const PointSet f = apply_linear_map(e, random_invertible_columns(r, rng), r);
    EXPECT_EQ(triangle_count_spectral(e), triangle_count_spectral(f));
    EXPECT_EQ(uniformity(e).epsilon_min, uniformity(f).epsilon_min);
    if (r <= 8) {
      EXPECT_EQ(critical_number(e), critical_number(f));
    }
    EXPECT_EQ(matroid_rank(e), matroid_rank(f));
    for (int n = 2; n <= std::min(r, 4); ++n) EXPECT_EQ(count_pg_copies(e, n), count_pg_copies(f, n));
  }
}

TEST_P(RandomSets, SubsetsAreMonotone) {
  const int r = GetParam();
  for (int trial = 0; trial < 5; ++trial) {
    const PointSet big = oracle::random_set(r, rng, 0.7);
    PointSet small = big;
    for (Word p : big.points()) {
      if (rng() & 1) small.erase(p);
    }
    if (r <= 8) {
      EXPECT_LE(critical_number(small), critical_number(big));
    }
    EXPECT_LE(triangle_count_spectral(small), triangle_count_spectral(big));
    for (int n = 2; n <= std::min(r, 4); ++n) {
      if (is_pg_free(big, n)) {
        EXPECT_TRUE(is_pg_free(small, n));
      }
    }
  }
}

TEST_P(RandomSets, CountingBoundAndConeIdentity) {
  const int r = GetParam();
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet e = oracle::random_set(r, rng, 0.1 + 0.08 * trial);
    const Spectrum s = walsh_hadamard(e);
    EXPECT_TRUE(counting_bound_check(s, uniformity(s).epsilon_min).holds);
    std::uint64_t sum = 0;
    const Int128 bound = 2 * static_cast<Int128>(e.size()) - pow2(r);
    e.for_each([&](Word p) {
      const std::size_t c = cone(e, p).size();
      EXPECT_GE(static_cast<Int128>(c), bound);
      sum += c;
    });
    EXPECT_EQ(sum, triangle_count_spectral(s));
  }
}

TEST_P(RandomSets, CriticalNumberWitnessesAvoidE) {
  const int r = GetParam();
  for (int trial = 0; trial < 5; ++trial) {
    // Above rank 9, stay inside the complement of a hyperplane, where the
    // search ends at the first target.
    const PointSet e = r <= 9 ? oracle::random_set(r, rng, 0.3 + 0.1 * trial)
                              : oracle::random_set(r, rng, 0.5).intersect(bose_burton(r, 2));
    const int chi = critical_number(e);
    // A corank-chi subspace in the complement exists, one of corank chi-1 does not.
    SubspaceSearch outside(e.complement());
    EXPECT_EQ(outside.find(r - chi), SearchStatus::found);
    if (chi >= 1 && r - chi + 1 <= r) {
      SubspaceSearch again(e.complement());
      EXPECT_EQ(again.find(r - chi + 1), SearchStatus::absent);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, RandomSets, ::testing::Range(3, 12));

TEST(Freeness, DirectSumWithAFreeSummand) {
  // PG(n-1,2) inside A + B lies in A or B when both summands are
  // triangle-free only if n = 2; here we just check the n = 2 case.
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet a = affine_set(3, 1 + static_cast<Word>(rng() % 7));
    const PointSet b = affine_set(2, 1 + static_cast<Word>(rng() % 3));
    const PointSet s = direct_sum(a, b);
    EXPECT_EQ(is_pg_free(s, 2), oracle::pg_free(s, 2));
  }
}

}  // namespace
}  // namespace pgfree
