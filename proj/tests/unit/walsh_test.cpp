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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/walsh.hpp"

namespace pgfree {
namespace {

TEST(Fwht, MatchesDirectTransform) {
  std::mt19937_64 rng(5);
  for (int r = 0; r <= 9; ++r) {
    std::vector<std::int64_t> f(std::size_t{1} << r);
    for (auto& x : f) x = static_cast<std::int64_t>(rng() % 21) - 10;
    std::vector<std::int64_t> g = f;
    fwht_in_place(std::span<std::int64_t>(g));
    EXPECT_EQ(g, oracle::fourier(f)) << "r=" << r;
  }
}

TEST(Fwht, TwiceScalesByLength) {
  std::mt19937_64 rng(6);
  std::vector<std::int64_t> f(1 << 12);
  for (auto& x : f) x = static_cast<std::int64_t>(rng() % 3);
  std::vector<std::int64_t> g = f;
  fwht_in_place(std::span<std::int64_t>(g));
  fwht_in_place(std::span<std::int64_t>(g));
  for (std::size_t i = 0; i < f.size(); ++i) ASSERT_EQ(g[i], f[i] << 12);
}

TEST(Fwht, DeltaBecomesConstant) {
  std::vector<std::int64_t> f(64, 0);
  f[0] = 1;
  fwht_in_place(std::span<std::int64_t>(f));
  for (auto x : f) EXPECT_EQ(x, 1);
}

}  // namespace
}  // namespace pgfree
