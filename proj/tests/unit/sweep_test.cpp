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
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pgfree/sweep.hpp"

namespace pgfree {
namespace {

SweepConfig exhaustive(int r, int n, const std::string& checks) {
  SweepConfig cfg;
  cfg.rank = r;
  cfg.level = n;
  cfg.mode = SweepMode::exhaustive;
  cfg.checks = parse_checks(checks);
  return cfg;
}

TEST(Checks, Tokens) {
  EXPECT_EQ(parse_checks("all").size(), 9u);
  const auto some = parse_checks("cor-1.3,bose-burton,cor-1.3");
  ASSERT_EQ(some.size(), 2u);
  EXPECT_EQ(check_token(some[0]), "bose-burton");
  EXPECT_EQ(check_token(some[1]), "cor-1.3");
  EXPECT_THROW(parse_checks("thm-9.9"), InvalidArgument);
  EXPECT_THROW(parse_checks(""), InvalidArgument);
}

TEST(Config, Validation) {
  SweepConfig cfg = exhaustive(5, 3, "gs");
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.mode = SweepMode::random;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.sample_count = 1;
  EXPECT_NO_THROW(cfg.validate());
  cfg.level = 6;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(Sweep, ExhaustiveRankThreeCountsByOracle) {
  const SweepOutcome out = run_sweep(exhaustive(3, 2, "bose-burton"));
  EXPECT_EQ(out.stats.visited, 128u);
  const CheckStats& s = out.stats.checks.at(CheckKind::bose_burton);
  std::uint64_t free_sets = 0;
  for (std::uint64_t m = 0; m < 128; ++m) free_sets += oracle::pg_free(PointSet::from_mask(3, m), 2);
  EXPECT_EQ(s.checked, free_sets);
  EXPECT_EQ(s.checked + s.skipped, 128u);
  EXPECT_EQ(s.violations, 0u);
  EXPECT_EQ(s.maxima.at("free_size").value, Rational(4));
  EXPECT_EQ(out.total_violations(), 0u);
}

TEST(Sweep, GatingCountsHypothesisSets) {
  const SweepOutcome out = run_sweep(exhaustive(3, 3, "thm-1.1,cor-1.3"));
  // Fano-free at r = 3 means not the full plane; above (1 - 3/8) 8 = 5 means 6 points.
  for (CheckKind k : {CheckKind::triangle_free_flat, CheckKind::critical_dichotomy}) {
    const CheckStats& s = out.stats.checks.at(k);
    EXPECT_EQ(s.checked, 7u);
    EXPECT_EQ(s.failed, 0u);
  }
}

TEST(Sweep, EveryCheckRunsCleanAtRankThree) {
  const SweepOutcome out = run_sweep(exhaustive(3, 3, "all"));
  EXPECT_EQ(out.total_violations(), 0u);
  EXPECT_EQ(out.stats.checks.size(), 9u);
  for (const auto& [kind, s] : out.stats.checks) EXPECT_EQ(s.checked + s.skipped, 128u) << check_token(kind);
}

TEST(Sampling, StreamsDependOnSeedAndIndexOnly) {
  const PointSet a = sample_point_set(8, 42, 17, std::nullopt);
  const PointSet b = sample_point_set(8, 42, 17, std::nullopt);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_point_set(8, 42, 18, std::nullopt));
  EXPECT_NE(a, sample_point_set(8, 43, 17, std::nullopt));
}

TEST(Sampling, DensityFilterRejects) {
  std::uint64_t rejected = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const PointSet e = sample_point_set(6, 1, i, Rational(9, 16), &rejected);
    EXPECT_GT(16 * e.size(), 9u * 64);
  }
  EXPECT_GT(rejected, 0u);
}

TEST(Sweep, OutcomeIsIndependentOfWorkers) {
  SweepConfig cfg;
  cfg.rank = 6;
  cfg.level = 3;
  cfg.mode = SweepMode::random;
  cfg.sample_count = 300;
  cfg.rng_seed = 99;
  cfg.checks = parse_checks("all");
  cfg.density_filter = Rational(1, 2);
  cfg.workers = 1;
  const std::string one = to_json(run_sweep(cfg)).dump();
  cfg.workers = 4;
  const std::string four = to_json(run_sweep(cfg)).dump();
  EXPECT_EQ(one, four);
  cfg.rng_seed = 100;
  EXPECT_NE(one, to_json(run_sweep(cfg)).dump());
}

TEST(Sweep, CsvHasOneRowPerRecord) {
  const SweepOutcome out = run_sweep(exhaustive(3, 2, "bose-burton,thm-3.1"));
  const std::string csv = extremal_csv(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "size,rank,chi,T_E,epsilon_min,flat_found,flat_size");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), out.records.size() + 1);
}

TEST(Sweep, InexactCriticalNumberIsAResourceError) {
  std::mt19937_64 rng(127);
  const PointSet e = oracle::random_set(12, rng);
  const CriticalNumber bounds = critical_number_bounded(e, 1);
  ASSERT_FALSE(bounds.exact());
  SetFacts facts(e, 1);
  EXPECT_THROW(facts.chi(), ResourceCapError);
  SetFacts unlimited(PointSet::full(4), 0);
  EXPECT_EQ(unlimited.chi(), 4);
}

}  // namespace
}  // namespace pgfree
