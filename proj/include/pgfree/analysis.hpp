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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgfree/io.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/spectral.hpp"
#include "pgfree/structure.hpp"
#include "pgfree/version.hpp"

namespace pgfree {

struct AnalyzeOptions {
  /// Work budget for the critical-number search; 0 = unlimited.
  std::uint64_t chi_work_budget = 400'000'000;
  /// The O(|E|^2) triangle cross-check runs up to this ambient rank.
  int naive_cross_check_max_rank = 18;
};

struct FlatSearchSummary {
  int level = 0;
  StructureResult result;
};

struct AnalysisReport {
  int rank = 0;
  std::size_t size = 0;
  int matroid_rank = 0;
  Rational density;
  std::map<int, FreenessWitness> pg_freeness;
  CriticalNumber critical_number;
  std::uint64_t triangle_count_ordered = 0;
  bool triangle_count_cross_checked = false;
  Rational epsilon_min;
  Word worst_gamma = 1;
  std::optional<FlatSearchSummary> flat_search;
  bool degenerate_empty = false;
};

/// Full report for one point set. The flat search runs at the largest
/// requested level whose hypotheses (PG(n-1,2)-free, |E| above
/// (1 - 3/2^n) 2^r) hold.
inline AnalysisReport analyze(const PointSet& e, const std::vector<int>& levels, const AnalyzeOptions& opts = {}) {
  AnalysisReport rep;
  rep.rank = e.rank();
  rep.size = e.size();
  rep.degenerate_empty = e.empty();
  rep.matroid_rank = matroid_rank(e);
  rep.density = Rational(static_cast<Int128>(rep.size), pow2(rep.rank));

  const Spectrum spectrum = walsh_hadamard(e);
  rep.triangle_count_ordered = triangle_count_spectral(spectrum);
  if (rep.rank <= opts.naive_cross_check_max_rank) {
    if (triangle_count_naive(e) != rep.triangle_count_ordered) {
      throw InternalInconsistency("spectral and naive triangle counts disagree");
    }
    rep.triangle_count_cross_checked = true;
  }
  if (rep.triangle_count_ordered % 6 != 0) throw InternalInconsistency("T_E not divisible by 6");
  const UniformityReport u = uniformity(spectrum);
  rep.epsilon_min = u.epsilon_min;
  rep.worst_gamma = u.worst_gamma;

  for (int n : levels) {
    if (n < 1) throw InvalidArgument("levels must be >= 1");
    rep.pg_freeness[n] = pg_witness(e, n);
  }
  rep.critical_number = critical_number_bounded(e, opts.chi_work_budget);

  for (auto it = rep.pg_freeness.rbegin(); it != rep.pg_freeness.rend(); ++it) {
    const int n = it->first;
    if (n < 2 || n > rep.rank || it->second.found || !above_structure_threshold(e, n)) continue;
    rep.flat_search = FlatSearchSummary{n, find_triangle_free_flat(e, n, FlatStrategy::descent).result};
    break;
  }
  return rep;
}

inline Json to_json(const CriticalNumber& c) {
  Json j{{"exact", c.exact()}};
  j["value"] = c.exact() ? Json(c.lower) : Json(nullptr);
  j["lower"] = c.lower;
  j["upper"] = c.upper;
  return j;
}

inline Json to_json(const AnalysisReport& rep) {
  Json freeness = Json::object();
  for (const auto& [n, w] : rep.pg_freeness) freeness[std::to_string(n)] = to_json(w);
  Json j{{"format_version", kFormatVersion},
         {"library_version", kLibraryVersion},
         {"rank", rep.rank},
         {"size", rep.size},
         {"matroid_rank", rep.matroid_rank},
         {"density", to_json(rep.density)},
         {"pg_freeness", freeness},
         {"critical_number", to_json(rep.critical_number)},
         {"triangle_count_ordered", rep.triangle_count_ordered},
         {"triangle_count_cross_checked", rep.triangle_count_cross_checked},
         {"epsilon_min", to_json(rep.epsilon_min)},
         {"worst_gamma", rep.worst_gamma}};
  if (rep.flat_search) {
    Json fs = to_json(rep.flat_search->result);
    fs["level"] = rep.flat_search->level;
    j["flat_search"] = fs;
  } else {
    j["flat_search"] = nullptr;
  }
  j["degenerate"] = Json{{"empty_set", rep.degenerate_empty}};
  return j;
}

}  // namespace pgfree
