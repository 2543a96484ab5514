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

// The simple binary matroid M = G|E of a point set: rank, PG(n-1,2)
// subgeometries, triangles, critical number and restriction to flats.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/walsh.hpp"

namespace pgfree {

inline int matroid_rank(const PointSet& e) {
  const std::vector<Word> pts = e.points();
  return rank_of(pts);
}

/// Whether |E| exceeds (1 - c/2^k) * 2^r, decided exactly.
inline bool exceeds_threshold(std::size_t size, int r, Int128 c, int k) {
  return Rational(static_cast<Int128>(size)) > density_threshold(r, c, k);
}

/// Main density hypothesis: |E| > (1 - 3/2^n) * 2^r.
inline bool above_structure_threshold(const PointSet& e, int n) {
  return exceeds_threshold(e.size(), e.rank(), 3, n);
}

enum class SearchStatus { found, absent, budget_exhausted };

/// Depth-first search for subspaces whose nonzero points all lie in a given
/// point set. Bases are built greedily: each new basis vector is the least
/// element of its coset modulo the span so far, and exceeds the previous
/// one. Every subspace therefore has exactly one search path, and the first
/// one found is the one with the lexicographically least such basis.
///
/// The candidate list at depth d holds the points q > p_d for which q + s is
/// allowed for every s in the current span. Extending by p keeps exactly
/// the q > p in that list whose translate q + p is also in it.
class SubspaceSearch {
 public:
  /// `work_budget` bounds the number of candidate inspections across all
  /// calls; 0 means unlimited.
  explicit SubspaceSearch(const PointSet& allowed, std::uint64_t work_budget = 0)
      : rank_(allowed.rank()),
        budget_(work_budget),
        level_(allowed.vector_count(), -1),
        roots_(allowed.points()) {
    for (Word q : roots_) level_[q] = 0;
  }

  std::uint64_t work() const noexcept { return work_; }

  /// Searches for a rank-k subspace. On `found`, `basis` holds the greedy
  /// basis.
  SearchStatus find(int k, std::vector<Word>* basis = nullptr) {
    if (k < 0) throw InvalidArgument("subspace rank must be nonnegative");
    target_ = k;
    count_mode_ = false;
    chosen_.clear();
    if (k > rank_) return SearchStatus::absent;
    try {
      const bool hit = descend(0, roots_, 0);
      if (hit && basis != nullptr) *basis = chosen_;
      return hit ? SearchStatus::found : SearchStatus::absent;
    } catch (const BudgetHit&) {
      return SearchStatus::budget_exhausted;
    }
  }

  /// Number of rank-k subspaces inside the set, stopping at `limit`.
  std::uint64_t count(int k, std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
    target_ = k;
    count_mode_ = true;
    count_ = 0;
    count_limit_ = limit;
    chosen_.clear();
    if (k > rank_) return 0;
    try {
      descend(0, roots_, 0);
    } catch (const BudgetHit&) {
      throw ResourceCapError("subspace count exceeded its work budget");
    }
    return count_;
  }

 private:
  struct BudgetHit {};

  bool descend(int depth, const std::vector<Word>& cands, Word pivots) {
    if (depth == target_) {
      if (!count_mode_) return true;
      ++count_;
      return count_ >= count_limit_;
    }
    const std::size_t need = (std::size_t{1} << target_) - (std::size_t{1} << depth);
    if (cands.size() < need) return false;
    std::vector<Word> next;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      // Every later point of the subspace is >= the next basis vector.
      if (cands.size() - i < need) break;
      const Word p = cands[i];
      if (p & pivots) continue;
      work_ += cands.size() - i;
      if (budget_ != 0 && work_ > budget_) throw BudgetHit{};
      next.clear();
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const Word q = cands[j];
        if (level_[q ^ p] >= depth) next.push_back(q);
      }
      for (Word q : next) level_[q] = static_cast<std::int8_t>(depth + 1);
      chosen_.push_back(p);
      bool stop;
      try {
        stop = descend(depth + 1, next, pivots | (Word{1} << pivot_of(p)));
      } catch (...) {
        for (Word q : next) level_[q] = static_cast<std::int8_t>(depth);
        throw;
      }
      for (Word q : next) level_[q] = static_cast<std::int8_t>(depth);
      if (stop) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int rank_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::vector<std::int8_t> level_;
  std::vector<Word> roots_;
  std::vector<Word> chosen_;
  int target_ = 0;
  bool count_mode_ = false;
  std::uint64_t count_ = 0;
  std::uint64_t count_limit_ = 0;
};

/// Outcome of a PG(n-1,2) search. `subspace`, when present, is a rank-n
/// flat with every point in E.
struct FreenessWitness {
  bool found = false;
  std::optional<Flat> subspace;
};

/// Searches E for a copy of PG(n-1,2); n = 2 finds triangles, n = 3 fanos.
inline FreenessWitness pg_witness(const PointSet& e, int n) {
  if (n < 1) throw InvalidArgument("PG(n-1,2) requires n >= 1");
  if (n > e.rank() || e.size() < (std::size_t{1} << n) - 1) return {};
  SubspaceSearch search(e);
  std::vector<Word> basis;
  if (search.find(n, &basis) != SearchStatus::found) return {};
  return {true, Flat::from_basis(e.rank(), basis)};
}

inline bool is_pg_free(const PointSet& e, int n) { return !pg_witness(e, n).found; }

/// Number of PG(n-1,2) copies contained in E.
inline std::uint64_t count_pg_copies(const PointSet& e, int n) {
  if (n < 1) throw InvalidArgument("PG(n-1,2) requires n >= 1");
  SubspaceSearch search(e);
  return search.count(n);
}

/// T_E: ordered triples (x, y, z) of E with x + y + z = 0, by the pair loop.
inline std::uint64_t triangle_count_naive(const PointSet& e) {
  const std::vector<Word> pts = e.points();
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Word x = pts[i];
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      pairs += e.contains(x ^ pts[j]) ? 1 : 0;
    }
  }
  return 2 * pairs;
}

/// A re-coordinatized copy of E inside a flat, with the map back out.
struct Restriction {
  PointSet set;
  CoordinateMap map;
};

inline Restriction restrict_to_flat(const PointSet& e, const Flat& f) {
  if (f.ambient_rank() != e.rank()) throw InvalidArgument("flat and point set ambients differ");
  if (f.rank() < 1) throw InvalidArgument("cannot restrict to the empty flat");
  CoordinateMap map(e.rank(), f.basis());
  PointSet local(f.rank());
  Word global = 0;
  Word local_word = 0;
  const std::size_t n = f.point_count();
  for (std::size_t i = 1; i <= n; ++i) {
    const int bit = std::countr_zero(i);
    global ^= f.basis()[bit];
    local_word ^= Word{1} << bit;
    if (e.contains(global)) local.insert(local_word);
  }
  return {std::move(local), std::move(map)};
}

/// Exact critical number, or certified bounds when the search budget ran out.
struct CriticalNumber {
  int lower = 0;
  int upper = 0;
  bool exact() const noexcept { return lower == upper; }
  int value() const {
    if (!exact()) throw ResourceCapError("critical number is only bounded");
    return lower;
  }
};

namespace detail {

// Upper bound on the critical number: repeatedly cut by the hyperplane that
// keeps the fewest points of E, until nothing of E is left.
inline int greedy_critical_upper_bound(const PointSet& e) {
  PointSet current = e;
  int steps = 0;
  while (!current.empty()) {
    const int r = current.rank();
    if (r == 1) return steps + 1;
    std::vector<std::int64_t> f(current.vector_count(), 0);
    current.for_each([&](Word p) { f[p] = 1; });
    fwht_in_place(std::span<std::int64_t>(f));
    Word best = 1;
    for (Word g = 2; g < f.size(); ++g) {
      if (f[g] < f[best]) best = g;
    }
    current = restrict_to_flat(current, hyperplane_of(r, best)).set;
    ++steps;
  }
  return steps;
}

}  // namespace detail

/// chi(M): least c such that some corank-c flat of G misses E. Targets are
/// tried in order c = 0, 1, 2, ...; each failed target is a certified lower
/// bound. A nonzero `work_budget` caps the search; when it is exhausted the
/// result carries [lower, greedy upper] bounds instead of an exact value.
inline CriticalNumber critical_number_bounded(const PointSet& e, std::uint64_t work_budget) {
  const int r = e.rank();
  if (e.empty()) return {0, 0};
  const PointSet outside = e.complement();
  SubspaceSearch search(outside, work_budget);
  for (int c = 1; c <= r; ++c) {
    const int k = r - c;
    if (k == 0) return {r, r};
    if (outside.size() < (std::size_t{1} << k) - 1) continue;
    switch (search.find(k)) {
      case SearchStatus::found:
        return {c, c};
      case SearchStatus::absent:
        break;
      case SearchStatus::budget_exhausted:
        return {c, std::max(c, detail::greedy_critical_upper_bound(e))};
    }
  }
  return {r, r};
}

inline int critical_number(const PointSet& e) { return critical_number_bounded(e, 0).value(); }

struct DichotomyCheck {
  int chi = 0;
  bool holds = false;
};

/// For a PG(n-1,2)-free E with |E| > (1 - 3/2^n) 2^r, whether chi is n-1 or n.
inline DichotomyCheck check_critical_number_dichotomy(const PointSet& e, int n) {
  if (n < 2 || n > e.rank()) throw HypothesisError("requires r >= n >= 2");
  if (!above_structure_threshold(e, n)) {
    throw HypothesisError("|E| = " + std::to_string(e.size()) + " does not exceed " +
                          density_threshold(e.rank(), 3, n).str());
  }
  if (const auto w = pg_witness(e, n); w.found) {
    throw HypothesisError("E contains a copy of PG(" + std::to_string(n - 1) + ",2)");
  }
  const int chi = critical_number(e);
  return {chi, chi == n - 1 || chi == n};
}

}  // namespace pgfree
