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

// Structural search for dense PG(n-1,2)-free sets: cones, hyperplane size
// bounds, PG-free hyperplanes and triangle-free flats of corank n-2.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"

namespace pgfree {

/// E_p = {x in E - {p} : x + p in E}, the points on E-lines through p.
inline PointSet cone(const PointSet& e, Word p) {
  if (!e.contains(p)) throw InvalidArgument("cone apex " + std::to_string(p) + " is not in E");
  PointSet out(e.rank());
  e.for_each([&](Word x) {
    if (x != p && e.contains(x ^ p)) out.insert(x);
  });
  return out;
}

namespace detail {

inline std::string witness_text(const FreenessWitness& w) {
  std::string s = "[";
  if (w.subspace) {
    for (std::size_t i = 0; i < w.subspace->basis().size(); ++i) {
      s += (i ? "," : "") + std::to_string(w.subspace->basis()[i]);
    }
  }
  return s + "]";
}

inline void require_pg_free(const PointSet& e, int n) {
  if (const auto w = pg_witness(e, n); w.found) {
    throw HypothesisError("E contains PG(" + std::to_string(n - 1) + ",2) spanned by " +
                          witness_text(w));
  }
}

}  // namespace detail

struct ConeLemmaReport {
  std::size_t cone_size = 0;
  Int128 size_bound = 0;  // 2|E| - 2^r, may be negative
  Int128 slack = 0;       // cone_size - size_bound
  bool cone_pg_free = false;
};

/// For PG(n-1,2)-free E and p in E: the cone is PG(n-2,2)-free and
/// |E_p| >= 2|E| - 2^r.
inline ConeLemmaReport check_cone_lemma(const PointSet& e, Word p, int n) {
  if (n < 2 || n > e.rank()) throw HypothesisError("requires r >= n >= 2");
  if (!e.contains(p)) throw HypothesisError("apex " + std::to_string(p) + " is not in E");
  detail::require_pg_free(e, n);
  const PointSet ep = cone(e, p);
  ConeLemmaReport rep;
  rep.cone_size = ep.size();
  rep.size_bound = 2 * static_cast<Int128>(e.size()) - pow2(e.rank());
  rep.slack = static_cast<Int128>(rep.cone_size) - rep.size_bound;
  rep.cone_pg_free = n == 2 ? ep.empty() : is_pg_free(ep, n - 1);
  if (rep.slack < 0) throw InternalInconsistency("cone smaller than 2|E| - 2^r");
  if (!rep.cone_pg_free) throw InternalInconsistency("cone contains PG(n-2,2)");
  return rep;
}

struct HyperplaneBoundsReport {
  std::size_t outside_size = 0;
  Rational outside_bound;  // (1 - 1/2^{n-1}) 2^{r-1}
  Rational outside_slack;
  bool dense = false;  // |E| > (1 - 3/2^n) 2^r
  std::size_t inside_size = 0;
  std::optional<Rational> inside_bound;  // strict lower bound when dense
  std::optional<Rational> inside_slack;
};

/// For PG(n-1,2)-free E and a hyperplane H whose intersection with E
/// contains PG(n-2,2): bounds on |E - H| and, when E is dense, on |E & H|.
inline HyperplaneBoundsReport check_hyperplane_bounds(const PointSet& e, const Flat& h, int n) {
  const int r = e.rank();
  if (n < 3 || n > r) throw HypothesisError("requires r >= n >= 3");
  if (h.ambient_rank() != r || h.corank() != 1) throw HypothesisError("H must be a hyperplane of G");
  detail::require_pg_free(e, n);
  const PointSet inside = e.intersect(flat_points(h));
  if (is_pg_free(inside, n - 1)) {
    throw HypothesisError("E & H is PG(" + std::to_string(n - 2) + ",2)-free");
  }
  HyperplaneBoundsReport rep;
  rep.inside_size = inside.size();
  rep.outside_size = e.size() - rep.inside_size;
  rep.outside_bound = density_threshold(r - 1, 1, n - 1);
  rep.outside_slack = rep.outside_bound - Rational(static_cast<Int128>(rep.outside_size));
  if (rep.outside_slack < Rational(0)) throw InternalInconsistency("|E - H| exceeds its bound");
  rep.dense = above_structure_threshold(e, n);
  if (rep.dense) {
    rep.inside_bound = density_threshold(r - 1, 2, n - 1);
    rep.inside_slack = Rational(static_cast<Int128>(rep.inside_size)) - *rep.inside_bound;
    if (*rep.inside_slack <= Rational(0)) throw InternalInconsistency("|E & H| below its bound");
  }
  return rep;
}

struct HyperplaneHit {
  Word gamma = 0;
  Flat hyperplane;
  Restriction restriction;
};

/// First hyperplane (normals gamma = 1, 2, ...) whose intersection with E
/// is PG(n-2,2)-free.
inline std::optional<HyperplaneHit> find_pg_free_hyperplane(const PointSet& e, int n) {
  const int r = e.rank();
  if (n < 3 || n > r) throw InvalidArgument("hyperplane search requires r >= n >= 3");
  const Word last = AmbientGeometry(r).point_count();
  for (Word gamma = 1; gamma <= last; ++gamma) {
    Flat h = hyperplane_of(r, gamma);
    Restriction res = restrict_to_flat(e, h);
    if (is_pg_free(res.set, n - 1)) return HyperplaneHit{gamma, std::move(h), std::move(res)};
  }
  return std::nullopt;
}

enum class FlatStrategy { descent, exhaustive };

struct StructureResult {
  bool found = false;
  std::optional<Flat> flat;
  std::size_t intersection_size = 0;
  bool density_claim_holds = false;  // |E & K| > 2^{r(K)} / 4
};

struct DescentStep {
  int level = 0;
  int ambient_rank = 0;
  Word gamma = 0;  // in the coordinates of this step's ambient
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  bool intersection_free = false;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  /// Level at which hypotheses could not be re-established and the
  /// exhaustive scan took over.
  std::optional<int> fallback_level;
  std::optional<Flat> final_flat;
  std::size_t final_restriction_size = 0;
};

struct FlatSearch {
  StructureResult result;
  std::optional<DescentTrace> trace;
};

namespace detail {

inline bool triangle_free_points(const PointSet& e, const std::vector<Word>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (e.contains(pts[i] ^ pts[j])) return false;
    }
  }
  return true;
}

inline StructureResult finish(const Flat& k, std::size_t size) {
  StructureResult res;
  res.found = true;
  res.flat = k;
  res.intersection_size = size;
  res.density_claim_holds = 4 * static_cast<Int128>(size) > pow2(k.rank());
  return res;
}

inline StructureResult exhaustive_flat_search(const PointSet& e, int n) {
  const int r = e.rank();
  if (n == 2) {
    return is_pg_free(e, 2) ? finish(Flat::full(r), e.size()) : StructureResult{};
  }
  std::optional<Flat> best;
  std::size_t best_size = 0;
  std::vector<Word> pts;
  for_each_flat(r, n - 2, [&](const Flat& k) {
    pts.clear();
    k.for_each_point([&](Word p) {
      if (e.contains(p)) pts.push_back(p);
    });
    if ((!best || pts.size() > best_size) && triangle_free_points(e, pts)) {
      best = k;
      best_size = pts.size();
    }
  });
  return best ? finish(*best, best_size) : StructureResult{};
}

}  // namespace detail

/// Searches for a corank-(n-2) flat K of G with E & K triangle-free.
///
/// `descent` follows the induction on n: at each level it re-validates the
/// hypotheses (PG(level-1,2)-free and above the density threshold), cuts by
/// the first hyperplane whose intersection is PG(level-2,2)-free and
/// recurses inside it. If hypotheses fail at some level, the exhaustive scan
/// finishes the job there and the trace records the fallback.
///
/// `exhaustive` scans every corank-(n-2) flat and keeps the one with the
/// largest triangle-free intersection (first in canonical order on ties).
inline FlatSearch find_triangle_free_flat(const PointSet& e, int n, FlatStrategy strategy) {
  const int r = e.rank();
  if (n < 2 || n > r) throw InvalidArgument("flat search requires r >= n >= 2");
  if (strategy == FlatStrategy::exhaustive) return {detail::exhaustive_flat_search(e, n), std::nullopt};

  DescentTrace trace;
  PointSet current = e;
  CoordinateMap to_global = CoordinateMap::identity(r);
  int level = n;
  while (level > 2) {
    const bool hypotheses = current.rank() >= level && above_structure_threshold(current, level) &&
                            is_pg_free(current, level);
    std::optional<HyperplaneHit> hit;
    if (hypotheses) hit = find_pg_free_hyperplane(current, level);
    if (!hit) {
      trace.fallback_level = level;
      StructureResult local = detail::exhaustive_flat_search(current, level);
      if (local.found) {
        const Flat lifted = to_global.lift(*local.flat);
        local.flat = lifted;
        local.density_claim_holds = 4 * static_cast<Int128>(local.intersection_size) > pow2(lifted.rank());
        trace.final_flat = lifted;
        trace.final_restriction_size = local.intersection_size;
      }
      return {local, trace};
    }
    DescentStep step;
    step.level = level;
    step.ambient_rank = current.rank();
    step.gamma = hit->gamma;
    step.size_before = current.size();
    step.size_after = hit->restriction.set.size();
    step.intersection_free = true;
    trace.steps.push_back(step);
    to_global = hit->restriction.map.composed_with(to_global);
    current = std::move(hit->restriction.set);
    --level;
  }
  if (!is_pg_free(current, 2)) return {StructureResult{}, trace};
  const Flat k = to_global.lift(Flat::full(current.rank()));
  trace.final_flat = k;
  trace.final_restriction_size = current.size();
  return {detail::finish(k, current.size()), trace};
}

struct ReconcileReport {
  bool dense_condition = false;  // |E| >= (3/4) 2^r
  bool free_condition = false;   // PG(n-1,2)-free and |E| > (1 - 3/2^n) 2^r, r >= n >= 3
  int matroid_rank = 0;
  int intersection_rank = 0;
  bool asserted = false;
  bool holds = false;  // r(M) = r and r_M(E & H) = r - 1
};

/// Whether E & H is a hyperplane of M = G|E. Asserted only when one of the
/// two sufficient conditions applies; otherwise the ranks are just reported.
inline ReconcileReport reconcile_hyperplane(const PointSet& e, const Flat& h, int n) {
  const int r = e.rank();
  if (h.ambient_rank() != r || h.corank() != 1) throw InvalidArgument("H must be a hyperplane of G");
  ReconcileReport rep;
  rep.dense_condition = 4 * static_cast<Int128>(e.size()) >= 3 * pow2(r);
  rep.free_condition = n >= 3 && n <= r && above_structure_threshold(e, n) && is_pg_free(e, n);
  rep.matroid_rank = matroid_rank(e);
  rep.intersection_rank = matroid_rank(e.intersect(flat_points(h)));
  rep.holds = rep.matroid_rank == r && rep.intersection_rank == r - 1;
  rep.asserted = rep.dense_condition || rep.free_condition;
  if (rep.asserted && !rep.holds) throw InternalInconsistency("E & H is not a hyperplane of M");
  return rep;
}

}  // namespace pgfree
