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

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/matroid.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/structure.hpp"

namespace pgfree {

/// Complement of the flat spanned by the first r-n+1 standard basis
/// vectors: (1 - 2/2^n) 2^r points, PG(n-1,2)-free.
inline PointSet bose_burton(int r, int n) {
  if (n < 2 || n > r) throw InvalidArgument("bose_burton requires r >= n >= 2");
  std::vector<Word> basis;
  for (int i = 0; i < r - n + 1; ++i) basis.push_back(Word{1} << i);
  return flat_points(Flat::span(r, basis)).complement();
}

/// {x : x . gamma = 1}.
inline PointSet affine_set(int r, Word gamma) {
  const AmbientGeometry g(r);
  if (!g.is_point(gamma)) throw InvalidArgument("affine_set needs a nonzero normal inside the ambient");
  PointSet out(r);
  for (Word x = 1; x <= g.point_count(); ++x) {
    if (dot(x, gamma) == 1) out.insert(x);
  }
  return out;
}

struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const {
    if (vertex_count < 1 || vertex_count > 32) throw InvalidArgument("vertex count outside [1, 32]");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
        throw InvalidArgument("edge endpoint out of range");
      }
      if (u == v) throw InvalidArgument("loop on vertex " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second) throw InvalidArgument("repeated edge");
    }
  }
};

inline GraphSpec complete_graph(int k) {
  GraphSpec g{k, {}};
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

/// Cycle-matroid representation: edge uv becomes e_u + e_v, then the set is
/// re-coordinatized inside its span using the canonical basis, so the
/// ambient rank equals vertices minus components.
inline PointSet graphic_representation(const GraphSpec& g) {
  g.validate();
  std::vector<Word> incidence;
  for (auto [u, v] : g.edges) incidence.push_back((Word{1} << u) ^ (Word{1} << v));
  std::vector<Word> basis = reduced_basis(incidence);
  if (basis.empty()) throw InvalidArgument("graph has no edges");
  if (static_cast<int>(basis.size()) > kMaxRank) throw ResourceCapError("graphic matroid rank exceeds cap");
  const CoordinateMap map(g.vertex_count, basis);
  PointSet out(static_cast<int>(basis.size()));
  for (Word w : incidence) out.insert(*map.project(w));
  return out;
}

/// M(K_5): 10 points of rank 4.
inline PointSet k5() { return graphic_representation(complete_graph(5)); }

/// A in the low r_A coordinates, B in the high r_B coordinates.
inline PointSet direct_sum(const PointSet& a, const PointSet& b) {
  const int r = a.rank() + b.rank();
  if (r > kMaxRank) throw ResourceCapError("direct sum rank " + std::to_string(r) + " exceeds cap");
  PointSet out(r);
  a.for_each([&](Word x) { out.insert(x); });
  b.for_each([&](Word y) { out.insert(y << a.rank()); });
  return out;
}

/// Preimage of A under the projection onto the low r_A coordinates, in
/// rank r_A + extra. Keeps PG(n-1,2)-freeness and the density.
inline PointSet blow_up(const PointSet& a, int extra) {
  const int r = a.rank() + extra;
  if (extra < 0 || r > kMaxRank) throw InvalidArgument("blow_up rank out of range");
  PointSet out(r);
  a.for_each([&](Word x) {
    for (Word y = 0; y < (Word{1} << extra); ++y) out.insert(x | (y << a.rank()));
  });
  return out;
}

/// A in the hyperplane x_r = 0 plus the whole affine part x_r = 1, in rank
/// r_A + 1. A PG(n-1,2)-free A becomes PG(n,2)-free; density (1 - d) maps
/// to (1 - d/2).
inline PointSet doubling(const PointSet& a) {
  const int r = a.rank() + 1;
  if (r > kMaxRank) throw ResourceCapError("doubling exceeds rank cap");
  PointSet out(r);
  a.for_each([&](Word x) { out.insert(x); });
  for (Word x = 0; x < (Word{1} << a.rank()); ++x) out.insert(x | (Word{1} << a.rank()));
  return out;
}

/// M(K_5) blown up to rank r-n+3, then doubled n-3 times: size exactly
/// (1 - 3/2^n) 2^r and PG(n-1,2)-free. Needs r >= n+1.
inline PointSet k5_extension(int r, int n) {
  if (n < 3 || r < n + 1) throw InvalidArgument("k5_extension requires r >= n + 1 and n >= 3");
  PointSet out = blow_up(k5(), r - n + 3 - 4);
  for (int i = 0; i < n - 3; ++i) out = doubling(out);
  return out;
}

/// Image of E under the linear map sending e_i to columns[i].
inline PointSet apply_linear_map(const PointSet& e, const std::vector<Word>& columns, int target_rank) {
  if (static_cast<int>(columns.size()) != e.rank()) throw InvalidArgument("need one column per coordinate");
  const CoordinateMap map(target_rank, columns);
  PointSet out(target_rank);
  e.for_each([&](Word x) { out.insert(map.lift(x)); });
  return out;
}

template <class Rng>
std::vector<Word> random_invertible_columns(int r, Rng& rng) {
  std::uniform_int_distribution<Word> pick(1, static_cast<Word>((std::size_t{1} << r) - 1));
  while (true) {
    std::vector<Word> cols(r);
    for (auto& c : cols) c = pick(rng);
    if (rank_of(cols) == r) return cols;
  }
}

/// Whether some invertible linear map of GF(2)^r carries A onto B.
/// Brute force over images of a basis chosen from A; small sets only.
inline bool are_linearly_equivalent(const PointSet& a, const PointSet& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) return false;
  const std::vector<Word> pa = a.points();
  const std::vector<Word> pb = b.points();
  std::vector<Word> basis;  // independent points of A
  for (Word p : pa) {
    basis.push_back(p);
    if (rank_of(basis) != static_cast<int>(basis.size())) basis.pop_back();
  }
  if (rank_of(pb) != static_cast<int>(basis.size())) return false;
  const CoordinateMap in_a(a.rank(), basis);
  std::vector<Word> local;
  for (Word p : pa) local.push_back(*in_a.project(p));

  std::vector<Word> images;
  auto extend = [&](auto& self) -> bool {
    if (images.size() == basis.size()) {
      const CoordinateMap to_b(b.rank(), images);
      return std::all_of(local.begin(), local.end(), [&](Word l) { return b.contains(to_b.lift(l)); });
    }
    for (Word q : pb) {
      images.push_back(q);
      if (rank_of(images) == static_cast<int>(images.size()) && self(self)) return true;
      images.pop_back();
    }
    return false;
  };
  return extend(extend);
}

namespace detail {

template <class Rng>
Word random_member(const PointSet& s, Rng& rng) {
  const std::vector<Word> pts = s.points();
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  return pts[pick(rng)];
}

// Greedily adds or removes points until |E| = target, each time taking the
// move that leaves the fewest PG(n-1,2) copies (ties to the smallest word).
inline void adjust_size(PointSet& e, int n, std::size_t target) {
  while (e.size() != target) {
    const bool grow = e.size() < target;
    const PointSet pool = grow ? e.complement() : e;
    Word best = 0;
    std::uint64_t best_count = 0;
    pool.for_each([&](Word p) {
      PointSet trial = e;
      if (grow) trial.insert(p);
      else trial.erase(p);
      const std::uint64_t c = count_pg_copies(trial, n);
      if (best == 0 || c < best_count) {
        best = p;
        best_count = c;
      }
    });
    if (grow) e.insert(best);
    else e.erase(best);
  }
}

}  // namespace detail

/// Local search for PG(n-1,2)-free sets with |E| = (1 - 3/2^n) 2^r that
/// have no triangle-free corank-(n-2) flat. Restarts begin from random
/// linear images of M(K_5)-derived seeds, are resized to the target, then
/// walk by single-point swaps that never increase the number of PG(n-1,2)
/// copies. `budget` is the total number of swap proposals. Every returned
/// set is re-certified by the exhaustive flat scan; output is sorted in
/// canonical set order.
inline std::vector<PointSet> tightness_explorer(int r, int n, std::uint64_t budget, std::uint64_t seed = 0) {
  if (n < 3 || r < 4 || r < n) throw InvalidArgument("tightness_explorer requires r >= 4, n >= 3, r >= n");
  if (r > 8) throw ResourceCapError("tightness_explorer is limited to r <= 8");
  const std::size_t target = (std::size_t{1} << r) - 3 * (std::size_t{1} << (r - n));

  std::vector<PointSet> seeds;
  if (r >= n + 1) seeds.push_back(k5_extension(r, n));
  if (r >= 5) seeds.push_back(direct_sum(k5(), PointSet::full(r - 4)));
  if (r == 4) seeds.push_back(k5());
  if (seeds.empty()) seeds.push_back(PointSet::full(r));

  const std::uint64_t steps_per_restart = 200;
  const std::uint64_t restarts = std::max<std::uint64_t>(1, budget / steps_per_restart);
  std::set<PointSet> witnesses;
  std::uint64_t spent = 0;
  for (std::uint64_t restart = 0; restart < restarts && spent < std::max<std::uint64_t>(budget, 1); ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
    std::mt19937_64 rng(seq);
    const PointSet& base = seeds[restart % seeds.size()];
    PointSet e = restart < seeds.size() ? base : apply_linear_map(base, random_invertible_columns(r, rng), r);
    detail::adjust_size(e, n, target);
    std::uint64_t copies = count_pg_copies(e, n);
    auto certify = [&](const PointSet& s) {
      if (copies == 0 && !witnesses.contains(s) &&
          !find_triangle_free_flat(s, n, FlatStrategy::exhaustive).result.found) {
        witnesses.insert(s);
      }
    };
    certify(e);
    for (std::uint64_t step = 0; step < steps_per_restart && spent < budget; ++step, ++spent) {
      if (e.size() == 0 || e.size() == AmbientGeometry(r).point_count()) break;
      const Word out = detail::random_member(e, rng);
      const Word in = detail::random_member(e.complement(), rng);
      PointSet trial = e;
      trial.erase(out);
      trial.insert(in);
      const std::uint64_t c = count_pg_copies(trial, n);
      if (c <= copies) {
        e = std::move(trial);
        copies = c;
        certify(e);
      }
    }
  }
  return {witnesses.begin(), witnesses.end()};
}

}  // namespace pgfree
