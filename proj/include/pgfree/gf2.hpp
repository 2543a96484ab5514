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

// Vectors, subspaces and flats of PG(r-1, 2).
//
// A vector of GF(2)^r is an r-bit word; coordinate i is bit i. The points of
// the ambient projective geometry are the nonzero words. A flat is stored as
// the canonical basis of its subspace: reduced row-echelon form where the
// pivot of each row is its highest set bit, no other row has that bit set,
// and rows are sorted by ascending pivot. Equal subspaces have equal bases.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/rational.hpp"

namespace pgfree {

using Word = std::uint32_t;

/// Largest supported ambient rank. A full spectrum holds 2^r 64-bit entries.
inline constexpr int kMaxRank = 24;

class AmbientGeometry {
 public:
  explicit AmbientGeometry(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) {
      throw InvalidArgument("ambient rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(kMaxRank) + "]");
    }
  }

  int rank() const noexcept { return rank_; }
  /// 2^r, the number of vectors including zero.
  std::size_t vector_count() const noexcept { return std::size_t{1} << rank_; }
  /// 2^r - 1.
  Word point_count() const noexcept { return static_cast<Word>(vector_count() - 1); }
  bool is_vector(Word w) const noexcept { return w < vector_count(); }
  bool is_point(Word w) const noexcept { return w != 0 && is_vector(w); }

  friend bool operator==(const AmbientGeometry&, const AmbientGeometry&) = default;

 private:
  int rank_;
};

inline int dot(Word a, Word b) noexcept { return std::popcount(a & b) & 1; }

/// Index of the highest set bit; undefined for 0.
inline int pivot_of(Word w) noexcept { return std::bit_width(w) - 1; }

/// Canonical basis of span(vectors): RREF with pivot = highest bit,
/// ascending pivots.
inline std::vector<Word> reduced_basis(std::span<const Word> vectors) {
  std::array<Word, 32> rows{};
  for (Word v : vectors) {
    while (v != 0) {
      const int p = pivot_of(v);
      if (rows[p] == 0) {
        rows[p] = v;
        break;
      }
      v ^= rows[p];
    }
  }
  // Clear each pivot bit from every higher row.
  for (int p = 0; p < 32; ++p) {
    if (rows[p] == 0) continue;
    for (int q = p + 1; q < 32; ++q) {
      if (rows[q] != 0 && ((rows[q] >> p) & 1u)) rows[q] ^= rows[p];
    }
  }
  std::vector<Word> out;
  for (Word row : rows) {
    if (row != 0) out.push_back(row);
  }
  return out;
}

inline int rank_of(std::span<const Word> vectors) {
  std::array<Word, 32> rows{};
  int rank = 0;
  for (Word v : vectors) {
    while (v != 0) {
      const int p = pivot_of(v);
      if (rows[p] == 0) {
        rows[p] = v;
        ++rank;
        break;
      }
      v ^= rows[p];
    }
  }
  return rank;
}

/// A flat of PG(r-1, 2), i.e. the nonzero part of a subspace of GF(2)^r.
class Flat {
 public:
  /// The flat spanned by `vectors` (zero vectors are ignored).
  static Flat span(int ambient_rank, std::span<const Word> vectors) {
    const AmbientGeometry g(ambient_rank);
    for (Word v : vectors) {
      if (!g.is_vector(v)) throw InvalidArgument("vector " + std::to_string(v) + " outside ambient");
    }
    return Flat(ambient_rank, reduced_basis(vectors));
  }
  static Flat span(int ambient_rank, std::initializer_list<Word> vectors) {
    return span(ambient_rank, std::span<const Word>(vectors.begin(), vectors.size()));
  }

  /// Accepts a basis that must already be independent; canonicalizes it.
  static Flat from_basis(int ambient_rank, std::span<const Word> basis) {
    const AmbientGeometry g(ambient_rank);
    for (Word v : basis) {
      if (!g.is_point(v)) throw InvalidArgument("basis vector " + std::to_string(v) + " is not a point");
    }
    if (rank_of(basis) != static_cast<int>(basis.size())) {
      throw InvalidArgument("basis vectors are linearly dependent");
    }
    return Flat(ambient_rank, reduced_basis(basis));
  }

  static Flat full(int ambient_rank) {
    const AmbientGeometry g(ambient_rank);
    std::vector<Word> basis;
    for (int i = 0; i < ambient_rank; ++i) basis.push_back(Word{1} << i);
    return Flat(ambient_rank, std::move(basis));
  }

  int ambient_rank() const noexcept { return ambient_rank_; }
  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  int corank() const noexcept { return ambient_rank_ - rank(); }
  const std::vector<Word>& basis() const noexcept { return basis_; }
  /// 2^k - 1.
  std::size_t point_count() const noexcept { return (std::size_t{1} << rank()) - 1; }

  /// Reduces w modulo the subspace; zero iff w lies in it.
  Word reduce(Word w) const noexcept {
    for (auto it = basis_.rbegin(); it != basis_.rend(); ++it) {
      if ((w >> pivot_of(*it)) & 1u) w ^= *it;
    }
    return w;
  }
  bool contains_vector(Word w) const noexcept { return reduce(w) == 0; }
  bool contains_point(Word w) const noexcept { return w != 0 && contains_vector(w); }

  Word pivot_mask() const noexcept {
    Word m = 0;
    for (Word b : basis_) m |= Word{1} << pivot_of(b);
    return m;
  }

  /// Calls f(point) for each of the 2^k - 1 points, in Gray-code order.
  template <class F>
  void for_each_point(F&& f) const {
    Word current = 0;
    const std::size_t n = point_count();
    for (std::size_t i = 1; i <= n; ++i) {
      current ^= basis_[std::countr_zero(i)];
      f(current);
    }
  }

  std::vector<Word> points() const {
    std::vector<Word> out;
    out.reserve(point_count());
    for_each_point([&](Word w) { out.push_back(w); });
    return out;
  }

  friend bool operator==(const Flat&, const Flat&) = default;
  friend std::strong_ordering operator<=>(const Flat& a, const Flat& b) {
    if (auto c = a.ambient_rank_ <=> b.ambient_rank_; c != 0) return c;
    return a.basis_ <=> b.basis_;
  }

 private:
  Flat(int ambient_rank, std::vector<Word> basis)
      : ambient_rank_(ambient_rank), basis_(std::move(basis)) {}

  int ambient_rank_;
  std::vector<Word> basis_;
};

inline Flat closure(int ambient_rank, std::span<const Word> points) {
  return Flat::span(ambient_rank, points);
}

/// The flat {x : x . n = 0 for every n in normals}.
inline Flat annihilator(int ambient_rank, std::span<const Word> normals) {
  const std::vector<Word> dual = Flat::span(ambient_rank, normals).basis();
  Word pivots = 0;
  for (Word n : dual) pivots |= Word{1} << pivot_of(n);
  std::vector<Word> basis;
  for (int j = 0; j < ambient_rank; ++j) {
    if ((pivots >> j) & 1u) continue;
    Word v = Word{1} << j;
    for (Word n : dual) {
      if ((n >> j) & 1u) v |= Word{1} << pivot_of(n);
    }
    basis.push_back(v);
  }
  return Flat::span(ambient_rank, basis);
}

/// Canonical basis of the orthogonal complement of f's subspace.
inline std::vector<Word> normals_of(const Flat& f) {
  return annihilator(f.ambient_rank(), f.basis()).basis();
}

/// The hyperplane {x != 0 : x . gamma = 0}.
inline Flat hyperplane_of(int ambient_rank, Word gamma) {
  if (gamma == 0) throw InvalidArgument("hyperplane normal must be nonzero");
  const Word g = gamma;
  return annihilator(ambient_rank, std::span<const Word>(&g, 1));
}

namespace detail {

// Recursively enumerates canonical rank-`count` bases whose vectors extend
// `prefix`, in lexicographic order of the basis tuple.
template <class F>
bool enumerate_canonical_bases(int r, int count, std::vector<Word>& prefix, Word used_pivots,
                               int min_pivot, F& f) {
  const int i = static_cast<int>(prefix.size());
  if (i == count) return f(static_cast<const std::vector<Word>&>(prefix));
  const int remaining = count - i;
  for (int p = min_pivot; p <= r - remaining; ++p) {
    const Word free = (p == 0 ? Word{0} : ((Word{1} << p) - 1)) & ~used_pivots;
    // Ascending walk over all submasks of `free`.
    Word m = 0;
    while (true) {
      prefix.push_back((Word{1} << p) | m);
      const bool keep_going =
          enumerate_canonical_bases(r, count, prefix, used_pivots | (Word{1} << p), p + 1, f);
      prefix.pop_back();
      if (!keep_going) return false;
      if (m == free) break;
      m = (m - free) & free;
    }
  }
  return true;
}

}  // namespace detail

/// Visits every corank-c flat of PG(r-1, 2) exactly once, ordered
/// lexicographically by the canonical basis of its normal space. The visitor
/// may return bool; returning false stops the walk early.
template <class F>
void for_each_flat(int ambient_rank, int corank, F&& visit) {
  const AmbientGeometry g(ambient_rank);
  if (corank < 0 || corank > ambient_rank) throw InvalidArgument("corank outside [0, r]");
  std::vector<Word> prefix;
  auto on_basis = [&](const std::vector<Word>& normals) -> bool {
    const Flat f = annihilator(ambient_rank, normals);
    if constexpr (std::is_same_v<std::invoke_result_t<F&, const Flat&>, bool>) {
      return visit(f);
    } else {
      visit(f);
      return true;
    }
  };
  detail::enumerate_canonical_bases(ambient_rank, corank, prefix, 0, 0, on_basis);
}

inline std::vector<Flat> enumerate_flats(int ambient_rank, int corank) {
  std::vector<Flat> out;
  for_each_flat(ambient_rank, corank, [&](const Flat& f) { out.push_back(f); });
  return out;
}

/// Gaussian binomial [n choose k]_2 via the Pascal-type recurrence.
inline Int128 gaussian_binomial2(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<Int128>> table(n + 1, std::vector<Int128>(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    table[m][0] = 1;
    for (int j = 1; j <= m; ++j) {
      Int128 scaled;
      if (__builtin_mul_overflow(table[m - 1][j], pow2(j), &scaled) ||
          __builtin_add_overflow(table[m - 1][j - 1], scaled, &table[m][j])) {
        throw ResourceCapError("gaussian binomial overflow");
      }
    }
  }
  return table[n][k];
}

/// Coordinates of a flat: local bit i maps to global vector basis()[i].
/// Used to move point sets into a flat and to lift results back out.
class CoordinateMap {
 public:
  CoordinateMap(int global_rank, std::vector<Word> basis)
      : global_rank_(global_rank), basis_(std::move(basis)) {
    if (rank_of(basis_) != static_cast<int>(basis_.size())) {
      throw InvalidArgument("coordinate basis is dependent");
    }
    // Echelon rows tagged with the local combination producing them.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Word v = basis_[i];
      Word combo = Word{1} << i;
      for (const auto& [row, row_combo] : rows_) {
        if ((v >> pivot_of(row)) & 1u) {
          v ^= row;
          combo ^= row_combo;
        }
      }
      for (auto& [row, row_combo] : rows_) {
        if ((row >> pivot_of(v)) & 1u) {
          row ^= v;
          row_combo ^= combo;
        }
      }
      rows_.emplace_back(v, combo);
    }
  }

  static CoordinateMap identity(int rank) { return CoordinateMap(rank, Flat::full(rank).basis()); }

  int global_rank() const noexcept { return global_rank_; }
  int local_rank() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Word>& basis() const noexcept { return basis_; }

  Word lift(Word local) const noexcept {
    Word out = 0;
    while (local != 0) {
      out ^= basis_[std::countr_zero(local)];
      local &= local - 1;
    }
    return out;
  }

  /// Local coordinates of a global vector, or nullopt when it is outside
  /// the flat.
  std::optional<Word> project(Word global) const noexcept {
    Word combo = 0;
    for (const auto& [row, row_combo] : rows_) {
      if ((global >> pivot_of(row)) & 1u) {
        global ^= row;
        combo ^= row_combo;
      }
    }
    if (global != 0) return std::nullopt;
    return combo;
  }

  Flat lift(const Flat& local) const {
    std::vector<Word> lifted;
    for (Word b : local.basis()) lifted.push_back(lift(b));
    return Flat::span(global_rank_, lifted);
  }

  /// Map from this map's local space straight into `outer`'s global space.
  CoordinateMap composed_with(const CoordinateMap& outer) const {
    if (outer.local_rank() != global_rank_) throw InvalidArgument("coordinate map rank mismatch");
    std::vector<Word> lifted;
    for (Word b : basis_) lifted.push_back(outer.lift(b));
    return CoordinateMap(outer.global_rank(), std::move(lifted));
  }

 private:
  int global_rank_;
  std::vector<Word> basis_;
  std::vector<std::pair<Word, Word>> rows_;
};

}  // namespace pgfree
