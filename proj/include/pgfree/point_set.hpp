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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"

namespace pgfree {

/// Ground set E of a binary representation (E, G): a bitset over the 2^r
/// vectors of GF(2)^r. Bit 0 is never set.
class PointSet {
 public:
  explicit PointSet(int rank) : rank_(AmbientGeometry(rank).rank()), words_(word_count(rank), 0) {}

  static PointSet from_points(int rank, std::span<const Word> points) {
    PointSet out(rank);
    for (Word p : points) out.insert(p);
    return out;
  }
  static PointSet from_points(int rank, std::initializer_list<Word> points) {
    return from_points(rank, std::span<const Word>(points.begin(), points.size()));
  }
  static PointSet full(int rank) {
    PointSet out(rank);
    std::fill(out.words_.begin(), out.words_.end(), ~std::uint64_t{0});
    out.trim();
    out.words_[0] &= ~std::uint64_t{1};
    return out;
  }
  /// Point set with bit i of `mask` selecting point i + 1. Only for r <= 6.
  static PointSet from_mask(int rank, std::uint64_t mask) {
    if (rank > 6) throw InvalidArgument("from_mask supports rank <= 6");
    PointSet out(rank);
    const Word points = AmbientGeometry(rank).point_count();
    if (points < 64 && (mask >> points) != 0) throw InvalidArgument("mask selects non-points");
    out.words_[0] = mask << 1;
    return out;
  }

  int rank() const noexcept { return rank_; }
  AmbientGeometry ambient() const { return AmbientGeometry(rank_); }
  std::size_t vector_count() const noexcept { return std::size_t{1} << rank_; }

  bool contains(Word w) const noexcept {
    return w < vector_count() && ((words_[w >> 6] >> (w & 63)) & 1u);
  }
  void insert(Word w) {
    if (w == 0 || w >= vector_count()) {
      throw InvalidArgument("word " + std::to_string(w) + " is not a point of PG(" +
                            std::to_string(rank_ - 1) + ",2)");
    }
    words_[w >> 6] |= std::uint64_t{1} << (w & 63);
  }
  void erase(Word w) noexcept {
    if (w < vector_count()) words_[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Visits points in ascending word order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Word>((i << 6) | static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }
  std::vector<Word> points() const {
    std::vector<Word> out;
    out.reserve(size());
    for_each([&](Word p) { out.push_back(p); });
    return out;
  }

  /// Points of G not in this set.
  PointSet complement() const {
    PointSet out(rank_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    out.words_[0] &= ~std::uint64_t{1};
    return out;
  }
  PointSet intersect(const PointSet& o) const {
    require_same_rank(o);
    PointSet out(rank_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
    return out;
  }
  PointSet unite(const PointSet& o) const {
    require_same_rank(o);
    PointSet out(rank_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
    return out;
  }
  bool is_subset_of(const PointSet& o) const {
    require_same_rank(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  std::size_t count_in(const Flat& f) const {
    std::size_t n = 0;
    f.for_each_point([&](Word p) { n += contains(p) ? 1 : 0; });
    return n;
  }

  std::span<const std::uint64_t> bits() const noexcept { return words_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  /// Canonical set order: by rank, then by the bitset read as a big integer.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  static std::size_t word_count(int rank) { return ((std::size_t{1} << rank) + 63) / 64; }

  void trim() {
    const std::size_t n = vector_count();
    if (n < 64) words_[0] &= (std::uint64_t{1} << n) - 1;
  }
  void require_same_rank(const PointSet& o) const {
    if (o.rank_ != rank_) throw InvalidArgument("point sets live in different ambients");
  }

  int rank_;
  std::vector<std::uint64_t> words_;
};

inline PointSet flat_points(const Flat& f) {
  PointSet out(f.ambient_rank());
  f.for_each_point([&](Word p) { out.insert(p); });
  return out;
}

}  // namespace pgfree
