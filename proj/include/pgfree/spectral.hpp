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

// Fourier analysis over GF(2)^r. The transform of the indicator 1_E is
//   c(g) = sum_{y in E} (-1)^{y . g},
// so c(0) = |E| and, for g != 0, c(g) = |E & W_g| - |E - W_g| where W_g is
// the hyperplane with normal g. Everything here is exact integer or
// rational arithmetic.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

#include "pgfree/error.hpp"
#include "pgfree/gf2.hpp"
#include "pgfree/point_set.hpp"
#include "pgfree/rational.hpp"
#include "pgfree/structure.hpp"
#include "pgfree/walsh.hpp"

namespace pgfree {

/// All 2^r Fourier coefficients of 1_E. Parseval is verified on
/// construction.
class Spectrum {
 public:
  Spectrum(int rank, std::vector<std::int64_t> coeffs, std::size_t set_size)
      : rank_(rank), coeffs_(std::move(coeffs)), set_size_(set_size) {
    if (coeffs_.size() != (std::size_t{1} << rank)) throw InvalidArgument("spectrum has wrong length");
    Int128 energy = 0;
    for (auto c : coeffs_) energy += static_cast<Int128>(c) * c;
    if (energy != pow2(rank) * static_cast<Int128>(set_size)) {
      throw InternalInconsistency("Parseval identity fails: sum c^2 != 2^r |E|");
    }
    if (coeffs_[0] != static_cast<std::int64_t>(set_size)) {
      throw InternalInconsistency("zero coefficient differs from |E|");
    }
  }

  int rank() const noexcept { return rank_; }
  std::size_t set_size() const noexcept { return set_size_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](Word gamma) const { return coeffs_.at(gamma); }

 private:
  int rank_;
  std::vector<std::int64_t> coeffs_;
  std::size_t set_size_;
};

inline Spectrum walsh_hadamard(const PointSet& e) {
  std::vector<std::int64_t> f(e.vector_count(), 0);
  e.for_each([&](Word p) { f[p] = 1; });
  fwht_in_place(std::span<std::int64_t>(f));
  return Spectrum(e.rank(), std::move(f), e.size());
}

/// 2|E & W_g| - |E|, counted directly over the hyperplane.
inline std::int64_t hyperplane_deviation(const PointSet& e, Word gamma) {
  const auto inside = static_cast<std::int64_t>(e.count_in(hyperplane_of(e.rank(), gamma)));
  return 2 * inside - static_cast<std::int64_t>(e.size());
}

struct UniformityReport {
  Rational alpha;          // |E| / 2^r
  Rational epsilon_min;    // max_{g != 0} |c(g)| / 2^r
  Word worst_gamma = 1;    // least g attaining the maximum
  std::int64_t max_deviation = 0;
};

inline UniformityReport uniformity(const Spectrum& s) {
  UniformityReport rep;
  const auto c = s.coeffs();
  for (Word g = 1; g < c.size(); ++g) {
    const std::int64_t dev = std::llabs(c[g]);
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.worst_gamma = g;
    }
  }
  rep.alpha = Rational(static_cast<Int128>(s.set_size()), pow2(s.rank()));
  rep.epsilon_min = Rational(rep.max_deviation, pow2(s.rank()));
  return rep;
}

inline UniformityReport uniformity(const PointSet& e) { return uniformity(walsh_hadamard(e)); }

/// T_E = 2^{-r} sum_g c(g)^3, accumulated in 128 bits.
inline std::uint64_t triangle_count_spectral(const Spectrum& s) {
  Int128 sum = 0;
  for (auto c : s.coeffs()) sum += static_cast<Int128>(c) * c * c;
  const Int128 scale = pow2(s.rank());
  if (sum < 0 || sum % scale != 0) throw InternalInconsistency("cube sum not divisible by 2^r");
  return static_cast<std::uint64_t>(sum / scale);
}

inline std::uint64_t triangle_count_spectral(const PointSet& e) {
  return triangle_count_spectral(walsh_hadamard(e));
}

struct CountingBound {
  bool holds = false;
  Rational lhs;  // |T_E - alpha^3 2^{2r}|
  Rational rhs;  // eps (alpha - alpha^2) 2^{2r}
};

/// Evaluates |T_E - a^3 2^{2r}| <= eps (a - a^2) 2^{2r} exactly, for an
/// eps-uniform E.
inline CountingBound counting_bound_check(const Spectrum& s, const Rational& eps) {
  if (eps < Rational(0)) throw InvalidArgument("epsilon must be nonnegative");
  const UniformityReport u = uniformity(s);
  if (u.epsilon_min > eps) {
    throw NotUniformError("E is not " + eps.str() + "-uniform (needs " + u.epsilon_min.str() + ")",
                          u.worst_gamma);
  }
  const Int128 size = static_cast<Int128>(s.set_size());
  const Int128 scale = pow2(s.rank());
  const Rational t(static_cast<Int128>(triangle_count_spectral(s)));
  CountingBound out;
  // a^3 2^{2r} = |E|^3 / 2^r and (a - a^2) 2^{2r} = |E| 2^r - |E|^2.
  out.lhs = (t - Rational(size * size * size, scale)).abs();
  out.rhs = eps * Rational(size * scale - size * size);
  out.holds = out.lhs <= out.rhs;
  if (!out.holds) throw InternalInconsistency("counting bound violated: " + out.lhs.str() + " > " + out.rhs.str());
  return out;
}

inline CountingBound counting_bound_check(const PointSet& e, const Rational& eps) {
  return counting_bound_check(walsh_hadamard(e), eps);
}

/// Quantities that drive the hyperplane argument for fano-free sets.
struct ClaimQuantities {
  std::uint64_t triangle_count = 0;
  std::vector<std::pair<Word, std::size_t>> cone_sizes;  // (p, |E_p|), ascending p
  std::uint64_t cone_sum = 0;
  std::size_t max_cone = 0;
  /// T_E > (55/256) 2^{2r}
  bool triangle_claim = false;
  /// |E_p| <= (5/16) 2^r for every p
  bool cone_claim = false;
  /// a^3 2^{2r} - eps (a - a^2) 2^{2r} with eps = (1 - a)/3.
  Rational counting_lower_bound;
};

inline ClaimQuantities claim_quantities(const PointSet& e) {
  ClaimQuantities q;
  const int r = e.rank();
  q.triangle_count = triangle_count_spectral(e);
  e.for_each([&](Word p) {
    const std::size_t size = cone(e, p).size();
    q.cone_sizes.emplace_back(p, size);
    q.cone_sum += size;
    q.max_cone = std::max(q.max_cone, size);
  });
  if (q.cone_sum != q.triangle_count) throw InternalInconsistency("sum of cone sizes differs from T_E");
  const Int128 scale = pow2(r);
  q.triangle_claim = Rational(static_cast<Int128>(q.triangle_count)) > Rational(55 * scale * scale, 256);
  q.cone_claim = 16 * static_cast<Int128>(q.max_cone) <= 5 * scale;
  const Rational alpha(static_cast<Int128>(e.size()), scale);
  const Rational eps = (Rational(1) - alpha) / Rational(3);
  q.counting_lower_bound =
      (alpha * alpha * alpha - eps * (alpha - alpha * alpha)) * Rational(scale * scale);
  return q;
}

}  // namespace pgfree
