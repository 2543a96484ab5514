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

#include <cstddef>
#include <span>

#include "pgfree/error.hpp"

namespace pgfree {

/// Unnormalized Walsh-Hadamard transform, in place:
///   out[g] = sum_y in[y] * (-1)^{popcount(y & g)}.
/// The length must be a power of two. Exact for integer T as long as
/// |sum| fits in T.
template <class T>
void fwht_in_place(std::span<T> a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw InvalidArgument("transform length must be a power of two");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += half << 1) {
      T* lo = a.data() + block;
      T* hi = lo + half;
      for (std::size_t i = 0; i < half; ++i) {
        const T u = lo[i];
        const T v = hi[i];
        lo[i] = u + v;
        hi[i] = u - v;
      }
    }
  }
}

}  // namespace pgfree
