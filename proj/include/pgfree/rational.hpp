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

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "pgfree/error.hpp"

namespace pgfree {

__extension__ typedef __int128 Int128;

inline std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so INT128_MIN does not overflow.
  std::string digits;
  Int128 x = negative ? v : -v;
  while (x != 0) {
    digits.insert(digits.begin(), static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) digits.insert(digits.begin(), '-');
  return digits;
}

/// Exact rational number over 128-bit integers, always normalized
/// (gcd(num, den) = 1, den > 0). Every arithmetic step checks for overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int128 value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(Int128 num, Int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidArgument("rational with zero denominator");
    normalize();
  }

  Int128 num() const noexcept { return num_; }
  Int128 den() const noexcept { return den_; }

  Rational operator-() const { return Rational(checked_neg(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const Int128 g1 = gcd(a.num_, b.den_);
    const Int128 g2 = gcd(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int128 lhs = checked_mul(a.num_, b.den_);
    const Int128 rhs = checked_mul(b.num_, a.den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
  }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static Int128 gcd(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }
  static Int128 checked_mul(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_mul_overflow(a, b, &out)) throw ResourceCapError("rational overflow");
    return out;
  }
  static Int128 checked_add(Int128 a, Int128 b) {
    Int128 out;
    if (__builtin_add_overflow(a, b, &out)) throw ResourceCapError("rational overflow");
    return out;
  }
  static Int128 checked_neg(Int128 a) { return checked_mul(a, -1); }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const Int128 g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Int128 num_ = 0;
  Int128 den_ = 1;
};

/// 2^k as an exact integer.
inline Int128 pow2(int k) {
  if (k < 0 || k > 125) throw InvalidArgument("pow2 exponent out of range");
  return static_cast<Int128>(1) << k;
}

/// (1 - c / 2^k) * 2^r, the shape of every density threshold used here.
inline Rational density_threshold(int r, Int128 c, int k) {
  return (Rational(1) - Rational(c, pow2(k))) * Rational(pow2(r));
}

}  // namespace pgfree
