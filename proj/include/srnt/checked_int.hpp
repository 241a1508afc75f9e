// Copyright 2026 The srnt Authors
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
#include <stdexcept>
#include <string>
#include <string_view>

namespace srnt {

/// Thrown when exact integer arithmetic would leave the signed 128-bit range.
class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

/// Signed 128-bit integer with overflow-checked arithmetic.
///
/// Every arithmetic operation verifies its result and throws
/// srnt::overflow_error instead of wrapping silently. Division and
/// remainder truncate toward zero, like the built-in integer types.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(int value) : v_(value) {}                 // NOLINT(google-explicit-constructor)
  constexpr Int(long value) : v_(value) {}                // NOLINT(google-explicit-constructor)
  constexpr Int(long long value) : v_(value) {}           // NOLINT(google-explicit-constructor)
  constexpr Int(unsigned long long value) : v_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Int from_raw(__int128 value) {
    Int x;
    x.v_ = value;
    return x;
  }

  constexpr __int128 raw() const { return v_; }

  friend Int operator+(Int a, Int b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw overflow_error("integer addition overflow");
    return from_raw(r);
  }

  friend Int operator-(Int a, Int b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw overflow_error("integer subtraction overflow");
    return from_raw(r);
  }

  friend Int operator*(Int a, Int b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw overflow_error("integer multiplication overflow");
    return from_raw(r);
  }

  friend Int operator/(Int a, Int b) {
    check_division(a, b);
    return from_raw(a.v_ / b.v_);
  }

  friend Int operator%(Int a, Int b) {
    check_division(a, b);
    return from_raw(a.v_ % b.v_);
  }

  Int operator-() const {
    __int128 r;
    if (__builtin_sub_overflow(__int128{0}, v_, &r)) throw overflow_error("integer negation overflow");
    return from_raw(r);
  }

  Int& operator+=(Int other) { return *this = *this + other; }
  Int& operator-=(Int other) { return *this = *this - other; }
  Int& operator*=(Int other) { return *this = *this * other; }
  Int& operator/=(Int other) { return *this = *this / other; }
  Int& operator%=(Int other) { return *this = *this % other; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_negative() const { return v_ < 0; }

  constexpr int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Int abs() const { return v_ < 0 ? -*this : *this; }

  /// True iff the value fits in a signed 64-bit integer.
  constexpr bool fits_int64() const { return v_ >= INT64_MIN && v_ <= INT64_MAX; }

  constexpr std::int64_t as_int64() const {
    if (!fits_int64()) throw overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag != 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  static void check_division(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("integer division by zero");
    // The only representable-overflow case: INT128_MIN / -1.
    if (b.v_ == -1 && a.v_ == min_raw()) throw overflow_error("integer division overflow");
  }

  static constexpr __int128 min_raw() {
    return static_cast<__int128>(static_cast<unsigned __int128>(1) << 127);
  }

  __int128 v_ = 0;
};

/// Parses a decimal integer (optional leading '-'). Throws
/// std::invalid_argument on malformed input, srnt::overflow_error if the
/// value does not fit in 128 bits.
inline Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("integer literal has no digits");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (ch < '0' || ch > '9') throw std::invalid_argument("invalid digit in integer literal");
    value = value * 10 + Int(ch - '0');
  }
  return negative ? -value : value;
}

/// Floor of the square root of a nonnegative value. The result t satisfies
/// t*t <= x < (t+1)*(t+1) exactly; Newton iteration followed by verification.
inline Int isqrt_floor(Int x) {
  if (x.is_negative()) throw std::domain_error("isqrt of negative value");
  if (x.is_zero()) return 0;
  unsigned __int128 n = static_cast<unsigned __int128>(x.raw());
  int bits = 0;
  for (unsigned __int128 t = n; t != 0; t >>= 1) ++bits;
  unsigned __int128 r = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  for (;;) {
    unsigned __int128 next = (r + n / r) / 2;
    if (next >= r) break;
    r = next;
  }
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return Int::from_raw(static_cast<__int128>(r));
}

/// Tests whether x is a perfect square; on success stores the nonnegative
/// root through `root` when non-null.
inline bool is_perfect_square(Int x, Int* root = nullptr) {
  if (x.is_negative()) return false;
  Int r = isqrt_floor(x);
  if (r * r != x) return false;
  if (root != nullptr) *root = r;
  return true;
}

inline Int gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace srnt
