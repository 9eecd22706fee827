// Copyright 2026 The lalc Authors
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
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lalc {

/// Unsigned binary numeral of arbitrary length.
///
/// Bits are stored least significant first; `to_string()` renders them most
/// significant first. A numeral may carry redundant leading zeros (they are
/// part of the raw syntax of a literal); `strip_leading_zeros()` removes them.
/// The empty numeral is not representable: zero is the single bit `0`.
class BinaryNumeral {
 public:
  BinaryNumeral() : bits_{0} {}

  static BinaryNumeral from_uint(std::uint64_t v) {
    BinaryNumeral n;
    n.bits_.clear();
    do {
      n.bits_.push_back(static_cast<std::uint8_t>(v & 1U));
      v >>= 1U;
    } while (v != 0);
    return n;
  }

  /// Parses a string of '0'/'1' characters, most significant first.
  static BinaryNumeral from_string(std::string_view msb_first) {
    if (msb_first.empty()) {
      throw std::invalid_argument("empty binary numeral");
    }
    BinaryNumeral n;
    n.bits_.clear();
    for (auto it = msb_first.rbegin(); it != msb_first.rend(); ++it) {
      if (*it != '0' && *it != '1') {
        throw std::invalid_argument("binary numeral contains non-bit character");
      }
      n.bits_.push_back(static_cast<std::uint8_t>(*it - '0'));
    }
    return n;
  }

  /// Parses an unsigned decimal integer.
  static BinaryNumeral from_decimal(std::string_view digits) {
    if (digits.empty()) {
      throw std::invalid_argument("empty decimal numeral");
    }
    BinaryNumeral n;
    const BinaryNumeral ten = from_uint(10);
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("decimal numeral contains non-digit character");
      }
      n = n * ten + from_uint(static_cast<std::uint64_t>(c - '0'));
    }
    return n;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) {
      s.push_back(static_cast<char>('0' + *it));
    }
    return s;
  }

  std::string to_decimal() const {
    BinaryNumeral n = *this;
    n.strip_leading_zeros();
    if (n.is_zero()) {
      return "0";
    }
    std::string out;
    while (!n.is_zero()) {
      auto [q, r] = n.divmod_small(10);
      out.push_back(static_cast<char>('0' + r));
      n = std::move(q);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::size_t width() const { return bits_.size(); }

  /// Bit `i`, counting from the least significant end.
  bool bit(std::size_t i) const { return i < bits_.size() && bits_[i] != 0; }

  bool is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
  }

  bool is_one() const { return significant_width() == 1 && bits_[0] == 1; }

  bool has_leading_zero() const { return bits_.size() > 1 && bits_.back() == 0; }

  /// True for `n::0` with `n` non-empty, i.e. the numeral ends in a 0 bit
  /// and has at least one more bit before it.
  bool has_trailing_zero() const { return bits_.size() > 1 && bits_.front() == 0; }

  void strip_leading_zeros() {
    while (bits_.size() > 1 && bits_.back() == 0) {
      bits_.pop_back();
    }
  }

  /// Removes the least significant bit (`n::b` becomes `n`).
  void drop_low_bit() {
    if (bits_.size() > 1) {
      bits_.erase(bits_.begin());
    } else {
      bits_[0] = 0;
    }
  }

  BinaryNumeral shifted_left(std::uint32_t k) const {
    if (is_zero()) {
      return BinaryNumeral{};
    }
    BinaryNumeral r;
    r.bits_.assign(k, 0);
    r.bits_.insert(r.bits_.end(), bits_.begin(), bits_.end());
    return r;
  }

  friend std::strong_ordering compare_value(const BinaryNumeral& a, const BinaryNumeral& b) {
    const std::size_t wa = a.significant_width();
    const std::size_t wb = b.significant_width();
    if (wa != wb) {
      return wa <=> wb;
    }
    for (std::size_t i = wa; i-- > 0;) {
      if (a.bits_[i] != b.bits_[i]) {
        return a.bits_[i] <=> b.bits_[i];
      }
    }
    return std::strong_ordering::equal;
  }

  /// Raw comparison: width first, then bits from the most significant end.
  /// Distinguishes numerals that differ only by leading zeros.
  friend std::strong_ordering compare_raw(const BinaryNumeral& a, const BinaryNumeral& b) {
    if (a.bits_.size() != b.bits_.size()) {
      return a.bits_.size() <=> b.bits_.size();
    }
    for (std::size_t i = a.bits_.size(); i-- > 0;) {
      if (a.bits_[i] != b.bits_[i]) {
        return a.bits_[i] <=> b.bits_[i];
      }
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const BinaryNumeral& a, const BinaryNumeral& b) {
    return compare_raw(a, b) == std::strong_ordering::equal;
  }

  friend BinaryNumeral operator+(const BinaryNumeral& a, const BinaryNumeral& b) {
    BinaryNumeral r;
    const std::size_t n = std::max(a.bits_.size(), b.bits_.size());
    r.bits_.assign(n + 1, 0);
    std::uint8_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t s = static_cast<std::uint8_t>(a.bit(i) + b.bit(i) + carry);
      r.bits_[i] = s & 1U;
      carry = s >> 1U;
    }
    r.bits_[n] = carry;
    r.strip_leading_zeros();
    return r;
  }

  /// Requires a >= b in value.
  friend BinaryNumeral operator-(const BinaryNumeral& a, const BinaryNumeral& b) {
    if (compare_value(a, b) < 0) {
      throw std::domain_error("binary numeral subtraction underflow");
    }
    BinaryNumeral r;
    r.bits_.assign(a.bits_.size(), 0);
    int borrow = 0;
    for (std::size_t i = 0; i < a.bits_.size(); ++i) {
      int d = static_cast<int>(a.bit(i)) - static_cast<int>(b.bit(i)) - borrow;
      borrow = d < 0 ? 1 : 0;
      r.bits_[i] = static_cast<std::uint8_t>(d < 0 ? d + 2 : d);
    }
    r.strip_leading_zeros();
    return r;
  }

  friend BinaryNumeral operator*(const BinaryNumeral& a, const BinaryNumeral& b) {
    BinaryNumeral r;
    const std::size_t wa = a.significant_width();
    const std::size_t wb = b.significant_width();
    std::vector<std::uint32_t> acc(wa + wb + 1, 0);
    for (std::size_t i = 0; i < wa; ++i) {
      if (a.bits_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < wb; ++j) {
        acc[i + j] += b.bits_[j];
      }
    }
    r.bits_.assign(acc.size() + 32, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.bits_.size(); ++i) {
      std::uint64_t v = carry + (i < acc.size() ? acc[i] : 0);
      r.bits_[i] = static_cast<std::uint8_t>(v & 1U);
      carry = v >> 1U;
    }
    r.strip_leading_zeros();
    return r;
  }

  /// Quotient and remainder by a small divisor.
  std::pair<BinaryNumeral, std::uint32_t> divmod_small(std::uint32_t divisor) const {
    if (divisor == 0) {
      throw std::domain_error("division by zero");
    }
    BinaryNumeral q;
    q.bits_.assign(bits_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = bits_.size(); i-- > 0;) {
      rem = (rem << 1U) | bits_[i];
      if (rem >= divisor) {
        q.bits_[i] = 1;
        rem -= divisor;
      }
    }
    q.strip_leading_zeros();
    return {q, static_cast<std::uint32_t>(rem)};
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto b : bits_) {
      h = (h ^ b) * 0x100000001b3ULL;
    }
    return h ^ bits_.size();
  }

 private:
  std::size_t significant_width() const {
    std::size_t w = bits_.size();
    while (w > 1 && bits_[w - 1] == 0) {
      --w;
    }
    return w;
  }

  std::vector<std::uint8_t> bits_;
};

enum class Sign : std::uint8_t { Pos, Neg };

/// A dyadic float `fl(sign, mantissa, exponent)` standing for
/// ±mantissa / 2^exponent.
///
/// Canonical form: no leading zeros in the mantissa; zero is `fl(pos,0,0)`;
/// a positive exponent implies an odd mantissa. Raw literals may violate
/// this and are brought to canonical form by `normalized()`.
struct DyadicFloat {
  Sign sign = Sign::Pos;
  BinaryNumeral mantissa;
  std::uint32_t exponent = 0;

  DyadicFloat() = default;
  DyadicFloat(Sign s, BinaryNumeral m, std::uint32_t e) : sign(s), mantissa(std::move(m)), exponent(e) {}

  static DyadicFloat integer(std::int64_t v) {
    const Sign s = v < 0 ? Sign::Neg : Sign::Pos;
    const std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    return DyadicFloat{s, BinaryNumeral::from_uint(mag), 0}.normalized();
  }

  /// ±m / 2^e with m given as a plain integer.
  static DyadicFloat ratio(std::int64_t m, std::uint32_t e) {
    DyadicFloat d = integer(m);
    d.exponent = e;
    return d.normalized();
  }

  static DyadicFloat zero() { return DyadicFloat{}; }
  static DyadicFloat one() { return integer(1); }

  bool is_zero() const { return mantissa.is_zero(); }
  bool is_one() const { return sign == Sign::Pos && exponent == 0 && mantissa.is_one() && !mantissa.has_leading_zero(); }

  bool is_canonical() const {
    if (mantissa.has_leading_zero()) {
      return false;
    }
    if (mantissa.is_zero()) {
      return sign == Sign::Pos && exponent == 0;
    }
    return exponent == 0 || mantissa.bit(0);
  }

  /// Brings the literal to canonical form without changing its value.
  DyadicFloat normalized() const {
    DyadicFloat r = *this;
    r.mantissa.strip_leading_zeros();
    if (r.mantissa.is_zero()) {
      return DyadicFloat{};
    }
    while (r.exponent > 0 && r.mantissa.has_trailing_zero()) {
      r.mantissa.drop_low_bit();
      --r.exponent;
    }
    return r;
  }

  DyadicFloat negated() const {
    DyadicFloat r = *this;
    if (!r.is_zero()) {
      r.sign = r.sign == Sign::Pos ? Sign::Neg : Sign::Pos;
    }
    return r;
  }

  /// Value comparison.
  friend std::strong_ordering compare_value(const DyadicFloat& a, const DyadicFloat& b) {
    const bool an = a.sign == Sign::Neg && !a.is_zero();
    const bool bn = b.sign == Sign::Neg && !b.is_zero();
    if (an != bn) {
      return an ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const std::uint32_t e = std::max(a.exponent, b.exponent);
    auto mag = compare_value(a.mantissa.shifted_left(e - a.exponent), b.mantissa.shifted_left(e - b.exponent));
    if (an) {
      return 0 <=> mag;
    }
    return mag;
  }

  /// Structural equality of the literal (sign, exponent, raw mantissa).
  friend bool operator==(const DyadicFloat& a, const DyadicFloat& b) {
    return a.sign == b.sign && a.exponent == b.exponent && a.mantissa == b.mantissa;
  }

  /// Structural order used by the term order: sign, then exponent, then
  /// mantissa.
  friend std::strong_ordering compare_structural(const DyadicFloat& a, const DyadicFloat& b) {
    if (a.sign != b.sign) {
      return a.sign <=> b.sign;
    }
    if (a.exponent != b.exponent) {
      return a.exponent <=> b.exponent;
    }
    return compare_raw(a.mantissa, b.mantissa);
  }

  /// `fl(pos,101,2)` style rendering.
  std::string to_string() const {
    return std::string("fl(") + (sign == Sign::Pos ? "pos," : "neg,") + mantissa.to_string() + "," +
           std::to_string(exponent) + ")";
  }

  /// Exact decimal rendering, e.g. `-0.75`. Canonical literals only.
  std::string to_decimal() const {
    BinaryNumeral scaled = mantissa;
    // m / 2^e == m * 5^e / 10^e
    const BinaryNumeral five = BinaryNumeral::from_uint(5);
    for (std::uint32_t i = 0; i < exponent; ++i) {
      scaled = scaled * five;
    }
    std::string digits = scaled.to_decimal();
    if (exponent > 0) {
      if (digits.size() <= exponent) {
        digits.insert(0, exponent - digits.size() + 1, '0');
      }
      digits.insert(digits.size() - exponent, ".");
    }
    return (sign == Sign::Neg && !is_zero() ? "-" : "") + digits;
  }

  std::size_t hash() const {
    return mantissa.hash() * 31 + exponent * 7 + static_cast<std::size_t>(sign);
  }
};

/// Canonical form of a dyadic float term.
inline DyadicFloat dyadic_normalize(const DyadicFloat& f) { return f.normalized(); }

/// Product following the sign table of the `timesf` rules:
/// mantissas multiply (timesb) and exponents add (addn).
inline DyadicFloat dyadic_mul(const DyadicFloat& a, const DyadicFloat& b) {
  const Sign s = a.sign == b.sign ? Sign::Pos : Sign::Neg;
  return DyadicFloat{s, a.mantissa * b.mantissa, a.exponent + b.exponent}.normalized();
}

/// Sum with exponents aligned to the larger one before adding or
/// subtracting mantissas.
inline DyadicFloat dyadic_add(const DyadicFloat& a, const DyadicFloat& b) {
  const std::uint32_t e = std::max(a.exponent, b.exponent);
  BinaryNumeral ma = a.mantissa.shifted_left(e - a.exponent);
  BinaryNumeral mb = b.mantissa.shifted_left(e - b.exponent);
  if (a.sign == b.sign) {
    return DyadicFloat{a.sign, ma + mb, e}.normalized();
  }
  if (compare_value(ma, mb) >= 0) {
    return DyadicFloat{a.sign, ma - mb, e}.normalized();
  }
  return DyadicFloat{b.sign, mb - ma, e}.normalized();
}

inline DyadicFloat operator+(const DyadicFloat& a, const DyadicFloat& b) { return dyadic_add(a, b); }
inline DyadicFloat operator*(const DyadicFloat& a, const DyadicFloat& b) { return dyadic_mul(a, b); }
inline DyadicFloat operator-(const DyadicFloat& a) { return a.negated(); }
inline DyadicFloat operator-(const DyadicFloat& a, const DyadicFloat& b) { return dyadic_add(a, b.negated()); }

}  // namespace lalc
