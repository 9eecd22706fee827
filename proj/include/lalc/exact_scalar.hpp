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

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "lalc/dyadic.hpp"

namespace lalc {

/// Basis of the computational scalars as a module over dyadic floats.
enum class ScalarBasisSymbol : std::uint8_t { One = 0, InvSqrt2 = 1, I = 2, IInvSqrt2 = 3 };

inline const char* to_string(ScalarBasisSymbol s) {
  switch (s) {
    case ScalarBasisSymbol::One: return "One";
    case ScalarBasisSymbol::InvSqrt2: return "InvSqrt2";
    case ScalarBasisSymbol::I: return "I";
    case ScalarBasisSymbol::IInvSqrt2: return "IInvSqrt2";
  }
  return "?";
}

/// Exact computational scalar a + b/√2 + c·i + d·i/√2 with dyadic
/// coefficients. Components are always kept canonical.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(DyadicFloat a, DyadicFloat b, DyadicFloat c, DyadicFloat d)
      : c_{a.normalized(), b.normalized(), c.normalized(), d.normalized()} {}

  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return from_dyadic(DyadicFloat::one()); }
  static ExactScalar from_dyadic(const DyadicFloat& a) { return ExactScalar{a, {}, {}, {}}; }
  static ExactScalar basis(ScalarBasisSymbol s) {
    ExactScalar r;
    r.c_[static_cast<std::size_t>(s)] = DyadicFloat::one();
    return r;
  }
  static ExactScalar from_ints(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return ExactScalar{DyadicFloat::integer(a), DyadicFloat::integer(b), DyadicFloat::integer(c),
                       DyadicFloat::integer(d)};
  }

  const DyadicFloat& component(ScalarBasisSymbol s) const { return c_[static_cast<std::size_t>(s)]; }
  const DyadicFloat& a() const { return c_[0]; }
  const DyadicFloat& b() const { return c_[1]; }
  const DyadicFloat& c() const { return c_[2]; }
  const DyadicFloat& d() const { return c_[3]; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const { return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.c_ == y.c_; }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    for (std::size_t k = 0; k < 4; ++k) {
      r.c_[k] = x.c_[k] + y.c_[k];
    }
    return r;
  }

  friend ExactScalar operator-(const ExactScalar& x) {
    ExactScalar r;
    for (std::size_t k = 0; k < 4; ++k) {
      r.c_[k] = -x.c_[k];
    }
    return r;
  }

  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

  // Basis products, with r = 1/√2:
  //   r·r = 1/2,  r·i = ir,  r·ir = i/2,  i·i = -1,  i·ir = -r,  ir·ir = -1/2
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    const DyadicFloat half = DyadicFloat::ratio(1, 1);
    const auto& [a1, b1, c1, d1] = x.c_;
    const auto& [a2, b2, c2, d2] = y.c_;
    ExactScalar r;
    r.c_[0] = a1 * a2 + half * (b1 * b2) - c1 * c2 - half * (d1 * d2);
    r.c_[1] = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2;
    r.c_[2] = a1 * c2 + c1 * a2 + half * (b1 * d2) + half * (d1 * b2);
    r.c_[3] = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
    return r;
  }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  std::string to_string() const {
    return "(" + c_[0].to_decimal() + ", " + c_[1].to_decimal() + ", " + c_[2].to_decimal() + ", " +
           c_[3].to_decimal() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

 private:
  std::array<DyadicFloat, 4> c_{};
};

/// Complex conjugation: (a, b, c, d) -> (a, b, -c, -d).
inline ExactScalar conjugate(const ExactScalar& s) { return ExactScalar{s.a(), s.b(), -s.c(), -s.d()}; }

}  // namespace lalc
