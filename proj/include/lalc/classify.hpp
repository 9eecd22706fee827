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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lalc/engine.hpp"
#include "lalc/exact_scalar.hpp"
#include "lalc/scalar_eval.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"

namespace lalc {

enum class Shape : std::uint8_t { Zero, LinearCombination, Lambda, Stuck, Scalar };

inline const char* to_string(Shape s) {
  switch (s) {
    case Shape::Zero: return "Zero";
    case Shape::LinearCombination: return "LinearCombination";
    case Shape::Lambda: return "Lambda";
    case Shape::Stuck: return "Stuck";
    case Shape::Scalar: return "Scalar";
  }
  return "?";
}

/// One summand `coefficient . atom`; the coefficient is null when it is the
/// implicit 1.
struct Component {
  Term coefficient;
  Term atom;

  /// Exact value of the coefficient when it is a closed scalar.
  std::optional<ExactScalar> value() const {
    if (!coefficient) {
      return ExactScalar::one();
    }
    try {
      return cscalar_normalize(coefficient);
    } catch (const NonScalarResidue&) {
      return std::nullopt;
    }
  }
};

struct Classification {
  Shape shape = Shape::Zero;
  std::vector<Component> components;
  std::string reason;
};

namespace detail {

inline std::optional<std::string> stuck_reason(const Term& t) {
  switch (t.kind()) {
    case Kind::App: {
      const Term& f = t.child(0);
      if (is_basis_atom(f) || f.kind() == Kind::Tensor || f.kind() == Kind::True || f.kind() == Kind::False) {
        return "application of base vector";
      }
      if (f.kind() == Kind::Var) return "application of variable";
      break;
    }
    case Kind::Of:
      if (t.child(1).kind() == Kind::Lam) return "application to a lambda";
      return "pending application";
    case Kind::Bof: return "pending substitution";
    case Kind::Var: return "free variable";
    default: break;
  }
  for (const auto& c : t.children()) {
    if (auto r = stuck_reason(c)) return r;
  }
  if (t.kind() == Kind::Dot) return "irreducible scalar product";
  if (t.kind() == Kind::App) return "irreducible application";
  return std::nullopt;
}

}  // namespace detail

/// Shape of a normal form. Throws `std::invalid_argument` on terms that
/// still contain a redex.
inline Classification classify_normal_form(const Term& t, const RuleSet& rs = build_ruleset()) {
  if (!is_normal(t, rs)) {
    throw std::invalid_argument("classify_normal_form: term is not a normal form");
  }
  Classification c;
  if (t.sort() == Sort::Scalar) {
    c.shape = Shape::Scalar;
    return c;
  }
  if (t.kind() == Kind::ZeroVec) {
    c.shape = Shape::Zero;
    return c;
  }
  if (t.kind() == Kind::Lam) {
    c.shape = Shape::Lambda;
    return c;
  }
  std::vector<Term> summands;
  if (t.kind() == Kind::Sum) {
    summands.assign(t.children().begin(), t.children().end());
  } else {
    summands.push_back(t);
  }
  for (const auto& s : summands) {
    if (is_basis_atom(s)) {
      c.components.push_back({Term{}, s});
    } else if (s.kind() == Kind::ScalarMul && is_basis_atom(s.child(1))) {
      c.components.push_back({s.child(0), s.child(1)});
    } else {
      c.shape = Shape::Stuck;
      c.components.clear();
      c.reason = detail::stuck_reason(s).value_or(s.kind() == Kind::Lam || (s.kind() == Kind::ScalarMul &&
                                                                               s.child(1).kind() == Kind::Lam)
                                                      ? "combination of lambdas"
                                                      : "irreducible term");
      return c;
    }
  }
  c.shape = Shape::LinearCombination;
  return c;
}

}  // namespace lalc
