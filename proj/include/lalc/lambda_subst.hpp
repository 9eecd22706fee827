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

/**
 * @file
 * The lambda layer: linearity of application over substitution, and
 * explicit substitution of de Bruijn indices.
 *
 * `t of v` stands for the body `t` (index 0 bound) applied to `v`. It is
 * pushed through sums and scalar actions of `v` first, so substitution only
 * ever receives a base vector or the null vector. Tensors and matching pairs
 * are split into two nested applications.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lalc/rule.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"

namespace lalc {

/// `L(u) * v` becomes `u of v`.
inline Term apply_lambda(const Term& f, const Term& v) {
  if (!f || f.kind() != Kind::Lam) {
    throw std::invalid_argument("apply_lambda: function is not a lambda");
  }
  return make_of(f.child(0), v);
}

/// The linearity group, in order.
inline std::vector<Rule> linearize_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Linearity;
  const Term lift2 = make_lift_under(make_lift());
  auto split = [&](Kind pair) {
    Term payload = pair == Kind::Tensor ? make_tensor(make_var(0), make_var(1)) : make_match(make_var(0), make_var(1));
    Term shifted = make_bof(make_bof(make_bof(t(), lift2), lift2), make_subst_arg(payload));
    return make_of(make_of(shifted, v()), w());
  };
  return {
      rule("lin.beta", G, make_app(make_lam(u()), v()), make_of(u(), v())),
      rule("lin.scale", G, make_of(t(), make_scalar_mul(l(), v())), make_scalar_mul(l(), make_of(t(), v()))),
      rule("lin.sum", G, make_of(t(), raw::sum({v(), w()})), make_sum(make_of(t(), v()), make_of(t(), w()))),
      rule("lin.true", G, make_of(t(), make_true()), make_bof(t(), make_subst_arg(make_true()))),
      rule("lin.false", G, make_of(t(), make_false()), make_bof(t(), make_subst_arg(make_false()))),
      rule("lin.zero", G, make_of(t(), make_zero_vec()), make_bof(t(), make_subst_arg(make_zero_vec()))),
      rule("lin.tensor", G, make_of(t(), make_tensor(v(), w())), split(Kind::Tensor)),
      rule("lin.match", G, make_of(t(), make_match(v(), w())), split(Kind::Match)),
  };
}

/// The explicit-substitution group, in order.
inline std::vector<Rule> subst_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Substitution;
  auto bof = [](Term a) { return make_bof(std::move(a), s()); };
  return {
      rule("subst.sum", G, bof(raw::sum({t(), u()})), make_sum(bof(t()), bof(u()))),
      rule("subst.scale", G, bof(make_scalar_mul(l(), u())), make_scalar_mul(bof(l()), bof(u()))),
      rule("subst.dot", G, bof(make_dot(t(), u())), make_dot(bof(t()), bof(u()))),
      rule("subst.scalar-sum", G, bof(raw::scalar_sum({l(), m()})), make_scalar_sum(bof(l()), bof(m()))),
      rule("subst.scalar-prod", G, bof(raw::scalar_prod({l(), m()})), make_scalar_prod(bof(l()), bof(m()))),
      guarded(rule("subst.scalar", G, bof(l()), l()), [](const Bindings& b) { return !b[kL].has(kHasVar); }),
      rule("subst.tensor", G, bof(make_tensor(t(), u())), make_tensor(bof(t()), bof(u()))),
      rule("subst.match", G, bof(make_match(t(), u())), make_match(bof(t()), bof(u()))),
      rule("subst.app", G, bof(make_app(t(), u())), make_app(bof(t()), bof(u()))),
      rule("subst.lam", G, bof(make_lam(t())), make_lam(make_bof(t(), make_lift_under(s())))),
      rule("subst.zero", G, bof(make_zero_vec()), make_zero_vec()),
      rule("subst.false", G, bof(make_false()), make_false()),
      rule("subst.true", G, bof(make_true()), make_true()),
      rule("subst.var0-arg", G, make_bof(make_var(0), make_subst_arg(v())), v()),
      rule("subst.varS-arg", G, make_bof(p(1), make_subst_arg(v())), p(0)),
      rule("subst.var0-lift", G, make_bof(make_var(0), make_lift_under(s())), make_var(0)),
      rule("subst.varS-lift", G, make_bof(p(1), make_lift_under(s())), make_bof(make_bof(p(0), s()), make_lift())),
      rule("subst.shift", G, make_bof(p(0), make_lift()), p(1)),
  };
}

namespace detail {

inline Term reference_subst(const Term& t, const Term& v, std::uint32_t depth) {
  if (!t.has(kHasVar)) {
    return t;
  }
  switch (t.kind()) {
    case Kind::Var: {
      const std::uint32_t n = t.var_index();
      if (n == depth) return v;
      if (n > depth) return make_var(n - 1);
      return t;
    }
    case Kind::Lam:
      return make_lam(reference_subst(t.child(0), v, depth + 1));
    case Kind::Of:
      return make_of(reference_subst(t.child(0), v, depth + 1), reference_subst(t.child(1), v, depth));
    case Kind::Bof:
    case Kind::SubstArg:
    case Kind::LiftUnder:
      throw std::invalid_argument("reference_substitute: explicit substitution in body");
    default:
      break;
  }
  std::vector<Term> kids;
  kids.reserve(t.arity());
  for (const auto& c : t.children()) {
    kids.push_back(reference_subst(c, v, depth));
  }
  return with_children(t, std::move(kids));
}

}  // namespace detail

/// Direct de Bruijn substitution of a closed base vector (or the null
/// vector) for index 0 of `body`, lowering the other free indices.
inline Term reference_substitute(const Term& body, const Term& v) {
  if (!v || (!is_basis_atom(v) && v.kind() != Kind::ZeroVec)) {
    throw std::invalid_argument("reference_substitute: argument must be a base vector or zerov");
  }
  return detail::reference_subst(body, v, 0);
}

}  // namespace lalc
