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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lalc/dyadic.hpp"
#include "lalc/exact_scalar.hpp"
#include "lalc/oracle.hpp"
#include "lalc/term.hpp"

namespace lalc {

using GateMatrix = std::map<Term, DenseValue, TermLess>;

struct GateDef {
  std::string name;
  Term term;
  /// Column for every basis input; empty for higher-order programs.
  GateMatrix matrix;
  /// Qubits consumed, or 0 when the input is not a state.
  std::uint32_t arity = 0;
};

namespace detail {

inline Term ff() { return make_tensor(make_false(), make_false()); }
inline Term ft() { return make_tensor(make_false(), make_true()); }
inline Term tf() { return make_tensor(make_true(), make_false()); }
inline Term tt() { return make_tensor(make_true(), make_true()); }

inline DenseValue column(std::initializer_list<std::pair<Term, ExactScalar>> entries) {
  DenseValue v;
  for (const auto& [a, c] : entries) v.add(a, c);
  return v;
}

inline Term isqrt2() { return make_basis(ScalarBasisSymbol::InvSqrt2); }

inline GateDef not_gate() {
  GateDef g{"NOT", make_sum(make_match(make_false(), make_true()), make_match(make_true(), make_false())), {}, 1};
  g.matrix.emplace(make_false(), DenseValue::atom(make_true()));
  g.matrix.emplace(make_true(), DenseValue::atom(make_false()));
  return g;
}

inline GateDef h_gate() {
  const Term minus_one = make_dyadic(DyadicFloat::integer(-1));
  const Term plus = make_scalar_mul(isqrt2(), make_sum(make_false(), make_true()));
  const Term minus = make_scalar_mul(isqrt2(), make_sum(make_false(), make_scalar_mul(minus_one, make_true())));
  GateDef g{"H", make_sum(make_match(make_false(), plus), make_match(make_true(), minus)), {}, 1};
  const ExactScalar r = ExactScalar::basis(ScalarBasisSymbol::InvSqrt2);
  g.matrix.emplace(make_false(), column({{make_false(), r}, {make_true(), r}}));
  g.matrix.emplace(make_true(), column({{make_false(), r}, {make_true(), -r}}));
  return g;
}

inline GateDef p_gate() {
  const Term phase = make_scalar_sum(isqrt2(), make_basis(ScalarBasisSymbol::IInvSqrt2));
  GateDef g{"P",
            make_sum(make_match(make_false(), make_false()), make_match(make_true(), make_scalar_mul(phase, make_true()))),
            {},
            1};
  g.matrix.emplace(make_false(), DenseValue::atom(make_false()));
  g.matrix.emplace(make_true(), column({{make_true(), ExactScalar::basis(ScalarBasisSymbol::InvSqrt2) +
                                                          ExactScalar::basis(ScalarBasisSymbol::IInvSqrt2)}}));
  return g;
}

inline GateDef cnot_gate() {
  GateDef g{"CNOT",
            make_sum({make_match(ff(), ff()), make_match(ft(), ft()), make_match(tf(), tt()), make_match(tt(), tf())}),
            {},
            2};
  g.matrix.emplace(ff(), DenseValue::atom(ff()));
  g.matrix.emplace(ft(), DenseValue::atom(ft()));
  g.matrix.emplace(tf(), DenseValue::atom(tt()));
  g.matrix.emplace(tt(), DenseValue::atom(tf()));
  return g;
}

inline GateDef cross_gate() {
  std::vector<Term> rows;
  for (const Term& a : {make_false(), make_true()}) {
    for (const Term& b : {make_false(), make_true()}) {
      rows.push_back(make_match(make_tensor(a, b),
                                make_tensor(make_app(make_var(1), a), make_app(make_var(0), b))));
    }
  }
  return GateDef{"Cross", make_lam(make_lam(make_sum(std::move(rows)))), {}, 0};
}

inline GateDef dj_program() {
  const Term h = h_gate().term;
  const Term cross_hh = make_app(make_app(cross_gate().term, h), h);
  const Term body = make_app(cross_hh, make_app(make_var(0), make_app(cross_hh, ft())));
  return GateDef{"DJ", make_lam(body), {}, 0};
}

}  // namespace detail

inline const std::vector<GateDef>& gates() {
  static const std::vector<GateDef> all = {detail::not_gate(),   detail::h_gate(),     detail::p_gate(),
                                           detail::cnot_gate(),  detail::cross_gate(), detail::dj_program()};
  return all;
}

inline const GateDef& gate_def(std::string_view name) {
  for (const auto& g : gates()) {
    if (g.name == name) return g;
  }
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

/// One of NOT, H, P, CNOT, Cross, DJ.
inline Term gate(std::string_view name) { return gate_def(name).term; }

}  // namespace lalc
