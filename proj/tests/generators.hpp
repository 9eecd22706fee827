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

// Random term generators for property tests.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lalc/dyadic.hpp"
#include "lalc/gates.hpp"
#include "lalc/term.hpp"

namespace lalc::testing {

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Canonical dyadic with small mantissa and exponent.
inline DyadicFloat gen_dyadic(Rng& rng, std::int64_t max_mantissa = 15, std::uint32_t max_exponent = 3) {
  const auto m = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(2 * max_mantissa + 1))) - max_mantissa;
  return DyadicFloat::ratio(m, static_cast<std::uint32_t>(below(rng, max_exponent + 1)));
}

/// Dyadic literal that may carry padding zeros or a negative zero.
inline DyadicFloat gen_raw_dyadic(Rng& rng) {
  DyadicFloat f = gen_dyadic(rng);
  if (coin(rng, 0.3)) {
    const auto pad = static_cast<std::uint32_t>(below(rng, 3));
    f.mantissa = f.mantissa.shifted_left(pad);
    f.exponent += pad;
  }
  if (coin(rng, 0.2)) {
    f.mantissa = BinaryNumeral::from_string("00" + f.mantissa.to_string());
  }
  if (f.mantissa.is_zero() && coin(rng)) f.sign = Sign::Neg;
  return f;
}

inline Term gen_scalar_leaf(Rng& rng) {
  switch (below(rng, 7)) {
    case 0: return make_scalar_zero();
    case 1: return make_scalar_one();
    case 2: return make_basis(ScalarBasisSymbol::InvSqrt2);
    case 3: return make_basis(ScalarBasisSymbol::I);
    case 4: return make_basis(ScalarBasisSymbol::IInvSqrt2);
    case 5: return make_dyadic(gen_raw_dyadic(rng));
    default: return make_dyadic(gen_dyadic(rng));
  }
}

/// Closed scalar built from literals, basis symbols, +, * and conj, with
/// about `size` nodes.
inline Term gen_scalar(Rng& rng, int size) {
  if (size <= 1) return gen_scalar_leaf(rng);
  const auto k = below(rng, 5);
  if (k == 0) return make_conj(gen_scalar(rng, size - 1));
  const int left = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(size - 1)));
  Term a = gen_scalar(rng, left);
  Term b = gen_scalar(rng, size - left);
  return k <= 2 ? make_scalar_sum(a, b) : make_scalar_prod(a, b);
}

/// Closed vector built from true, false, zerov, +, scalar action and #.
inline Term gen_vector(Rng& rng, int size, int tensor_depth = 2) {
  if (size <= 1) {
    switch (below(rng, 5)) {
      case 0: return make_zero_vec();
      case 1:
      case 2: return make_true();
      default: return make_false();
    }
  }
  const auto k = below(rng, tensor_depth > 0 ? 4 : 3);
  if (k == 0) {
    const int s = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(std::min(size - 1, 4))));
    return make_scalar_mul(gen_scalar(rng, s), gen_vector(rng, size - s, tensor_depth));
  }
  const int left = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(size - 1)));
  if (k == 3) {
    return make_tensor(gen_vector(rng, left, tensor_depth - 1), gen_vector(rng, size - left, tensor_depth - 1));
  }
  return make_sum(gen_vector(rng, left, tensor_depth), gen_vector(rng, size - left, tensor_depth));
}

/// Atom of the form true, false, a # b or a |> b.
inline Term gen_atom(Rng& rng, int depth = 2) {
  if (depth <= 0 || coin(rng, 0.5)) return coin(rng) ? make_true() : make_false();
  Term a = gen_atom(rng, depth - 1);
  Term b = gen_atom(rng, depth - 1);
  return coin(rng, 0.7) ? make_tensor(a, b) : make_match(a, b);
}

/// Body under one binder: index 0 may occur any number of times; no
/// nested binders.
inline Term gen_body(Rng& rng, int size) {
  if (size <= 1) {
    switch (below(rng, 6)) {
      case 0: return make_zero_vec();
      case 1: return make_true();
      case 2: return make_false();
      default: return make_var(0);
    }
  }
  const auto k = below(rng, 6);
  if (k == 0) {
    if (size >= 4 && coin(rng, 0.3)) {
      const int left = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(size - 3)));
      Term dot = make_dot(gen_body(rng, left), gen_body(rng, 1));
      return make_scalar_mul(dot, gen_body(rng, size - left - 2));
    }
    return make_scalar_mul(gen_scalar(rng, 1), gen_body(rng, size - 1));
  }
  const int left = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(size - 1)));
  Term a = gen_body(rng, left);
  Term b = gen_body(rng, size - left);
  switch (k) {
    case 1:
    case 2: return make_sum(a, b);
    case 3: return make_tensor(a, b);
    case 4: return make_match(a, b);
    default: return make_app(make_match(a, gen_body(rng, 1)), b);
  }
}

// Circuits over H, P, NOT and CNOT acting on states ((a # b) # c).

inline Term identity_gate() {
  return make_sum(make_match(make_false(), make_false()), make_match(make_true(), make_true()));
}

/// `\x -> \y -> sum (l # r) |> ((x * l) # (y * r))`, where `l` ranges over
/// the basis of `left_qubits` qubits and `r` over one qubit.
inline Term product_gate(std::uint32_t left_qubits) {
  std::vector<Term> lefts = {make_false(), make_true()};
  for (std::uint32_t q = 1; q < left_qubits; ++q) {
    std::vector<Term> next;
    for (const auto& l : lefts) {
      next.push_back(make_tensor(l, make_false()));
      next.push_back(make_tensor(l, make_true()));
    }
    lefts = std::move(next);
  }
  std::vector<Term> rows;
  for (const auto& l : lefts) {
    for (const Term& r : {make_false(), make_true()}) {
      rows.push_back(make_match(make_tensor(l, r), make_tensor(make_app(make_var(1), l), make_app(make_var(0), r))));
    }
  }
  return make_lam(make_lam(make_sum(std::move(rows))));
}

inline Term gen_layer(Rng& rng, std::uint32_t qubits) {
  if (qubits == 1) {
    switch (below(rng, 4)) {
      case 0: return gate("H");
      case 1: return gate("P");
      case 2: return gate("NOT");
      default: return identity_gate();
    }
  }
  if (qubits == 2 && coin(rng, 0.3)) return gate("CNOT");
  return make_app(make_app(product_gate(qubits - 1), gen_layer(rng, qubits - 1)), gen_layer(rng, 1));
}

inline Term gen_basis_state(Rng& rng, std::uint32_t qubits) {
  Term s = coin(rng) ? make_true() : make_false();
  for (std::uint32_t q = 1; q < qubits; ++q) s = make_tensor(s, coin(rng) ? make_true() : make_false());
  return s;
}

/// `layer_k * (... * (layer_1 * state))`.
inline Term gen_circuit(Rng& rng, std::uint32_t qubits, std::uint32_t depth) {
  Term t = gen_basis_state(rng, qubits);
  for (std::uint32_t i = 0; i < depth; ++i) t = make_app(gen_layer(rng, qubits), t);
  return t;
}

}  // namespace lalc::testing
