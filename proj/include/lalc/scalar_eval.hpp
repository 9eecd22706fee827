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

#include <stdexcept>
#include <string>
#include <vector>

#include "lalc/exact_scalar.hpp"
#include "lalc/term.hpp"

namespace lalc {

/// Raised when a scalar term contains constructs the direct evaluator does
/// not interpret (scalar products of vectors, substitutions, variables).
class NonScalarResidue : public std::runtime_error {
 public:
  explicit NonScalarResidue(const std::string& what) : std::runtime_error("non-scalar residue: " + what) {}
};

/// Direct evaluation of a closed scalar term to its exact value.
inline ExactScalar cscalar_normalize(const Term& s) {
  switch (s.kind()) {
    case Kind::ScalarZero: return ExactScalar::zero();
    case Kind::ScalarOne: return ExactScalar::one();
    case Kind::DyadicLit: return ExactScalar::from_dyadic(s.dyadic().normalized());
    case Kind::BasisScalar: return ExactScalar::basis(s.basis());
    case Kind::ScalarSum: {
      ExactScalar acc;
      for (const auto& c : s.children()) {
        acc += cscalar_normalize(c);
      }
      return acc;
    }
    case Kind::ScalarProd: {
      ExactScalar acc = ExactScalar::one();
      for (const auto& c : s.children()) {
        acc *= cscalar_normalize(c);
      }
      return acc;
    }
    case Kind::Conj: return conjugate(cscalar_normalize(s.child(0)));
    default: throw NonScalarResidue(to_string(s.kind()));
  }
}

/// The normal scalar term with the given value: a sum of monomials `d`,
/// `b` or `d * b`, one per nonzero component, with `1` implicit.
inline Term scalar_term(const ExactScalar& x) {
  static constexpr ScalarBasisSymbol kOrder[] = {ScalarBasisSymbol::One, ScalarBasisSymbol::InvSqrt2,
                                                 ScalarBasisSymbol::I, ScalarBasisSymbol::IInvSqrt2};
  std::vector<Term> monomials;
  for (auto b : kOrder) {
    const DyadicFloat& d = x.component(b);
    if (d.is_zero()) {
      continue;
    }
    if (b == ScalarBasisSymbol::One) {
      monomials.push_back(d.is_one() ? make_scalar_one() : make_dyadic(d));
    } else if (d.is_one()) {
      monomials.push_back(make_basis(b));
    } else {
      monomials.push_back(make_scalar_prod(make_dyadic(d), make_basis(b)));
    }
  }
  return make_scalar_sum(std::move(monomials));
}

}  // namespace lalc
