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


#include <algorithm>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "generators.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"

using namespace lalc;
using lalc::testing::Rng;

namespace {

/// Same term modulo AC, with every AC list shuffled and regrouped into
/// nested raw nodes.
Term scramble(const Term& t, Rng& rng) {
  if (t.arity() == 0) return t;
  std::vector<Term> kids;
  for (const auto& c : t.children()) kids.push_back(scramble(c, rng));
  if (!is_ac(t.kind())) return with_children(t, std::move(kids));
  std::shuffle(kids.begin(), kids.end(), rng);
  while (kids.size() > 2 && lalc::testing::coin(rng, 0.6)) {
    const auto i = lalc::testing::below(rng, kids.size() - 1);
    Term grouped = raw::ac(t.kind(), {kids[i], kids[i + 1]});
    kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i), kids.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(i), grouped);
  }
  return raw::ac(t.kind(), std::move(kids));
}

Term gen_any(Rng& rng) {
  const int size = 1 + static_cast<int>(lalc::testing::below(rng, 20));
  switch (lalc::testing::below(rng, 3)) {
    case 0: return lalc::testing::gen_scalar(rng, size);
    case 1: return lalc::testing::gen_vector(rng, size);
    default: return make_lam(lalc::testing::gen_body(rng, size));
  }
}

}  // namespace

TEST_CASE("canonical AC lists", "[term]") {
  CHECK(make_sum(make_true(), make_false()) == make_sum(make_false(), make_true()));
  const Term nested = raw::sum({make_true(), raw::sum({make_false(), make_zero_vec()})});
  const Term flat = ac_canonicalize(nested);
  REQUIRE(flat.kind() == Kind::Sum);
  CHECK(flat.arity() == 3);
  for (const auto& c : flat.children()) CHECK(c.kind() != Kind::Sum);
  CHECK(std::is_sorted(flat.children().begin(), flat.children().end(), TermLess{}));
  CHECK(ac_canonicalize(make_lam(make_var(0))) == make_lam(make_var(0)));
}

TEST_CASE("AC equality", "[term]") {
  const Term a = make_true();
  const Term b = make_false();
  const Term c = make_zero_vec();
  CHECK(ac_equal(raw::sum({raw::sum({a, b}), c}), raw::sum({a, raw::sum({b, c})})));
  CHECK_FALSE(ac_equal(a, b));
  const Term l = make_basis(ScalarBasisSymbol::I);
  const Term m = make_basis(ScalarBasisSymbol::InvSqrt2);
  CHECK_FALSE(ac_equal(make_scalar_mul(l, make_scalar_mul(m, a)), make_scalar_mul(make_scalar_prod(l, m), a)));
}

TEST_CASE("basis atoms", "[term]") {
  CHECK(is_basis_atom(make_true()));
  CHECK(is_basis_atom(make_tensor(make_true(), make_match(make_false(), make_true()))));
  CHECK_FALSE(is_basis_atom(make_sum(make_true(), make_false())));
  CHECK_FALSE(is_basis_atom(make_zero_vec()));
  CHECK_FALSE(is_basis_atom(make_tensor(make_true(), make_var(0))));
}

TEST_CASE("free indices", "[term]") {
  CHECK_FALSE(max_free_index(make_lam(make_var(0))).has_value());
  CHECK(max_free_index(make_var(0)) == 0U);
  CHECK(max_free_index(make_lam(make_var(1))) == 0U);
  CHECK(max_free_index(make_lam(make_lam(make_tensor(make_var(1), make_var(4))))) == 2U);
  CHECK(is_closed(parse_term("\\x -> \\y -> x # y")));
}

TEST_CASE("sort discipline", "[term]") {
  CHECK_THROWS_AS(make_sum(make_true(), make_scalar_one()), SortError);
  CHECK_THROWS_AS(make_scalar_mul(make_true(), make_true()), SortError);
  CHECK_THROWS_AS(make_scalar_prod(make_scalar_one(), make_false()), SortError);
  CHECK_THROWS_AS(make_tensor(make_scalar_one(), make_false()), SortError);
  CHECK(make_dot(make_true(), make_false()).sort() == Sort::Scalar);
  CHECK(make_scalar_mul(make_scalar_one(), make_true()).sort() == Sort::Vector);
}

TEST_CASE("canonicalization is idempotent and permutation invariant", "[term][property]") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen_any(rng);
    INFO(to_sexpr(t));
    REQUIRE(ac_canonicalize(t) == t);
    const Term s = scramble(t, rng);
    REQUIRE(ac_canonicalize(s) == t);
    REQUIRE(ac_equal(s, t));
    REQUIRE(ac_equal(t, s));
  }
}

TEST_CASE("AC equality is an equivalence", "[term][property]") {
  Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const Term t = gen_any(rng);
    const Term u = lalc::testing::coin(rng) ? scramble(t, rng) : gen_any(rng);
    const Term v = lalc::testing::coin(rng) ? scramble(u, rng) : gen_any(rng);
    REQUIRE(ac_equal(t, t));
    REQUIRE(ac_equal(t, u) == ac_equal(u, t));
    if (ac_equal(t, u) && ac_equal(u, v)) REQUIRE(ac_equal(t, v));
  }
}

TEST_CASE("the term order is strict and total", "[term][property]") {
  Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen_any(rng);
    const Term u = gen_any(rng);
    const bool lt = TermLess{}(t, u);
    const bool gt = TermLess{}(u, t);
    if (t == u) {
      REQUIRE_FALSE(lt);
      REQUIRE_FALSE(gt);
    } else {
      REQUIRE(lt != gt);
    }
  }
}

TEST_CASE("closing a body under a binder", "[term][property]") {
  Rng rng(34);
  for (int i = 0; i < 500; ++i) {
    Term body = lalc::testing::gen_body(rng, 1 + static_cast<int>(lalc::testing::below(rng, 15)));
    if (lalc::testing::coin(rng, 0.3)) body = make_tensor(body, make_var(static_cast<std::uint32_t>(lalc::testing::below(rng, 3))));
    const auto inner = max_free_index(body);
    const bool closed_lam = !max_free_index(make_lam(body)).has_value();
    REQUIRE(closed_lam == (!inner.has_value() || *inner == 0));
  }
}
