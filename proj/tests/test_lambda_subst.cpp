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


#include "catch_amalgamated.hpp"
#include "generators.hpp"
#include "lalc/engine.hpp"
#include "lalc/lambda_subst.hpp"
#include "lalc/oracle.hpp"
#include "lalc/scalar_eval.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term_ops.hpp"

using namespace lalc;
using lalc::testing::Rng;

namespace {

Term nf(const Term& t) {
  const auto r = normalize(t);
  REQUIRE(r.normal());
  return r.term;
}

Term nf(const char* text) { return nf(parse_term(text)); }

}  // namespace

TEST_CASE("applying lambdas", "[lambda]") {
  CHECK(apply_lambda(make_lam(make_var(0)), make_true()) == make_of(make_var(0), make_true()));
  CHECK_THROWS_AS(apply_lambda(make_true(), make_true()), std::invalid_argument);
  CHECK(nf("(\\x -> x) * true") == make_true());
  CHECK(nf("(\\x -> x # x) * true") == parse_term("true # true"));
  CHECK(ac_equal(nf("(\\x -> x # x) * (false + true)"), parse_term("true # true + false # false")));
  CHECK(nf("(\\x -> \\y -> x # y) * true * false") == parse_term("true # false"));
  CHECK(nf("(\\x -> \\y -> y # x) * true * false") == parse_term("false # true"));
}

TEST_CASE("substitution steps", "[lambda]") {
  CHECK(nf("var(0) bof subst(true)") == make_true());
  CHECK(nf("var(1) bof subst(true)") == make_var(0));
  CHECK(nf("var(0) bof lift(subst(true))") == make_var(0));
  CHECK(nf("var(0) of zerov") == make_zero_vec());
  CHECK(nf("var(0) of im . true") == parse_term("im . true"));
  CHECK(nf("(var(0) # var(0)) of (true # false)") == parse_term("(true # false) # (true # false)"));
  CHECK(nf("(var(0) @ true) . false bof subst(true)") == make_false());
}

TEST_CASE("group contents", "[lambda]") {
  CHECK(linearize_rules().size() == 8);
  CHECK(subst_rules().size() == 18);
}

TEST_CASE("reference substitution", "[lambda]") {
  CHECK(reference_substitute(make_tensor(make_var(0), make_var(0)), make_true()) == parse_term("true # true"));
  CHECK(reference_substitute(make_lam(make_var(1)), make_false()) == make_lam(make_false()));
  CHECK(reference_substitute(make_lam(make_var(0)), make_true()) == make_lam(make_var(0)));
  CHECK_THROWS_AS(reference_substitute(make_var(0), make_sum(make_true(), make_false())), std::invalid_argument);
}

TEST_CASE("explicit substitution agrees with the reference", "[lambda][property]") {
  Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const Term body = lalc::testing::gen_body(rng, 1 + static_cast<int>(lalc::testing::below(rng, 30)));
    const Term v = lalc::testing::gen_atom(rng);
    INFO(pretty(make_lam(body)) << " applied to " << pretty(v));
    REQUIRE(nf(make_app(make_lam(body), v)) == nf(reference_substitute(body, v)));
    REQUIRE(nf(make_app(make_lam(body), make_zero_vec())) == make_zero_vec());
  }
}

TEST_CASE("copy, not clone", "[lambda][property]") {
  Rng rng(52);
  const Term dup = make_lam(make_tensor(make_var(0), make_var(0)));
  for (int i = 0; i < 50; ++i) {
    const Term a = make_dyadic(lalc::testing::gen_dyadic(rng));
    const Term b = make_dyadic(lalc::testing::gen_dyadic(rng));
    const Term arg = make_sum(make_scalar_mul(a, make_false()), make_scalar_mul(b, make_true()));
    const Term copy = make_sum(make_scalar_mul(a, make_tensor(make_false(), make_false())),
                               make_scalar_mul(b, make_tensor(make_true(), make_true())));
    const Term clone = make_tensor(arg, arg);
    const Term got = nf(make_app(dup, arg));
    REQUIRE(got == nf(copy));
    const auto d_got = denote(got);
    const auto d_clone = denote(clone);
    REQUIRE(d_got.supported());
    REQUIRE(d_clone.supported());
    const bool ab_nonzero = !cscalar_normalize(make_scalar_prod(a, b)).is_zero();
    if (ab_nonzero) REQUIRE_FALSE(*d_got.value == *d_clone.value);
  }
}

TEST_CASE("application is linear", "[lambda][property]") {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const Term f = make_lam(lalc::testing::gen_body(rng, 1 + static_cast<int>(lalc::testing::below(rng, 12))));
    const Term u = lalc::testing::gen_vector(rng, 1 + static_cast<int>(lalc::testing::below(rng, 8)), 1);
    const Term v = lalc::testing::gen_vector(rng, 1 + static_cast<int>(lalc::testing::below(rng, 8)), 1);
    const auto whole = denote(nf(make_app(f, make_sum(u, v))));
    const auto left = denote(nf(make_app(f, u)));
    const auto right = denote(nf(make_app(f, v)));
    if (!whole.supported() || !left.supported() || !right.supported()) continue;
    DenseValue sum = *left.value;
    sum += *right.value;
    INFO(pretty(f) << " on " << pretty(u) << " and " << pretty(v));
    REQUIRE(*whole.value == sum);
  }
}

TEST_CASE("erasing an atom", "[lambda][property]") {
  Rng rng(54);
  const Term k = make_lam(make_lam(make_var(0)));
  for (int i = 0; i < 200; ++i) {
    const Term t = lalc::testing::gen_atom(rng);
    const Term u = lalc::testing::gen_vector(rng, 1 + static_cast<int>(lalc::testing::below(rng, 20)));
    REQUIRE(nf(make_app(make_app(k, t), u)) == nf(u));
  }
}
