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


#include <string>

#include "catch_amalgamated.hpp"
#include "generators.hpp"
#include "rule_cases.hpp"
#include "lalc/engine.hpp"
#include "lalc/json_io.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term_ops.hpp"

using namespace lalc;
using lalc::testing::Rng;

namespace {

ErrorKind error_of(const char* text) {
  try {
    Program p = parse(text);
    Environment env;
    for (const auto& d : p.defs) env[d.name] = elaborate_definition(d, env);
    if (p.main) to_debruijn(*p.main, env);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::Syntax;
}

void round_trip(const Term& t) {
  const std::string text = pretty(t);
  INFO(text);
  REQUIRE(ac_equal(parse_term(text), t));
  REQUIRE(from_json(Json::parse(to_json(t).dump())) == t);
}

}  // namespace

TEST_CASE("parsing terms", "[syntax]") {
  CHECK(parse_term("true") == make_true());
  CHECK(parse_term("\\x -> \\y -> x # y") == make_lam(make_lam(make_tensor(make_var(1), make_var(0)))));
  CHECK(parse_term("\\x -> x") == make_lam(make_var(0)));
  CHECK(parse_term("\\x -> \\y -> y") == make_lam(make_lam(make_var(0))));
  CHECK(parse_term("(true |> false + false |> true) * false") ==
        make_app(make_sum(make_match(make_true(), make_false()), make_match(make_false(), make_true())), make_false()));
  CHECK(parse_term("a * b * c", {{"a", make_true()}, {"b", make_false()}, {"c", make_zero_vec()}}) ==
        make_app(make_app(make_true(), make_false()), make_zero_vec()));
  CHECK(parse_term("im . isqrt2 . true") ==
        make_scalar_mul(make_basis(ScalarBasisSymbol::I), make_scalar_mul(make_basis(ScalarBasisSymbol::InvSqrt2), make_true())));
  CHECK(parse_term("im * isqrt2") == make_basis(ScalarBasisSymbol::IInvSqrt2));
  CHECK(parse_term("1.75") == make_dyadic(DyadicFloat::ratio(7, 2)));
  CHECK(parse_term("3/2^4") == make_dyadic(DyadicFloat::ratio(3, 4)));
  CHECK(parse_term("-0.5") == make_dyadic(DyadicFloat::ratio(-1, 1)));
  CHECK(parse_term("0b0110/2^1").dyadic().mantissa.to_string() == "0110");
  CHECK(parse_term("true // comment\n + false") == make_sum(make_true(), make_false()));
}

TEST_CASE("programs", "[syntax]") {
  const Program p = parse("let A = true; let B = A # A; B + A");
  REQUIRE(p.defs.size() == 2);
  CHECK(p.defs[0].name == "A");
  REQUIRE(p.main.has_value());
  Environment env;
  for (const auto& d : p.defs) env[d.name] = elaborate_definition(d, env);
  CHECK(to_debruijn(*p.main, env) == parse_term("true # true + true"));
  CHECK_FALSE(parse("let A = true;").main.has_value());
}

TEST_CASE("printing", "[syntax]") {
  CHECK(pretty(parse_term("(isqrt2 + im * isqrt2) . true")) == "(isqrt2 + im * isqrt2) . true");
  CHECK(pretty(make_zero_vec()) == "zerov");
  CHECK(pretty(make_tensor(make_true(), make_true())) == "true # true");
  CHECK(pretty(make_lam(make_lam(make_tensor(make_var(1), make_var(0))))) == "\\x0 -> \\x1 -> x0 # x1");
  CHECK(pretty(make_var(2)) == "var(2)");
  CHECK(pretty(make_dyadic(DyadicFloat::ratio(-3, 2))) == "-0.75");
  CHECK(pretty(make_dyadic(DyadicFloat::ratio(1, 20))) == "1/2^20");
}

TEST_CASE("errors", "[syntax]") {
  CHECK(error_of("true $ false") == ErrorKind::Lexical);
  CHECK(error_of("true +") == ErrorKind::Syntax);
  CHECK(error_of("(true") == ErrorKind::Syntax);
  CHECK(error_of("x # true") == ErrorKind::Unbound);
  CHECK(error_of("true . false") == ErrorKind::Sort);
  CHECK(error_of("im + true") == ErrorKind::Sort);
  CHECK(error_of("0.1 . true") == ErrorKind::NonDyadic);
  CHECK(error_of("let A = A # true; A") == ErrorKind::Recursive);
  CHECK(error_of("let A = var(0); A") == ErrorKind::Open);
  try {
    parse_term("true +\n  # false");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 3);
  }
}

TEST_CASE("parser never crashes", "[syntax][property]") {
  const std::string alphabet = "tf\\x->+|#@*.() 01im;=let0.5/2^var";
  Rng rng(61);
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const auto n = lalc::testing::below(rng, 25);
    for (std::uint64_t k = 0; k < n; ++k) s += alphabet[lalc::testing::below(rng, alphabet.size())];
    try {
      parse_term(s);
    } catch (const ParseError&) {
    }
  }
  SUCCEED();
}

TEST_CASE("JSON schema", "[syntax]") {
  const Json j = to_json(parse_term("-0.5 . true"));
  CHECK(j["node"] == "ScalarMul");
  CHECK(j["children"][0]["value"]["sign"] == "neg");
  CHECK(j["children"][0]["value"]["mantissa"] == "1");
  CHECK(j["children"][0]["value"]["exponent"] == 1);
  CHECK(to_json(make_var(3))["value"] == 3);
  CHECK(to_json(make_basis(ScalarBasisSymbol::I))["value"] == "I");
}

TEST_CASE("printing round-trips", "[syntax][property]") {
  Rng rng(62);
  for (int i = 0; i < 500; ++i) {
    const int size = 1 + static_cast<int>(lalc::testing::below(rng, 25));
    round_trip(lalc::testing::gen_scalar(rng, size));
    round_trip(lalc::testing::gen_vector(rng, size));
    round_trip(make_lam(lalc::testing::gen_body(rng, size)));
    round_trip(lalc::testing::gen_body(rng, size));
  }
  for (const auto& c : lalc::testing::rule_cases()) {
    round_trip(parse_term(c.redex));
    round_trip(parse_term(c.result));
  }
  const auto r = trace_normalize(parse_term("(\\x -> \\y -> (x # y) |> (y # x)) * true * (false + im . true)"));
  for (const auto& s : *r.trace) round_trip(s.after);
}
