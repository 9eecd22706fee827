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

// One redex and its contractum per rule, in surface syntax.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lalc/engine.hpp"
#include "lalc/rules.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term_ops.hpp"

namespace lalc::testing {

struct RuleCase {
  const char* rule;
  const char* redex;
  const char* result;
};

inline const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = {
      {"vec.distrib", "isqrt2 . (true + false)", "isqrt2 . true + isqrt2 . false"},
      {"vec.factor", "isqrt2 . true + im . true", "(isqrt2 + im) . true"},
      {"vec.assoc", "isqrt2 . im . true", "(isqrt2 * im) . true"},
      {"vec.zero-right", "true + zerov", "true"},
      {"vec.one", "1 . true", "true"},
      {"vec.zero-scalar", "0 . true", "zerov"},
      {"vec.factor-one", "im . true + true", "(im + 1) . true"},
      {"vec.double", "true + true", "(1 + 1) . true"},
      {"vec.zero-vector", "im . zerov", "zerov"},

      {"tensor.sum-left", "(true + false) # true", "true # true + false # true"},
      {"tensor.scale-left", "(im . true) # false", "im . (true # false)"},
      {"tensor.sum-right", "true # (true + false)", "true # true + true # false"},
      {"tensor.scale-right", "true # im . false", "im . (true # false)"},
      {"tensor.zero-left", "zerov # true", "zerov"},
      {"tensor.zero-right", "true # zerov", "zerov"},

      {"fl.drop-trailing-zero", "0b110/2^2", "0b11/2^1"},
      {"fl.neg-zero", "-0b0", "0b0"},
      {"fl.zero-exponent", "0b0/2^3", "0b0"},
      {"fl.strip-leading-zero", "0b0011", "0b11"},
      {"fl.add", "0.5 + 0.25", "0.75"},
      {"fl.times-pos-pos", "0.5 * 3", "1.5"},
      {"fl.times-pos-neg", "0.5 * -3", "-1.5"},
      {"fl.times-neg-pos", "-0.5 * 3", "-1.5"},
      {"fl.times-neg-neg", "-0.5 * -3", "1.5"},

      {"smul.one", "1 * im", "im"},
      {"smul.r-r", "isqrt2 * isqrt2", "0.5 * 1"},
      {"smul.r-i", "isqrt2 * im", "im * isqrt2"},
      {"smul.r-ir", "isqrt2 * (im * isqrt2)", "0.5 * im"},
      {"smul.i-i", "im * im", "-1 * 1"},
      {"smul.i-ir", "im * (im * isqrt2)", "-1 * isqrt2"},
      {"smul.ir-ir", "(im * isqrt2) * (im * isqrt2)", "-0.5 * 1"},
      {"smul.distrib", "(isqrt2 + im) * 3", "isqrt2 * 3 + im * 3"},

      {"arith.zero-literal", "0b0", "0"},
      {"arith.one-literal", "0b1", "1"},
      {"arith.dyadic-plus-one", "0.5 + 1", "1.5"},
      {"arith.one-plus-one", "1 + 1", "2"},
      {"arith.plus-zero", "im + 0", "im"},
      {"arith.times-zero", "0 * im", "0"},
      {"arith.collect", "3 * im + 0.5 * im", "3.5 * im"},
      {"arith.collect-one", "3 * im + im", "4 * im"},
      {"arith.double", "im + im", "2 * im"},

      {"conj.sum", "conj(im + isqrt2)", "conj(im) + conj(isqrt2)"},
      {"conj.prod", "conj(im * 3)", "conj(im) * conj(3)"},
      {"conj.zero", "conj(0)", "0"},
      {"conj.one", "conj(1)", "1"},
      {"conj.dyadic", "conj(-0.5)", "-0.5"},
      {"conj.isqrt2", "conj(isqrt2)", "isqrt2"},
      {"conj.i", "conj(im)", "-1 * im"},
      {"conj.iisqrt2", "conj(im * isqrt2)", "-1 * (im * isqrt2)"},
      {"conj.conj", "conj(conj(im))", "im"},
      {"conj.bof", "conj(var(0) @ true) bof subst(true)", "conj((var(0) @ true) bof subst(true))"},

      {"match.sum-left", "(true + false) |> true", "true |> true + false |> true"},
      {"match.sum-right", "true |> (true + false)", "true |> true + true |> false"},
      {"match.scale-left", "im . true |> false", "conj(im) . (true |> false)"},
      {"match.scale-right", "true |> im . false", "im . (true |> false)"},
      {"match.zero-left", "zerov |> true", "zerov"},
      {"match.zero-right", "true |> zerov", "zerov"},
      {"app.sum-left", "(true + false) * true", "true * true + false * true"},
      {"app.scale-left", "(im . true) * false", "im . (true * false)"},
      {"app.sum-right", "true * (true + false)", "true * true + true * false"},
      {"app.scale-right", "true * im . false", "im . (true * false)"},
      {"app.zero-left", "zerov * true", "zerov"},
      {"app.zero-right", "true * zerov", "zerov"},
      {"dot.sum-left", "(true + false) @ true", "true @ true + false @ true"},
      {"dot.sum-right", "true @ (true + false)", "true @ true + true @ false"},
      {"dot.scale-left", "(im . true) @ false", "conj(im) * (true @ false)"},
      {"dot.scale-right", "true @ im . false", "im * (true @ false)"},
      {"dot.zero-left", "zerov @ true", "0"},
      {"dot.zero-right", "true @ zerov", "0"},

      {"match.apply", "(true |> false) * true", "(true @ true) . false"},
      {"dot.tensor", "(true # false) @ (false # true)", "(true @ false) * (false @ true)"},
      {"dot.match", "(true |> false) @ (false |> true)", "conj(true @ false) * (false @ true)"},
      {"dot.true-true", "true @ true", "1"},
      {"dot.true-false", "true @ false", "0"},
      {"dot.false-true", "false @ true", "0"},
      {"dot.false-false", "false @ false", "1"},

      {"orth.tensor-match", "(true # false) @ (true |> false)", "0"},
      {"orth.tensor-true", "(true # false) @ true", "0"},
      {"orth.tensor-false", "(true # false) @ false", "0"},
      {"orth.match-tensor", "(true |> false) @ (true # false)", "0"},
      {"orth.match-true", "(true |> false) @ true", "0"},
      {"orth.match-false", "(true |> false) @ false", "0"},
      {"orth.true-tensor", "true @ (true # false)", "0"},
      {"orth.true-match", "true @ (true |> false)", "0"},
      {"orth.false-tensor", "false @ (true # false)", "0"},
      {"orth.false-match", "false @ (true |> false)", "0"},

      {"lin.beta", "(\\x -> x # x) * true", "var(0) # var(0) of true"},
      {"lin.scale", "var(0) of im . true", "im . (var(0) of true)"},
      {"lin.sum", "var(0) of (true + false)", "(var(0) of true) + (var(0) of false)"},
      {"lin.true", "var(0) of true", "var(0) bof subst(true)"},
      {"lin.false", "var(0) of false", "var(0) bof subst(false)"},
      {"lin.zero", "var(0) of zerov", "var(0) bof subst(zerov)"},
      {"lin.tensor", "var(0) of (true # false)",
       "var(0) bof lift(shift) bof lift(shift) bof subst(var(0) # var(1)) of true of false"},
      {"lin.match", "var(0) of (true |> false)",
       "var(0) bof lift(shift) bof lift(shift) bof subst(var(0) |> var(1)) of true of false"},

      {"subst.sum", "(true + var(0)) bof shift", "(true bof shift) + (var(0) bof shift)"},
      {"subst.scale", "(im . var(0)) bof shift", "(im bof shift) . (var(0) bof shift)"},
      {"subst.dot", "(var(0) @ true) bof shift", "(var(0) bof shift) @ (true bof shift)"},
      {"subst.scalar-sum", "(im + (var(0) @ true)) bof shift", "(im bof shift) + ((var(0) @ true) bof shift)"},
      {"subst.scalar-prod", "(im * (var(0) @ true)) bof shift", "(im bof shift) * ((var(0) @ true) bof shift)"},
      {"subst.scalar", "im bof shift", "im"},
      {"subst.tensor", "(var(0) # true) bof shift", "(var(0) bof shift) # (true bof shift)"},
      {"subst.match", "(var(0) |> true) bof shift", "(var(0) bof shift) |> (true bof shift)"},
      {"subst.app", "(var(0) * true) bof shift", "(var(0) bof shift) * (true bof shift)"},
      {"subst.lam", "(\\x -> x # var(1)) bof shift", "\\x -> (var(0) # var(1)) bof lift(shift)"},
      {"subst.zero", "zerov bof shift", "zerov"},
      {"subst.false", "false bof shift", "false"},
      {"subst.true", "true bof shift", "true"},
      {"subst.var0-arg", "var(0) bof subst(true)", "true"},
      {"subst.varS-arg", "var(3) bof subst(true)", "var(2)"},
      {"subst.var0-lift", "var(0) bof lift(shift)", "var(0)"},
      {"subst.varS-lift", "var(2) bof lift(subst(true))", "var(1) bof subst(true) bof shift"},
      {"subst.shift", "var(2) bof shift", "var(3)"},
  };
  return cases;
}

/// Applies the named rule at the root of the redex; empty when it does not
/// fire or gives a different contractum.
inline std::optional<std::string> check_rule_case(const RuleCase& c, const RuleSet& rs = build_ruleset()) {
  const Rule* r = rs.find(c.rule);
  if (r == nullptr) return std::string("no rule named ") + c.rule;
  const Term redex = parse_term(c.redex);
  const Term expected = parse_term(c.result);
  const auto got = apply_at_root(*r, redex);
  if (!got) return std::string(c.rule) + " does not fire on " + c.redex;
  if (!ac_equal(*got, expected)) {
    return std::string(c.rule) + ": got " + pretty(*got) + ", expected " + c.result;
  }
  return std::nullopt;
}

}  // namespace lalc::testing
