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
 * An evaluation session: a rule set, a strategy, a step budget and the
 * `let` definitions seen so far. A definition is reduced to normal form
 * when it is bound, so later terms use its value.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lalc/engine.hpp"
#include "lalc/rules.hpp"
#include "lalc/syntax.hpp"
#include "lalc/term.hpp"

namespace lalc {

/// Raised when a definition does not reach a normal form within budget.
class DefinitionBudgetExceeded : public std::runtime_error {
 public:
  explicit DefinitionBudgetExceeded(const std::string& name)
      : std::runtime_error("definition of '" + name + "' exceeded the step budget") {}
};

inline std::string format_step(std::size_t k, const RewriteStep& s) {
  return "step " + std::to_string(k) + ": " + s.rule + " @ " + path_string(s.path) + " => " + pretty(s.after);
}

class Session {
 public:
  explicit Session(Strategy st = Strategy::innermost(), std::uint64_t budget = kDefaultBudget,
                   const RuleSet& rs = build_ruleset())
      : rs_(rs), strategy_(st), budget_(budget) {
    if (budget < 1) throw std::invalid_argument("step budget must be at least 1");
  }

  const Environment& environment() const { return env_; }
  const RuleSet& rules() const { return rs_; }
  Strategy strategy() const { return strategy_; }
  std::uint64_t budget() const { return budget_; }

  void set_budget(std::uint64_t budget) {
    if (budget < 1) throw std::invalid_argument("step budget must be at least 1");
    budget_ = budget;
  }

  /// Binds `name` to the normal form of the closed term `t`.
  void define(const std::string& name, const Term& t) {
    NormalResult r = normalize(t);
    if (!r.normal()) throw DefinitionBudgetExceeded(name);
    env_[name] = r.term;
  }

  /// Adds definitions whose values are already normal forms.
  void import(const Environment& env) {
    for (const auto& [name, value] : env) env_[name] = value;
  }

  /// Processes the definitions of `text` and returns its final term, if any.
  std::optional<Term> load(std::string_view text) {
    Program p = parse(text);
    for (const auto& d : p.defs) {
      define(d.name, elaborate_definition(d, env_));
    }
    if (!p.main) return std::nullopt;
    return to_debruijn(*p.main, env_);
  }

  NormalResult normalize(const Term& t, bool trace = false) const {
    return Rewriter(rs_, strategy_).normalize(t, budget_, trace);
  }

 private:
  const RuleSet& rs_;
  Strategy strategy_;
  std::uint64_t budget_;
  Environment env_;
};

}  // namespace lalc
