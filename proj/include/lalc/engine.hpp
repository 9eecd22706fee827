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
 * Reduction strategies and normalization.
 *
 * A strategy fixes the order in which redex positions are visited. Subterms
 * found to be normal are tagged with the rule set id, so unchanged parts of
 * a term are not searched again on later steps.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lalc/rule.hpp"
#include "lalc/rules.hpp"
#include "lalc/term.hpp"

namespace lalc {

struct Strategy {
  enum class Order : std::uint8_t { Innermost, Outermost, Random };

  Order order = Order::Innermost;
  std::uint64_t seed = 0;

  static Strategy innermost() { return {Order::Innermost, 0}; }
  static Strategy outermost() { return {Order::Outermost, 0}; }
  static Strategy random(std::uint64_t seed) { return {Order::Random, seed}; }

  /// `innermost`, `outermost` or `random:<seed>`.
  static Strategy parse(std::string_view text) {
    if (text == "innermost") return innermost();
    if (text == "outermost") return outermost();
    constexpr std::string_view prefix = "random:";
    if (text.substr(0, prefix.size()) == prefix) {
      const std::string digits(text.substr(prefix.size()));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad random seed in strategy '" + std::string(text) + "'");
      }
      return random(std::stoull(digits));
    }
    throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
  }

  std::string to_string() const {
    switch (order) {
      case Order::Innermost: return "innermost";
      case Order::Outermost: return "outermost";
      case Order::Random: return "random:" + std::to_string(seed);
    }
    return "?";
  }
};

using Path = std::vector<std::uint32_t>;

struct RewriteStep {
  std::string rule;
  Path path;
  Term before;
  Term after;
};

enum class Outcome : std::uint8_t { NormalForm, BudgetExceeded };

struct NormalResult {
  Outcome outcome = Outcome::NormalForm;
  Term term;
  std::uint64_t steps = 0;
  std::optional<std::vector<RewriteStep>> trace;

  bool normal() const { return outcome == Outcome::NormalForm; }
};

inline constexpr std::uint64_t kDefaultBudget = 1000000;

inline std::string path_string(const Path& p) {
  if (p.empty()) {
    return "root";
  }
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

inline const Term& subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (auto i : p) {
    if (i >= cur->arity()) {
      throw std::out_of_range("path leaves the term");
    }
    cur = &cur->child(i);
  }
  return *cur;
}

/// Replaces the subterm at `p`, rebuilding ancestors canonically.
inline Term replace_at(const Term& t, const Path& p, const Term& repl, std::size_t depth = 0) {
  if (depth == p.size()) {
    return repl;
  }
  std::vector<Term> kids(t.children().begin(), t.children().end());
  kids.at(p[depth]) = replace_at(t.child(p[depth]), p, repl, depth + 1);
  return with_children(t, std::move(kids));
}

/// Applies `rule` at position `p`, or nothing when it does not match there.
inline std::optional<Term> apply_rule_at(const Term& t, const Rule& rule, const Path& p) {
  auto r = apply_at_root(rule, subterm_at(t, p));
  if (!r) {
    return std::nullopt;
  }
  return replace_at(t, p, *r);
}

/// Redex search for one strategy over one rule set.
class Rewriter {
 public:
  Rewriter(const RuleSet& rs, Strategy st) : rs_(rs), st_(st) {}

  /// Performs one step; nothing when `t` is normal.
  std::optional<RewriteStep> step(const Term& t) {
    Path path;
    Found found;
    ++searches_;
    if (!find(t, path, found)) {
      return std::nullopt;
    }
    RewriteStep s;
    s.rule = found.rule->name;
    s.path = std::move(path);
    s.before = t;
    s.after = replace_at(t, s.path, found.result);
    return s;
  }

  NormalResult normalize(const Term& t, std::uint64_t budget, bool trace) {
    if (budget < 1) {
      throw std::invalid_argument("step budget must be at least 1");
    }
    NormalResult res;
    if (trace) {
      res.trace.emplace();
    }
    Term cur = t;
    while (true) {
      Path path;
      Found found;
      ++searches_;
      if (!find(cur, path, found)) {
        res.outcome = Outcome::NormalForm;
        break;
      }
      if (res.steps == budget) {
        res.outcome = Outcome::BudgetExceeded;
        break;
      }
      Term next = replace_at(cur, path, found.result);
      if (trace) {
        res.trace->push_back(RewriteStep{found.rule->name, std::move(path), cur, next});
      }
      cur = std::move(next);
      ++res.steps;
    }
    res.term = cur;
    return res;
  }

 private:
  struct Found {
    const Rule* rule = nullptr;
    Term result;
  };

  bool try_root(const Term& t, Found& f) const {
    for (const Rule* r : rs_.candidates(t.kind())) {
      if (auto out = apply_at_root(*r, t)) {
        f.rule = r;
        f.result = std::move(*out);
        return true;
      }
    }
    return false;
  }

  bool try_child(const Term& t, std::uint32_t i, Path& path, Found& f) {
    path.push_back(i);
    if (find(t.child(i), path, f)) {
      return true;
    }
    path.pop_back();
    return false;
  }

  bool find(const Term& t, Path& path, Found& f) {
    if (t.known_normal(rs_.id())) {
      return false;
    }
    const auto n = static_cast<std::uint32_t>(t.arity());
    switch (st_.order) {
      case Strategy::Order::Innermost:
        for (std::uint32_t i = 0; i < n; ++i) {
          if (try_child(t, i, path, f)) return true;
        }
        if (try_root(t, f)) return true;
        break;
      case Strategy::Order::Outermost:
        if (try_root(t, f)) return true;
        for (std::uint32_t i = 0; i < n; ++i) {
          if (try_child(t, i, path, f)) return true;
        }
        break;
      case Strategy::Order::Random: {
        // Position n stands for the root.
        std::vector<std::uint32_t> order(n + 1);
        std::iota(order.begin(), order.end(), 0U);
        const std::uint64_t seed = node_seed(path);
        for (std::uint32_t i = n; i > 0; --i) {
          std::swap(order[i], order[mix(seed ^ i) % (i + 1)]);
        }
        for (auto i : order) {
          if (i == n ? try_root(t, f) : try_child(t, i, path, f)) return true;
        }
        break;
      }
    }
    t.mark_normal(rs_.id());
    return false;
  }

  // Seed of the visit order at a node: a function of the strategy seed, the
  // search count and the node's position.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
  }

  std::uint64_t node_seed(const Path& path) const {
    std::uint64_t h = mix(st_.seed ^ mix(searches_));
    for (auto i : path) h = mix(h ^ i);
    return mix(h ^ path.size());
  }

  const RuleSet& rs_;
  Strategy st_;
  std::uint64_t searches_ = 0;
};

/// First redex under the strategy's visit order, rewritten.
inline std::optional<RewriteStep> rewrite_once(const Term& t, const RuleSet& rs = build_ruleset(),
                                               Strategy st = Strategy::innermost()) {
  return Rewriter(rs, st).step(t);
}

inline NormalResult normalize(const Term& t, const RuleSet& rs = build_ruleset(),
                              Strategy st = Strategy::innermost(), std::uint64_t budget = kDefaultBudget) {
  return Rewriter(rs, st).normalize(t, budget, false);
}

inline NormalResult trace_normalize(const Term& t, const RuleSet& rs = build_ruleset(),
                                    Strategy st = Strategy::innermost(), std::uint64_t budget = kDefaultBudget) {
  return Rewriter(rs, st).normalize(t, budget, true);
}

/// True when no rule of `rs` matches anywhere in `t`.
inline bool is_normal(const Term& t, const RuleSet& rs = build_ruleset()) {
  return !rewrite_once(t, rs).has_value();
}

/// Re-applies the named rule at the recorded position and compares.
inline bool replay(const RewriteStep& s, const RuleSet& rs = build_ruleset()) {
  const Rule* r = rs.find(s.rule);
  if (r == nullptr) {
    return false;
  }
  auto out = apply_rule_at(s.before, *r, s.path);
  return out && *out == s.after;
}

}  // namespace lalc
