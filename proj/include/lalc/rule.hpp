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
 * Rewrite rules and matching modulo AC.
 *
 * A pattern is a term that may contain `Meta` and `MetaIndex` leaves. At the
 * root of a redex, an AC pattern with k operands matches any k operands of a
 * larger flattened subject; the unused operands are kept beside the
 * instantiated right-hand side. Below the root, the last operand of an AC
 * pattern absorbs the remainder when it is a pattern variable.
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lalc/term.hpp"

namespace lalc {

/// Rule families, one per block of the calculus, plus scalar arithmetic and
/// conjugation.
enum class RuleGroup : std::uint8_t {
  VectorSpace,
  Tensor,
  Dyadic,
  ScalarMult,
  MatchBilinear,
  MatchScalar,
  Orthogonality,
  Linearity,
  Substitution,
  ScalarArith,
  Conjugation,
};

inline constexpr RuleGroup kAllGroups[] = {
    RuleGroup::VectorSpace,   RuleGroup::Tensor,    RuleGroup::Dyadic,       RuleGroup::ScalarMult,
    RuleGroup::MatchBilinear, RuleGroup::MatchScalar, RuleGroup::Orthogonality, RuleGroup::Linearity,
    RuleGroup::Substitution,  RuleGroup::ScalarArith, RuleGroup::Conjugation,
};

inline const char* to_string(RuleGroup g) {
  switch (g) {
    case RuleGroup::VectorSpace: return "vector-space";
    case RuleGroup::Tensor: return "tensor";
    case RuleGroup::Dyadic: return "dyadic";
    case RuleGroup::ScalarMult: return "scalar-mult";
    case RuleGroup::MatchBilinear: return "match-bilinear";
    case RuleGroup::MatchScalar: return "match-scalar";
    case RuleGroup::Orthogonality: return "orthogonality";
    case RuleGroup::Linearity: return "linearity";
    case RuleGroup::Substitution: return "substitution";
    case RuleGroup::ScalarArith: return "scalar-arith";
    case RuleGroup::Conjugation: return "conjugation";
  }
  return "?";
}

inline constexpr std::size_t kMaxMeta = 8;

/// Pattern-variable assignment. `mask` marks which ids are bound, so
/// backtracking only has to restore the mask.
struct Bindings {
  std::array<Term, kMaxMeta> term;
  std::array<std::uint32_t, kMaxMeta> index{};
  std::uint32_t mask = 0;

  bool bound(std::uint32_t id) const { return (mask >> id) & 1U; }
  const Term& operator[](std::uint32_t id) const { return term[id]; }
};

struct Rule {
  std::string name;
  RuleGroup group{};
  Term lhs;
  Term rhs;
  std::function<bool(const Bindings&)> guard;
  std::function<Term(const Bindings&)> build;

  Term instantiate(const Bindings& b) const;
};

namespace detail {

using Cont = std::function<bool()>;

inline bool meta_accepts(MetaSort ms, const Term& s) {
  switch (ms) {
    case MetaSort::Vector: return s.sort() == Sort::Vector;
    case MetaSort::Scalar: return s.sort() == Sort::Scalar;
    case MetaSort::Dyadic: return s.kind() == Kind::DyadicLit;
    case MetaSort::Subst: return s.sort() == Sort::Subst;
  }
  return false;
}

inline bool bind_meta(std::uint32_t id, const Term& s, Bindings& b, const Cont& k) {
  if (b.bound(id)) {
    return b.term[id] == s && k();
  }
  const std::uint32_t saved = b.mask;
  b.term[id] = s;
  b.mask |= 1U << id;
  if (k()) {
    return true;
  }
  b.mask = saved;
  return false;
}

inline bool match(const Term& p, const Term& s, Bindings& b, const Cont& k);

// Matches pattern operands p[i..] against unused subject operands. With
// `rest` set, leftovers are returned to the caller; otherwise the last
// pattern variable absorbs them.
inline bool match_ac_list(Kind kind, std::span<const Term> p, std::size_t i, std::span<const Term> s,
                          std::vector<char>& used, std::size_t unused, Bindings& b, std::vector<Term>* rest,
                          const Cont& k) {
  if (i == p.size()) {
    if (rest != nullptr) {
      rest->clear();
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (!used[j]) rest->push_back(s[j]);
      }
      return k();
    }
    return unused == 0 && k();
  }
  const Term& pi = p[i];
  if (rest == nullptr && i + 1 == p.size() && unused > 1) {
    if (pi.kind() != Kind::Meta) {
      return false;
    }
    std::vector<Term> left;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!used[j]) left.push_back(s[j]);
    }
    Term whole = make_ac(kind, std::move(left));
    if (!meta_accepts(pi.meta_sort(), whole)) {
      return false;
    }
    return bind_meta(pi.meta_id(), whole, b, k);
  }
  const Term* previous = nullptr;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (used[j]) {
      continue;
    }
    if (previous != nullptr && *previous == s[j]) {
      continue;
    }
    previous = &s[j];
    used[j] = 1;
    const bool ok = match(pi, s[j], b, [&] {
      return match_ac_list(kind, p, i + 1, s, used, unused - 1, b, rest, k);
    });
    used[j] = 0;
    if (ok) {
      return true;
    }
  }
  return false;
}

inline bool match_children(const Term& p, const Term& s, std::size_t i, Bindings& b, const Cont& k) {
  if (i == p.arity()) {
    return k();
  }
  return match(p.child(i), s.child(i), b, [&] { return match_children(p, s, i + 1, b, k); });
}

inline bool match(const Term& p, const Term& s, Bindings& b, const Cont& k) {
  switch (p.kind()) {
    case Kind::Meta:
      return meta_accepts(p.meta_sort(), s) && bind_meta(p.meta_id(), s, b, k);
    case Kind::MetaIndex: {
      if (s.kind() != Kind::Var || s.var_index() < p.meta_offset()) {
        return false;
      }
      const std::uint32_t n = s.var_index() - p.meta_offset();
      const std::uint32_t id = p.meta_id();
      if (b.bound(id)) {
        return b.index[id] == n && k();
      }
      const std::uint32_t saved = b.mask;
      b.index[id] = n;
      b.mask |= 1U << id;
      if (k()) {
        return true;
      }
      b.mask = saved;
      return false;
    }
    default:
      break;
  }
  if (p.kind() != s.kind()) {
    return false;
  }
  switch (p.kind()) {
    case Kind::Var:
      return p.var_index() == s.var_index() && k();
    case Kind::BasisScalar:
      return p.basis() == s.basis() && k();
    case Kind::DyadicLit:
      return p.dyadic() == s.dyadic() && k();
    case Kind::Sum:
    case Kind::ScalarSum:
    case Kind::ScalarProd: {
      if (s.arity() < p.arity()) {
        return false;
      }
      std::vector<char> used(s.arity(), 0);
      return match_ac_list(p.kind(), p.children(), 0, s.children(), used, s.arity(), b, nullptr, k);
    }
    default:
      if (p.arity() != s.arity()) {
        return false;
      }
      return match_children(p, s, 0, b, k);
  }
}

inline Term instantiate(const Term& t, const Bindings& b) {
  switch (t.kind()) {
    case Kind::Meta:
      if (!b.bound(t.meta_id())) {
        throw std::logic_error("unbound pattern variable ?" + std::to_string(t.meta_id()));
      }
      return b.term[t.meta_id()];
    case Kind::MetaIndex:
      if (!b.bound(t.meta_id())) {
        throw std::logic_error("unbound index variable ?" + std::to_string(t.meta_id()));
      }
      return make_var(b.index[t.meta_id()] + t.meta_offset());
    default:
      break;
  }
  if (t.arity() == 0 || !t.has(kHasMeta)) {
    return t;
  }
  std::vector<Term> kids;
  kids.reserve(t.arity());
  for (const auto& c : t.children()) {
    kids.push_back(instantiate(c, b));
  }
  return with_children(t, std::move(kids));
}

}  // namespace detail

inline Term Rule::instantiate(const Bindings& b) const {
  if (build) {
    return build(b);
  }
  return detail::instantiate(rhs, b);
}

/// One way of rewriting a term at its root.
struct RootMatch {
  Bindings bindings;
  std::vector<Term> context;  // unused AC operands at the root
};

/// Matches `rule` at the root of `s`, honoring its guard. The first match in
/// the deterministic search order is returned.
inline std::optional<RootMatch> match_rule(const Rule& rule, const Term& s) {
  RootMatch m;
  const Term& p = rule.lhs;
  auto accept = [&] { return !rule.guard || rule.guard(m.bindings); };
  bool ok = false;
  if (is_ac(p.kind()) && p.kind() == s.kind()) {
    if (s.arity() < p.arity()) {
      return std::nullopt;
    }
    std::vector<char> used(s.arity(), 0);
    ok = detail::match_ac_list(p.kind(), p.children(), 0, s.children(), used, s.arity(), m.bindings, &m.context,
                               accept);
  } else {
    ok = detail::match(p, s, m.bindings, accept);
  }
  if (!ok) {
    return std::nullopt;
  }
  return m;
}

/// Rewrites `s` at its root with `rule`, or nothing when the rule does not
/// apply.
inline std::optional<Term> apply_at_root(const Rule& rule, const Term& s) {
  auto m = match_rule(rule, s);
  if (!m) {
    return std::nullopt;
  }
  Term r = rule.instantiate(m->bindings);
  if (m->context.empty()) {
    return r;
  }
  m->context.push_back(std::move(r));
  return make_ac(s.kind(), std::move(m->context));
}

namespace pattern {

// Conventional ids: t u v w for vectors, l m for scalars, s for a
// substitution, p for an index. `d` and `e` are dyadic literals.
inline Term t() { return make_meta(0, MetaSort::Vector); }
inline Term u() { return make_meta(1, MetaSort::Vector); }
inline Term v() { return make_meta(2, MetaSort::Vector); }
inline Term w() { return make_meta(3, MetaSort::Vector); }
inline Term l() { return make_meta(4, MetaSort::Scalar); }
inline Term m() { return make_meta(5, MetaSort::Scalar); }
inline Term s() { return make_meta(6, MetaSort::Subst); }
inline Term p(std::uint32_t offset = 0) { return make_meta_index(7, offset); }
inline Term d() { return make_meta(4, MetaSort::Dyadic); }
inline Term e() { return make_meta(5, MetaSort::Dyadic); }

inline constexpr std::uint32_t kT = 0, kU = 1, kV = 2, kW = 3, kL = 4, kM = 5, kS = 6, kP = 7;

inline Rule rule(std::string name, RuleGroup g, Term lhs, Term rhs) {
  Rule r;
  r.name = std::move(name);
  r.group = g;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline Rule guarded(Rule r, std::function<bool(const Bindings&)> guard) {
  r.guard = std::move(guard);
  return r;
}

inline Rule native(std::string name, RuleGroup g, Term lhs, std::function<bool(const Bindings&)> guard,
                   std::function<Term(const Bindings&)> build) {
  Rule r;
  r.name = std::move(name);
  r.group = g;
  r.lhs = std::move(lhs);
  r.guard = std::move(guard);
  r.build = std::move(build);
  return r;
}

}  // namespace pattern

/// Checks that every pattern variable of the template occurs in the pattern
/// and that both sides have the same sort.
inline bool well_formed(const Rule& r) {
  auto collect = [](const Term& t) {
    std::uint32_t mask = 0;
    std::function<void(const Term&)> go = [&](const Term& u) {
      if (u.kind() == Kind::Meta || u.kind() == Kind::MetaIndex) {
        mask |= 1U << u.meta_id();
      }
      for (const auto& c : u.children()) go(c);
    };
    go(t);
    return mask;
  };
  if (!r.rhs) {
    return static_cast<bool>(r.build);
  }
  const std::uint32_t l = collect(r.lhs);
  const std::uint32_t rr = collect(r.rhs);
  return (rr & ~l) == 0 && r.lhs.sort() == r.rhs.sort();
}

}  // namespace lalc
