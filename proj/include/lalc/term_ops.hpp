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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lalc/term.hpp"

namespace lalc {

/// Rebuilds every AC node of `t` flattened and sorted. Idempotent.
inline Term ac_canonicalize(const Term& t) {
  if (t.arity() == 0) {
    return t;
  }
  std::vector<Term> kids;
  kids.reserve(t.arity());
  bool changed = false;
  for (const auto& c : t.children()) {
    kids.push_back(ac_canonicalize(c));
    changed = changed || !kids.back().same_node(c);
  }
  if (is_ac(t.kind())) {
    return make_ac(t.kind(), std::move(kids));
  }
  if (!changed) {
    return t;
  }
  return with_children(t, std::move(kids));
}

inline bool ac_equal(const Term& t, const Term& u) { return ac_canonicalize(t) == ac_canonicalize(u); }

/// B ::= true | false | B # B | B |> B
inline bool is_basis_atom(const Term& t) {
  switch (t.kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Tensor:
    case Kind::Match:
      return is_basis_atom(t.child(0)) && is_basis_atom(t.child(1));
    default:
      return false;
  }
}

namespace detail {

using IndexSet = std::set<std::uint32_t>;

inline void collect_free(const Term& t, IndexSet& out);

// Free indices of `var(i) bof s`.
inline void free_through(const Term& s, std::uint32_t i, IndexSet& out) {
  switch (s.kind()) {
    case Kind::SubstArg:
      if (i == 0) {
        collect_free(s.child(0), out);
      } else {
        out.insert(i - 1);
      }
      return;
    case Kind::Lift:
      out.insert(i + 1);
      return;
    case Kind::LiftUnder:
      if (i == 0) {
        out.insert(0);
      } else {
        IndexSet inner;
        free_through(s.child(0), i - 1, inner);
        for (auto j : inner) {
          out.insert(j + 1);
        }
      }
      return;
    case Kind::Meta:
      out.insert(i);
      return;
    default:
      return;
  }
}

inline void collect_free(const Term& t, IndexSet& out) {
  if (!t.has(kHasVar)) {
    return;
  }
  switch (t.kind()) {
    case Kind::Var:
      out.insert(t.var_index());
      return;
    case Kind::MetaIndex:
      out.insert(t.meta_offset());
      return;
    case Kind::Lam: {
      IndexSet inner;
      collect_free(t.child(0), inner);
      for (auto i : inner) {
        if (i > 0) out.insert(i - 1);
      }
      return;
    }
    case Kind::Of: {
      IndexSet inner;
      collect_free(t.child(0), inner);
      for (auto i : inner) {
        if (i > 0) out.insert(i - 1);
      }
      collect_free(t.child(1), out);
      return;
    }
    case Kind::Bof: {
      IndexSet inner;
      collect_free(t.child(0), inner);
      for (auto i : inner) {
        free_through(t.child(1), i, out);
      }
      return;
    }
    default:
      break;
  }
  for (const auto& c : t.children()) {
    collect_free(c, out);
  }
}

}  // namespace detail

/// Largest de Bruijn index escaping all binders, or nothing when `t` is
/// closed. `Of(f, a)` binds index 0 in `f`; `t bof s` maps the free indices
/// of `t` through `s`.
inline std::optional<std::uint32_t> max_free_index(const Term& t) {
  detail::IndexSet s;
  detail::collect_free(t, s);
  if (s.empty()) {
    return std::nullopt;
  }
  return *s.rbegin();
}

inline bool is_closed(const Term& t) { return !max_free_index(t).has_value(); }

/// Closed first-order vector term over {zerov, true, false, +, ., #} with
/// closed scalars free of substitution and matching constructs.
inline bool is_first_order(const Term& t) {
  switch (t.kind()) {
    case Kind::ZeroVec:
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Sum:
    case Kind::Tensor:
      return std::all_of(t.children().begin(), t.children().end(), is_first_order);
    case Kind::ScalarMul:
      return !t.child(0).has(kHasVar) && !t.child(0).has(kHasSubst) && is_first_order(t.child(1));
    default:
      return false;
  }
}

}  // namespace lalc
