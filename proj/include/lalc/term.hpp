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
 * The unified term language: scalars, vectors, tensors, matching pairs,
 * applications, de Bruijn lambda terms and explicit substitutions.
 *
 * Terms are immutable and shared. The `make_*` constructors return terms in
 * AC-canonical form: operand lists of vector sum, scalar sum and scalar
 * product are flattened and sorted by the total term order. The `raw`
 * namespace builds terms exactly as written, which is what the parser and
 * some tests need before `ac_canonicalize`.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lalc/dyadic.hpp"
#include "lalc/exact_scalar.hpp"

namespace lalc {

/// Constructors. The enumerator order is the constructor precedence of the
/// total term order.
enum class Kind : std::uint8_t {
  ScalarZero,
  ScalarOne,
  DyadicLit,
  BasisScalar,
  ScalarSum,
  ScalarProd,
  Conj,
  Dot,
  False,
  True,
  ZeroVec,
  Var,
  ScalarMul,
  Tensor,
  Match,
  App,
  Lam,
  Sum,
  Of,
  Bof,
  SubstArg,
  Lift,
  LiftUnder,
  // Pattern-only constructors used by rewrite rules.
  Meta,
  MetaIndex,
};

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::ScalarZero: return "ScalarZero";
    case Kind::ScalarOne: return "ScalarOne";
    case Kind::DyadicLit: return "DyadicLit";
    case Kind::BasisScalar: return "BasisScalar";
    case Kind::ScalarSum: return "ScalarSum";
    case Kind::ScalarProd: return "ScalarProd";
    case Kind::Conj: return "Conj";
    case Kind::Dot: return "Dot";
    case Kind::False: return "False";
    case Kind::True: return "True";
    case Kind::ZeroVec: return "ZeroVec";
    case Kind::Var: return "Var";
    case Kind::ScalarMul: return "ScalarMul";
    case Kind::Tensor: return "Tensor";
    case Kind::Match: return "Match";
    case Kind::App: return "App";
    case Kind::Lam: return "Lam";
    case Kind::Sum: return "Sum";
    case Kind::Of: return "Of";
    case Kind::Bof: return "Bof";
    case Kind::SubstArg: return "SubstArg";
    case Kind::Lift: return "Lift";
    case Kind::LiftUnder: return "LiftUnder";
    case Kind::Meta: return "Meta";
    case Kind::MetaIndex: return "MetaIndex";
  }
  return "?";
}

enum class Sort : std::uint8_t { Vector, Scalar, Subst };

/// Sort of a pattern variable. `Dyadic` matches dyadic literals only.
enum class MetaSort : std::uint8_t { Vector, Scalar, Dyadic, Subst };

inline bool is_ac(Kind k) { return k == Kind::Sum || k == Kind::ScalarSum || k == Kind::ScalarProd; }

/// Raised when a constructor is given operands of the wrong sort.
class SortError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Term;

/// Summary bits cached on every node, covering the whole subterm.
enum TermFlag : std::uint8_t {
  kHasVar = 1U << 0U,    // Var or MetaIndex
  kHasSubst = 1U << 1U,  // Of, Bof or a substitution constructor
  kHasMeta = 1U << 2U,   // pattern variables
  kHasLam = 1U << 3U,
};

namespace detail {

struct NormalMark {
  mutable std::atomic<std::uint64_t> id{0};
  NormalMark() = default;
  NormalMark(NormalMark&&) noexcept {}
  NormalMark& operator=(NormalMark&&) noexcept { return *this; }
};

struct Node {
  Kind kind{};
  std::uint8_t aux = 0;     // basis symbol or meta sort
  std::uint32_t index = 0;  // de Bruijn index, meta id
  std::uint32_t offset = 0; // MetaIndex successor count
  std::optional<DyadicFloat> dyadic;
  std::vector<Term> children;
  std::size_t hash = 0;
  std::uint32_t size = 1;
  std::uint8_t flags = 0;
  // Id of the rule set under which this node is known to be a normal form.
  NormalMark normal_for;
};

}  // namespace detail

/// Shared immutable handle to a term node.
class Term {
 public:
  Term() = default;

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const { return node_->kind; }
  std::span<const Term> children() const { return node_->children; }
  const Term& child(std::size_t i) const { return node_->children[i]; }
  std::size_t arity() const { return node_->children.size(); }

  std::uint32_t var_index() const { return node_->index; }
  std::uint32_t meta_id() const { return node_->index; }
  std::uint32_t meta_offset() const { return node_->offset; }
  MetaSort meta_sort() const { return static_cast<MetaSort>(node_->aux); }
  ScalarBasisSymbol basis() const { return static_cast<ScalarBasisSymbol>(node_->aux); }
  const DyadicFloat& dyadic() const { return *node_->dyadic; }

  std::size_t hash() const { return node_->hash; }
  std::uint32_t size() const { return node_->size; }
  std::uint8_t flags() const { return node_->flags; }
  bool has(TermFlag f) const { return (node_->flags & f) != 0; }

  Sort sort() const {
    switch (node_->kind) {
      case Kind::ScalarZero:
      case Kind::ScalarOne:
      case Kind::DyadicLit:
      case Kind::BasisScalar:
      case Kind::ScalarSum:
      case Kind::ScalarProd:
      case Kind::Conj:
      case Kind::Dot:
        return Sort::Scalar;
      case Kind::SubstArg:
      case Kind::Lift:
      case Kind::LiftUnder:
        return Sort::Subst;
      case Kind::Bof:
        return child(0).sort();
      case Kind::Meta:
        switch (meta_sort()) {
          case MetaSort::Vector: return Sort::Vector;
          case MetaSort::Scalar:
          case MetaSort::Dyadic: return Sort::Scalar;
          case MetaSort::Subst: return Sort::Subst;
        }
        return Sort::Vector;
      default:
        return Sort::Vector;
    }
  }

  bool is(Kind k) const { return node_ && node_->kind == k; }
  bool same_node(const Term& o) const { return node_ == o.node_; }
  const detail::Node* node() const { return node_.get(); }

  bool known_normal(std::uint64_t ruleset_id) const {
    return node_->normal_for.id.load(std::memory_order_relaxed) == ruleset_id;
  }
  void mark_normal(std::uint64_t ruleset_id) const {
    node_->normal_for.id.store(ruleset_id, std::memory_order_relaxed);
  }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  friend Term make_node(detail::Node&& n);
  std::shared_ptr<const detail::Node> node_;
};

/// The total term order: constructor precedence, then payload, then arity,
/// then children lexicographically. Dyadic literals compare by
/// (sign, exponent, mantissa).
inline std::strong_ordering compare(const Term& a, const Term& b) {
  if (a.same_node(b)) {
    return std::strong_ordering::equal;
  }
  if (a.kind() != b.kind()) {
    return a.kind() <=> b.kind();
  }
  switch (a.kind()) {
    case Kind::Var:
      if (a.var_index() != b.var_index()) return a.var_index() <=> b.var_index();
      break;
    case Kind::BasisScalar:
      if (a.basis() != b.basis()) return a.basis() <=> b.basis();
      break;
    case Kind::DyadicLit: {
      auto c = compare_structural(a.dyadic(), b.dyadic());
      if (c != 0) return c;
      break;
    }
    case Kind::Meta:
      if (a.meta_id() != b.meta_id()) return a.meta_id() <=> b.meta_id();
      if (a.meta_sort() != b.meta_sort()) return a.meta_sort() <=> b.meta_sort();
      break;
    case Kind::MetaIndex:
      if (a.meta_id() != b.meta_id()) return a.meta_id() <=> b.meta_id();
      if (a.meta_offset() != b.meta_offset()) return a.meta_offset() <=> b.meta_offset();
      break;
    default:
      break;
  }
  if (a.arity() != b.arity()) {
    return a.arity() <=> b.arity();
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    auto c = compare(a.child(i), b.child(i));
    if (c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return compare(a, b) == 0;
}

inline std::strong_ordering operator<=>(const Term& a, const Term& b) { return compare(a, b); }

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

inline Term make_node(detail::Node&& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  h ^= (static_cast<std::size_t>(n.aux) << 8U) ^ (static_cast<std::size_t>(n.index) << 16U) ^
       (static_cast<std::size_t>(n.offset) << 40U);
  if (n.dyadic) {
    h ^= n.dyadic->hash() * 0x100000001b3ULL;
  }
  std::uint32_t size = 1;
  std::uint8_t flags = 0;
  switch (n.kind) {
    case Kind::Var: flags |= kHasVar; break;
    case Kind::MetaIndex: flags |= kHasVar | kHasMeta; break;
    case Kind::Meta: flags |= kHasMeta; break;
    case Kind::Lam: flags |= kHasLam; break;
    case Kind::Of:
    case Kind::Bof:
    case Kind::SubstArg:
    case Kind::Lift:
    case Kind::LiftUnder: flags |= kHasSubst; break;
    default: break;
  }
  for (const auto& c : n.children) {
    h = (h ^ c.hash()) * 0x100000001b3ULL + 0x9e3779b9;
    size += c.size();
    flags |= c.flags();
  }
  n.hash = h;
  n.size = size;
  n.flags = flags;
  Term t;
  t.node_ = std::make_shared<const detail::Node>(std::move(n));
  return t;
}

namespace detail {

inline Term leaf(Kind k, std::uint8_t aux = 0, std::uint32_t index = 0) {
  Node n;
  n.kind = k;
  n.aux = aux;
  n.index = index;
  return make_node(std::move(n));
}

inline Term node(Kind k, std::vector<Term> children) {
  Node n;
  n.kind = k;
  n.children = std::move(children);
  return make_node(std::move(n));
}

inline void require_sort(const Term& t, Sort s, const char* what) {
  if (!t) {
    throw SortError(std::string(what) + ": null operand");
  }
  if (t.sort() != s) {
    static constexpr const char* names[] = {"vector", "scalar", "substitution"};
    throw SortError(std::string(what) + ": expected a " + names[static_cast<int>(s)] + " operand, got " +
                    to_string(t.kind()));
  }
}

inline Sort ac_sort(Kind k) { return k == Kind::Sum ? Sort::Vector : Sort::Scalar; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Raw constructors: no flattening or sorting.

namespace raw {

inline Term ac(Kind k, std::vector<Term> operands) {
  if (!is_ac(k)) {
    throw std::invalid_argument("raw::ac expects an AC constructor");
  }
  if (operands.size() < 2) {
    throw std::invalid_argument(std::string(to_string(k)) + " needs at least two operands");
  }
  for (const auto& o : operands) {
    detail::require_sort(o, detail::ac_sort(k), to_string(k));
  }
  return detail::node(k, std::move(operands));
}

inline Term sum(std::vector<Term> operands) { return ac(Kind::Sum, std::move(operands)); }
inline Term scalar_sum(std::vector<Term> operands) { return ac(Kind::ScalarSum, std::move(operands)); }
inline Term scalar_prod(std::vector<Term> operands) { return ac(Kind::ScalarProd, std::move(operands)); }

}  // namespace raw

// ---------------------------------------------------------------------------
// Canonical constructors.

inline Term make_zero_vec() {
  static const Term t = detail::leaf(Kind::ZeroVec);
  return t;
}
inline Term make_true() {
  static const Term t = detail::leaf(Kind::True);
  return t;
}
inline Term make_false() {
  static const Term t = detail::leaf(Kind::False);
  return t;
}
inline Term make_scalar_zero() {
  static const Term t = detail::leaf(Kind::ScalarZero);
  return t;
}
inline Term make_scalar_one() {
  static const Term t = detail::leaf(Kind::ScalarOne);
  return t;
}
inline Term make_lift() {
  static const Term t = detail::leaf(Kind::Lift);
  return t;
}

/// `One` is the unit scalar itself; the other symbols are basis leaves.
inline Term make_basis(ScalarBasisSymbol s) {
  if (s == ScalarBasisSymbol::One) {
    return make_scalar_one();
  }
  return detail::leaf(Kind::BasisScalar, static_cast<std::uint8_t>(s));
}

inline Term make_dyadic(DyadicFloat f) {
  detail::Node n;
  n.kind = Kind::DyadicLit;
  n.dyadic = std::move(f);
  return make_node(std::move(n));
}

inline Term make_var(std::uint32_t index) { return detail::leaf(Kind::Var, 0, index); }

/// Flattens nested same-kind operands and sorts by the term order. An empty
/// list gives the unit of the operation and a singleton its only element.
inline Term make_ac(Kind k, std::vector<Term> operands) {
  if (!is_ac(k)) {
    throw std::invalid_argument("make_ac expects an AC constructor");
  }
  std::vector<Term> flat;
  flat.reserve(operands.size());
  for (auto& o : operands) {
    detail::require_sort(o, detail::ac_sort(k), to_string(k));
    if (o.kind() == k) {
      for (const auto& c : o.children()) {
        flat.push_back(c);
      }
    } else {
      flat.push_back(std::move(o));
    }
  }
  if (flat.empty()) {
    switch (k) {
      case Kind::Sum: return make_zero_vec();
      case Kind::ScalarSum: return make_scalar_zero();
      default: return make_scalar_one();
    }
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  std::sort(flat.begin(), flat.end(), TermLess{});
  return detail::node(k, std::move(flat));
}

inline Term make_sum(std::vector<Term> operands) { return make_ac(Kind::Sum, std::move(operands)); }
inline Term make_sum(Term a, Term b) { return make_sum(std::vector<Term>{std::move(a), std::move(b)}); }
inline Term make_scalar_sum(std::vector<Term> operands) { return make_ac(Kind::ScalarSum, std::move(operands)); }
inline Term make_scalar_sum(Term a, Term b) { return make_scalar_sum(std::vector<Term>{std::move(a), std::move(b)}); }
inline Term make_scalar_prod(std::vector<Term> operands) { return make_ac(Kind::ScalarProd, std::move(operands)); }
inline Term make_scalar_prod(Term a, Term b) {
  return make_scalar_prod(std::vector<Term>{std::move(a), std::move(b)});
}

inline Term make_scalar_mul(Term scalar, Term vec) {
  detail::require_sort(scalar, Sort::Scalar, "scalar action (left)");
  detail::require_sort(vec, Sort::Vector, "scalar action (right)");
  return detail::node(Kind::ScalarMul, {std::move(scalar), std::move(vec)});
}

namespace detail {
inline Term vector_binary(Kind k, Term l, Term r) {
  require_sort(l, Sort::Vector, to_string(k));
  require_sort(r, Sort::Vector, to_string(k));
  return node(k, {std::move(l), std::move(r)});
}
}  // namespace detail

inline Term make_tensor(Term l, Term r) { return detail::vector_binary(Kind::Tensor, std::move(l), std::move(r)); }
inline Term make_match(Term l, Term r) { return detail::vector_binary(Kind::Match, std::move(l), std::move(r)); }
inline Term make_app(Term l, Term r) { return detail::vector_binary(Kind::App, std::move(l), std::move(r)); }
inline Term make_of(Term fun, Term arg) { return detail::vector_binary(Kind::Of, std::move(fun), std::move(arg)); }

inline Term make_dot(Term l, Term r) {
  detail::require_sort(l, Sort::Vector, "Dot");
  detail::require_sort(r, Sort::Vector, "Dot");
  return detail::node(Kind::Dot, {std::move(l), std::move(r)});
}

inline Term make_lam(Term body) {
  detail::require_sort(body, Sort::Vector, "Lam");
  return detail::node(Kind::Lam, {std::move(body)});
}

inline Term make_conj(Term s) {
  detail::require_sort(s, Sort::Scalar, "Conj");
  return detail::node(Kind::Conj, {std::move(s)});
}

/// `t bof s`; `t` may be of either sort and the result has the sort of `t`.
inline Term make_bof(Term t, Term s) {
  if (!t || t.sort() == Sort::Subst) {
    throw SortError("Bof: left operand must be a vector or a scalar");
  }
  detail::require_sort(s, Sort::Subst, "Bof (right)");
  return detail::node(Kind::Bof, {std::move(t), std::move(s)});
}

inline Term make_subst_arg(Term v) {
  detail::require_sort(v, Sort::Vector, "SubstArg");
  return detail::node(Kind::SubstArg, {std::move(v)});
}

inline Term make_lift_under(Term s) {
  detail::require_sort(s, Sort::Subst, "LiftUnder");
  return detail::node(Kind::LiftUnder, {std::move(s)});
}

inline Term make_meta(std::uint32_t id, MetaSort sort) {
  return detail::leaf(Kind::Meta, static_cast<std::uint8_t>(sort), id);
}

/// Pattern `var(S^offset(p))` binding `p` to a natural number.
inline Term make_meta_index(std::uint32_t id, std::uint32_t offset) {
  detail::Node n;
  n.kind = Kind::MetaIndex;
  n.index = id;
  n.offset = offset;
  return make_node(std::move(n));
}

/// Rebuilds `t` with new children through the canonical constructors.
inline Term with_children(const Term& t, std::vector<Term> children) {
  switch (t.kind()) {
    case Kind::Sum:
    case Kind::ScalarSum:
    case Kind::ScalarProd:
      return make_ac(t.kind(), std::move(children));
    case Kind::ScalarMul: return make_scalar_mul(std::move(children[0]), std::move(children[1]));
    case Kind::Tensor: return make_tensor(std::move(children[0]), std::move(children[1]));
    case Kind::Match: return make_match(std::move(children[0]), std::move(children[1]));
    case Kind::App: return make_app(std::move(children[0]), std::move(children[1]));
    case Kind::Of: return make_of(std::move(children[0]), std::move(children[1]));
    case Kind::Dot: return make_dot(std::move(children[0]), std::move(children[1]));
    case Kind::Lam: return make_lam(std::move(children[0]));
    case Kind::Conj: return make_conj(std::move(children[0]));
    case Kind::Bof: return make_bof(std::move(children[0]), std::move(children[1]));
    case Kind::SubstArg: return make_subst_arg(std::move(children[0]));
    case Kind::LiftUnder: return make_lift_under(std::move(children[0]));
    default:
      return t;
  }
}

/// Compact constructor-style rendering, used in diagnostics and test output.
inline void write_sexpr(std::ostream& os, const Term& t) {
  if (!t) {
    os << "<null>";
    return;
  }
  switch (t.kind()) {
    case Kind::Var: os << "Var(" << t.var_index() << ")"; return;
    case Kind::BasisScalar: os << to_string(t.basis()); return;
    case Kind::DyadicLit: os << t.dyadic().to_string(); return;
    case Kind::Meta: os << "?" << t.meta_id(); return;
    case Kind::MetaIndex: os << "Var(S^" << t.meta_offset() << "(?" << t.meta_id() << "))"; return;
    default: break;
  }
  os << to_string(t.kind());
  if (t.arity() > 0) {
    os << "(";
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i > 0) os << ", ";
      write_sexpr(os, t.child(i));
    }
    os << ")";
  }
}

inline std::string to_sexpr(const Term& t) {
  std::ostringstream os;
  write_sexpr(os, t);
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) {
  write_sexpr(os, t);
  return os;
}

}  // namespace lalc
