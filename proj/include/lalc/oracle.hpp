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
 * Dense exact semantics of terms, independent of the rewrite rules.
 *
 * A value is a finite map from basis atoms to exact scalars. Atoms are
 * orthonormal, `#` pairs atoms bilinearly, `|>` pairs them antilinearly on
 * the left, and `(p |> q) * x` is `<p|x> q`. A lambda is applied by
 * substituting each atom of the argument and extending linearly.
 */

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lalc/exact_scalar.hpp"
#include "lalc/lambda_subst.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"

namespace lalc {

/// Finite map atom -> coefficient with no stored zeros. Lambda terms may
/// appear as keys in intermediate values.
class DenseValue {
 public:
  using Map = std::map<Term, ExactScalar, TermLess>;

  DenseValue() = default;

  static DenseValue atom(const Term& a) {
    DenseValue v;
    v.map_.emplace(a, ExactScalar::one());
    return v;
  }

  void add(const Term& a, const ExactScalar& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = map_.emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        map_.erase(it);
      }
    }
  }

  DenseValue& operator+=(const DenseValue& o) {
    for (const auto& [a, c] : o.map_) add(a, c);
    return *this;
  }

  DenseValue scaled(const ExactScalar& k) const {
    DenseValue r;
    if (k.is_zero()) return r;
    for (const auto& [a, c] : map_) r.add(a, k * c);
    return r;
  }

  const Map& entries() const { return map_; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  std::optional<ExactScalar> coefficient(const Term& a) const {
    auto it = map_.find(a);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const DenseValue& x, const DenseValue& y) {
    if (x.map_.size() != y.map_.size()) return false;
    auto i = x.map_.begin();
    auto j = y.map_.begin();
    for (; i != x.map_.end(); ++i, ++j) {
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [a, c] : map_) {
      if (!first) s += ", ";
      first = false;
      s += to_sexpr(a) + " -> " + c.to_string();
    }
    return s + "}";
  }

 private:
  Map map_;
};

inline bool equal_dense(const DenseValue& x, const DenseValue& y) { return x == y; }

/// The oracle's answer for a term: a value, or the reason it is outside the
/// supported fragment.
struct Denotation {
  std::optional<DenseValue> value;
  std::string unsupported;

  bool supported() const { return value.has_value(); }
};

namespace detail {

struct Unsupported {
  std::string reason;
};

class Denoter {
 public:
  DenseValue vec(const Term& t) {
    switch (t.kind()) {
      case Kind::ZeroVec: return {};
      case Kind::True:
      case Kind::False:
      case Kind::Lam: return DenseValue::atom(t);
      case Kind::Sum: {
        DenseValue r;
        for (const auto& c : t.children()) r += vec(c);
        return r;
      }
      case Kind::ScalarMul: return vec(t.child(1)).scaled(scalar(t.child(0)));
      case Kind::Tensor:
      case Kind::Match: return pair(t.kind(), vec(t.child(0)), vec(t.child(1)));
      case Kind::App: return apply(vec(t.child(0)), vec(t.child(1)));
      case Kind::Of: return apply(DenseValue::atom(make_lam(t.child(0))), vec(t.child(1)));
      case Kind::Var: throw Unsupported{"free variable"};
      case Kind::Bof: throw Unsupported{"explicit substitution"};
      default: throw Unsupported{std::string("unexpected ") + lalc::to_string(t.kind())};
    }
  }

  ExactScalar scalar(const Term& s) {
    switch (s.kind()) {
      case Kind::ScalarZero: return ExactScalar::zero();
      case Kind::ScalarOne: return ExactScalar::one();
      case Kind::DyadicLit: return ExactScalar::from_dyadic(s.dyadic().normalized());
      case Kind::BasisScalar: return ExactScalar::basis(s.basis());
      case Kind::ScalarSum: {
        ExactScalar r;
        for (const auto& c : s.children()) r += scalar(c);
        return r;
      }
      case Kind::ScalarProd: {
        ExactScalar r = ExactScalar::one();
        for (const auto& c : s.children()) r *= scalar(c);
        return r;
      }
      case Kind::Conj: return conjugate(scalar(s.child(0)));
      case Kind::Dot: return inner(vec(s.child(0)), vec(s.child(1)));
      case Kind::Bof: throw Unsupported{"explicit substitution"};
      default: throw Unsupported{std::string("unexpected scalar ") + lalc::to_string(s.kind())};
    }
  }

 private:
  static void require_atoms(const DenseValue& v, const char* what) {
    for (const auto& [a, c] : v.entries()) {
      if (!is_basis_atom(a)) throw Unsupported{std::string("function value in ") + what};
    }
  }

  static DenseValue pair(Kind k, const DenseValue& x, const DenseValue& y) {
    require_atoms(x, "a pair");
    require_atoms(y, "a pair");
    DenseValue r;
    for (const auto& [a, alpha] : x.entries()) {
      const ExactScalar left = k == Kind::Match ? conjugate(alpha) : alpha;
      for (const auto& [b, beta] : y.entries()) {
        r.add(k == Kind::Match ? make_match(a, b) : make_tensor(a, b), left * beta);
      }
    }
    return r;
  }

  static ExactScalar inner(const DenseValue& x, const DenseValue& y) {
    require_atoms(x, "a scalar product");
    require_atoms(y, "a scalar product");
    ExactScalar r;
    for (const auto& [a, alpha] : x.entries()) {
      if (auto beta = y.coefficient(a)) r += conjugate(alpha) * *beta;
    }
    return r;
  }

  DenseValue apply(const DenseValue& f, const DenseValue& x) {
    DenseValue r;
    for (const auto& [g, gamma] : f.entries()) {
      for (const auto& [a, alpha] : x.entries()) {
        if (!is_basis_atom(a)) throw Unsupported{"application to a function"};
        const ExactScalar k = gamma * alpha;
        if (g.kind() == Kind::Match) {
          if (g.child(0) == a) r.add(g.child(1), k);
        } else if (g.kind() == Kind::Lam) {
          r += vec(reference_substitute(g.child(0), a)).scaled(k);
        } else {
          throw Unsupported{"application of base vector"};
        }
      }
    }
    return r;
  }
};

}  // namespace detail

/// Denotation of a closed term; lambda-valued results are unsupported.
inline Denotation denote(const Term& t) {
  Denotation d;
  try {
    detail::Denoter den;
    if (t.sort() != Sort::Vector) {
      throw detail::Unsupported{"not a vector term"};
    }
    DenseValue v = den.vec(t);
    for (const auto& [a, c] : v.entries()) {
      if (!is_basis_atom(a)) throw detail::Unsupported{"function value"};
    }
    d.value = std::move(v);
  } catch (const detail::Unsupported& u) {
    d.unsupported = u.reason;
  }
  return d;
}

/// Exact value of a closed scalar term, including scalar products of
/// supported vectors.
inline std::optional<ExactScalar> denote_scalar(const Term& s) {
  try {
    return detail::Denoter{}.scalar(s);
  } catch (const detail::Unsupported&) {
    return std::nullopt;
  }
}

enum class Verdict : std::uint8_t { Pass, Fail, Skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  Verdict verdict = Verdict::Skipped;
  std::string detail;
};

/// Compares the denotations of a term and of its computed normal form.
inline CheckResult check(const Term& t, const Term& normal_form) {
  const Denotation a = denote(t);
  if (!a.supported()) {
    return {Verdict::Skipped, a.unsupported};
  }
  const Denotation b = denote(normal_form);
  if (!b.supported()) {
    return {Verdict::Skipped, "normal form: " + b.unsupported};
  }
  if (equal_dense(*a.value, *b.value)) {
    return {Verdict::Pass, a.value->to_string()};
  }
  return {Verdict::Fail, "expected " + a.value->to_string() + ", got " + b.value->to_string()};
}

}  // namespace lalc
