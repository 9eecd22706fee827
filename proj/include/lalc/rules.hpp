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

#include <array>
#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lalc/lambda_subst.hpp"
#include "lalc/rule.hpp"
#include "lalc/term.hpp"

namespace lalc {

inline std::vector<Rule> vector_space_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::VectorSpace;
  const Term one = make_scalar_one();
  return {
      rule("vec.distrib", G, make_scalar_mul(l(), raw::sum({u(), v()})),
           make_sum(make_scalar_mul(l(), u()), make_scalar_mul(l(), v()))),
      rule("vec.factor", G, raw::sum({make_scalar_mul(l(), u()), make_scalar_mul(m(), u())}),
           make_scalar_mul(make_scalar_sum(l(), m()), u())),
      rule("vec.assoc", G, make_scalar_mul(l(), make_scalar_mul(m(), u())),
           make_scalar_mul(make_scalar_prod(l(), m()), u())),
      rule("vec.zero-right", G, raw::sum({u(), make_zero_vec()}), u()),
      rule("vec.one", G, make_scalar_mul(one, u()), u()),
      rule("vec.zero-scalar", G, make_scalar_mul(make_scalar_zero(), u()), make_zero_vec()),
      rule("vec.factor-one", G, raw::sum({make_scalar_mul(l(), u()), u()}),
           make_scalar_mul(make_scalar_sum(l(), one), u())),
      rule("vec.double", G, raw::sum({u(), u()}), make_scalar_mul(make_scalar_sum(one, one), u())),
      rule("vec.zero-vector", G, make_scalar_mul(l(), make_zero_vec()), make_zero_vec()),
  };
}

inline std::vector<Rule> tensor_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Tensor;
  return {
      rule("tensor.sum-left", G, make_tensor(raw::sum({u(), v()}), w()),
           make_sum(make_tensor(u(), w()), make_tensor(v(), w()))),
      rule("tensor.scale-left", G, make_tensor(make_scalar_mul(l(), u()), v()),
           make_scalar_mul(l(), make_tensor(u(), v()))),
      rule("tensor.sum-right", G, make_tensor(u(), raw::sum({v(), w()})),
           make_sum(make_tensor(u(), v()), make_tensor(u(), w()))),
      rule("tensor.scale-right", G, make_tensor(u(), make_scalar_mul(l(), v())),
           make_scalar_mul(l(), make_tensor(u(), v()))),
      rule("tensor.zero-left", G, make_tensor(make_zero_vec(), u()), make_zero_vec()),
      rule("tensor.zero-right", G, make_tensor(u(), make_zero_vec()), make_zero_vec()),
  };
}

/// Canonicalization and arithmetic of dyadic literals. Addition is not
/// spelled out as individual rules; it is computed natively.
inline std::vector<Rule> dyadic_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Dyadic;
  auto times = [](const char* name, Sign a, Sign b) {
    return native(
        name, G, raw::scalar_prod({d(), e()}),
        [a, b](const Bindings& x) { return x[kL].dyadic().sign == a && x[kM].dyadic().sign == b; },
        [](const Bindings& x) { return make_dyadic(dyadic_mul(x[kL].dyadic(), x[kM].dyadic())); });
  };
  return {
      native(
          "fl.drop-trailing-zero", G, d(),
          [](const Bindings& x) {
            const auto& f = x[kL].dyadic();
            return f.exponent > 0 && f.mantissa.has_trailing_zero();
          },
          [](const Bindings& x) {
            DyadicFloat f = x[kL].dyadic();
            f.mantissa.drop_low_bit();
            --f.exponent;
            return make_dyadic(f);
          }),
      native(
          "fl.neg-zero", G, d(),
          [](const Bindings& x) {
            const auto& f = x[kL].dyadic();
            return f.sign == Sign::Neg && f.mantissa.is_zero();
          },
          [](const Bindings& x) {
            DyadicFloat f = x[kL].dyadic();
            f.sign = Sign::Pos;
            return make_dyadic(f);
          }),
      native(
          "fl.zero-exponent", G, d(),
          [](const Bindings& x) {
            const auto& f = x[kL].dyadic();
            return f.exponent > 0 && f.mantissa.is_zero();
          },
          [](const Bindings& x) {
            DyadicFloat f = x[kL].dyadic();
            f.exponent = 0;
            return make_dyadic(f);
          }),
      native(
          "fl.strip-leading-zero", G, d(), [](const Bindings& x) { return x[kL].dyadic().mantissa.has_leading_zero(); },
          [](const Bindings& x) {
            DyadicFloat f = x[kL].dyadic();
            f.mantissa.strip_leading_zeros();
            return make_dyadic(f);
          }),
      native(
          "fl.add", G, raw::scalar_sum({d(), e()}), nullptr,
          [](const Bindings& x) { return make_dyadic(dyadic_add(x[kL].dyadic(), x[kM].dyadic())); }),
      times("fl.times-pos-pos", Sign::Pos, Sign::Pos),
      times("fl.times-pos-neg", Sign::Pos, Sign::Neg),
      times("fl.times-neg-pos", Sign::Neg, Sign::Pos),
      times("fl.times-neg-neg", Sign::Neg, Sign::Neg),
  };
}

/// Products of the scalar basis {1, 1/sqrt2, i, i/sqrt2}, completed by
/// commutativity, and distribution over sums.
inline std::vector<Rule> scalar_mult_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::ScalarMult;
  const Term one = make_scalar_one();
  const Term r = make_basis(ScalarBasisSymbol::InvSqrt2);
  const Term i = make_basis(ScalarBasisSymbol::I);
  const Term ir = make_basis(ScalarBasisSymbol::IInvSqrt2);
  const Term half = make_dyadic(DyadicFloat::ratio(1, 1));
  const Term minus_one = make_dyadic(DyadicFloat::integer(-1));
  const Term minus_half = make_dyadic(DyadicFloat::ratio(-1, 1));
  const Term a = make_meta(0, MetaSort::Scalar);
  const Term b = make_meta(1, MetaSort::Scalar);
  const Term c = make_meta(2, MetaSort::Scalar);
  auto prod = [](Term x, Term y) { return raw::scalar_prod({std::move(x), std::move(y)}); };
  return {
      rule("smul.one", G, prod(one, a), a),
      rule("smul.r-r", G, prod(r, r), make_scalar_prod(half, one)),
      rule("smul.r-i", G, prod(r, i), ir),
      rule("smul.r-ir", G, prod(r, ir), make_scalar_prod(half, i)),
      rule("smul.i-i", G, prod(i, i), make_scalar_prod(minus_one, one)),
      rule("smul.i-ir", G, prod(i, ir), make_scalar_prod(minus_one, r)),
      rule("smul.ir-ir", G, prod(ir, ir), make_scalar_prod(minus_half, one)),
      rule("smul.distrib", G, prod(raw::scalar_sum({a, b}), c),
           make_scalar_sum(make_scalar_prod(a, c), make_scalar_prod(b, c))),
  };
}

/// Literal clean-up and collection of like monomials, driving closed scalars
/// to sums of distinct `d * b` monomials.
inline std::vector<Rule> scalar_arith_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::ScalarArith;
  const Term one = make_scalar_one();
  const Term zero = make_scalar_zero();
  const Term a = make_meta(0, MetaSort::Scalar);
  auto is_basis = [](const Bindings& x) { return x[0].kind() == Kind::BasisScalar; };
  return {
      native(
          "arith.zero-literal", G, d(),
          [](const Bindings& x) { return x[kL].dyadic().is_canonical() && x[kL].dyadic().is_zero(); },
          [](const Bindings&) { return make_scalar_zero(); }),
      native(
          "arith.one-literal", G, d(),
          [](const Bindings& x) { return x[kL].dyadic().is_canonical() && x[kL].dyadic().is_one(); },
          [](const Bindings&) { return make_scalar_one(); }),
      native(
          "arith.dyadic-plus-one", G, raw::scalar_sum({d(), one}), nullptr,
          [](const Bindings& x) { return make_dyadic(dyadic_add(x[kL].dyadic(), DyadicFloat::one())); }),
      rule("arith.one-plus-one", G, raw::scalar_sum({one, one}), make_dyadic(DyadicFloat::integer(2))),
      rule("arith.plus-zero", G, raw::scalar_sum({a, zero}), a),
      rule("arith.times-zero", G, raw::scalar_prod({zero, a}), zero),
      native(
          "arith.collect", G, raw::scalar_sum({raw::scalar_prod({d(), a}), raw::scalar_prod({e(), a})}), is_basis,
          [](const Bindings& x) {
            return make_scalar_prod(make_dyadic(dyadic_add(x[kL].dyadic(), x[kM].dyadic())), x[0]);
          }),
      native(
          "arith.collect-one", G, raw::scalar_sum({raw::scalar_prod({d(), a}), a}), is_basis,
          [](const Bindings& x) {
            return make_scalar_prod(make_dyadic(dyadic_add(x[kL].dyadic(), DyadicFloat::one())), x[0]);
          }),
      native("arith.double", G, raw::scalar_sum({a, a}), is_basis,
             [](const Bindings& x) { return make_scalar_prod(make_dyadic(DyadicFloat::integer(2)), x[0]); }),
  };
}

inline std::vector<Rule> conjugation_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Conjugation;
  const Term minus_one = make_dyadic(DyadicFloat::integer(-1));
  auto conj_of = [](Term x) { return make_conj(std::move(x)); };
  return {
      rule("conj.sum", G, conj_of(raw::scalar_sum({l(), m()})), make_scalar_sum(conj_of(l()), conj_of(m()))),
      rule("conj.prod", G, conj_of(raw::scalar_prod({l(), m()})), make_scalar_prod(conj_of(l()), conj_of(m()))),
      rule("conj.zero", G, conj_of(make_scalar_zero()), make_scalar_zero()),
      rule("conj.one", G, conj_of(make_scalar_one()), make_scalar_one()),
      rule("conj.dyadic", G, conj_of(d()), d()),
      rule("conj.isqrt2", G, conj_of(make_basis(ScalarBasisSymbol::InvSqrt2)),
           make_basis(ScalarBasisSymbol::InvSqrt2)),
      rule("conj.i", G, conj_of(make_basis(ScalarBasisSymbol::I)),
           make_scalar_prod(minus_one, make_basis(ScalarBasisSymbol::I))),
      rule("conj.iisqrt2", G, conj_of(make_basis(ScalarBasisSymbol::IInvSqrt2)),
           make_scalar_prod(minus_one, make_basis(ScalarBasisSymbol::IInvSqrt2))),
      rule("conj.conj", G, conj_of(conj_of(l())), l()),
      rule("conj.bof", G, make_bof(conj_of(l()), s()), conj_of(make_bof(l(), s()))),
  };
}

/// Bilinearity of matching, application and scalar product; the scalar
/// product is antilinear on the left and its results are scalars.
inline std::vector<Rule> match_bilinear_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::MatchBilinear;
  const Term z = make_zero_vec();
  return {
      rule("match.sum-left", G, make_match(raw::sum({t(), u()}), v()),
           make_sum(make_match(t(), v()), make_match(u(), v()))),
      rule("match.sum-right", G, make_match(t(), raw::sum({v(), w()})),
           make_sum(make_match(t(), v()), make_match(t(), w()))),
      rule("match.scale-left", G, make_match(make_scalar_mul(l(), u()), v()),
           make_scalar_mul(make_conj(l()), make_match(u(), v()))),
      rule("match.scale-right", G, make_match(u(), make_scalar_mul(m(), v())),
           make_scalar_mul(m(), make_match(u(), v()))),
      rule("match.zero-left", G, make_match(z, u()), z),
      rule("match.zero-right", G, make_match(u(), z), z),

      rule("app.sum-left", G, make_app(raw::sum({u(), v()}), w()), make_sum(make_app(u(), w()), make_app(v(), w()))),
      rule("app.scale-left", G, make_app(make_scalar_mul(l(), u()), v()),
           make_scalar_mul(l(), make_app(u(), v()))),
      rule("app.sum-right", G, make_app(u(), raw::sum({v(), w()})), make_sum(make_app(u(), v()), make_app(u(), w()))),
      rule("app.scale-right", G, make_app(u(), make_scalar_mul(l(), v())),
           make_scalar_mul(l(), make_app(u(), v()))),
      rule("app.zero-left", G, make_app(z, u()), z),
      rule("app.zero-right", G, make_app(u(), z), z),

      rule("dot.sum-left", G, make_dot(raw::sum({t(), u()}), v()),
           make_scalar_sum(make_dot(t(), v()), make_dot(u(), v()))),
      rule("dot.sum-right", G, make_dot(t(), raw::sum({v(), w()})),
           make_scalar_sum(make_dot(t(), v()), make_dot(t(), w()))),
      rule("dot.scale-left", G, make_dot(make_scalar_mul(l(), u()), v()),
           make_scalar_prod(make_conj(l()), make_dot(u(), v()))),
      rule("dot.scale-right", G, make_dot(u(), make_scalar_mul(m(), v())),
           make_scalar_prod(m(), make_dot(u(), v()))),
      rule("dot.zero-left", G, make_dot(z, u()), make_scalar_zero()),
      rule("dot.zero-right", G, make_dot(u(), z), make_scalar_zero()),
  };
}

inline std::vector<Rule> match_scalar_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::MatchScalar;
  const Term tt = make_true();
  const Term ff = make_false();
  return {
      rule("match.apply", G, make_app(make_match(t(), u()), v()), make_scalar_mul(make_dot(t(), v()), u())),
      rule("dot.tensor", G, make_dot(make_tensor(t(), u()), make_tensor(v(), w())),
           make_scalar_prod(make_dot(t(), v()), make_dot(u(), w()))),
      rule("dot.match", G, make_dot(make_match(t(), u()), make_match(v(), w())),
           make_scalar_prod(make_conj(make_dot(t(), v())), make_dot(u(), w()))),
      rule("dot.true-true", G, make_dot(tt, tt), make_scalar_one()),
      rule("dot.true-false", G, make_dot(tt, ff), make_scalar_zero()),
      rule("dot.false-true", G, make_dot(ff, tt), make_scalar_zero()),
      rule("dot.false-false", G, make_dot(ff, ff), make_scalar_one()),
  };
}

inline std::vector<Rule> orthogonality_rules() {
  using namespace pattern;
  constexpr auto G = RuleGroup::Orthogonality;
  const Term zero = make_scalar_zero();
  const Term tt = make_true();
  const Term ff = make_false();
  const Term tensor = make_tensor(t(), u());
  const Term match = make_match(t(), u());
  const Term tensor_r = make_tensor(v(), w());
  const Term match_r = make_match(v(), w());
  return {
      rule("orth.tensor-match", G, make_dot(tensor, match_r), zero),
      rule("orth.tensor-true", G, make_dot(tensor, tt), zero),
      rule("orth.tensor-false", G, make_dot(tensor, ff), zero),
      rule("orth.match-tensor", G, make_dot(match, tensor_r), zero),
      rule("orth.match-true", G, make_dot(match, tt), zero),
      rule("orth.match-false", G, make_dot(match, ff), zero),
      rule("orth.true-tensor", G, make_dot(tt, tensor_r), zero),
      rule("orth.true-match", G, make_dot(tt, match_r), zero),
      rule("orth.false-tensor", G, make_dot(ff, tensor_r), zero),
      rule("orth.false-match", G, make_dot(ff, match_r), zero),
  };
}

inline std::vector<Rule> group_rules(RuleGroup g) {
  switch (g) {
    case RuleGroup::VectorSpace: return vector_space_rules();
    case RuleGroup::Tensor: return tensor_rules();
    case RuleGroup::Dyadic: return dyadic_rules();
    case RuleGroup::ScalarMult: return scalar_mult_rules();
    case RuleGroup::MatchBilinear: return match_bilinear_rules();
    case RuleGroup::MatchScalar: return match_scalar_rules();
    case RuleGroup::Orthogonality: return orthogonality_rules();
    case RuleGroup::Linearity: return linearize_rules();
    case RuleGroup::Substitution: return subst_rules();
    case RuleGroup::ScalarArith: return scalar_arith_rules();
    case RuleGroup::Conjugation: return conjugation_rules();
  }
  return {};
}

/// Order in which groups are tried at a node: scalar arithmetic first, then
/// the vector structure, then the lambda layer.
inline constexpr RuleGroup kTrialOrder[] = {
    RuleGroup::Dyadic,        RuleGroup::ScalarMult,  RuleGroup::ScalarArith,   RuleGroup::Conjugation,
    RuleGroup::VectorSpace,   RuleGroup::Tensor,      RuleGroup::MatchBilinear, RuleGroup::MatchScalar,
    RuleGroup::Orthogonality, RuleGroup::Linearity,   RuleGroup::Substitution,
};

/// An ordered collection of rules with a per-constructor index. Each rule
/// set has a process-unique id used to cache normal-form checks on terms.
class RuleSet {
 public:
  explicit RuleSet(std::span<const RuleGroup> groups = kTrialOrder) {
    static std::atomic<std::uint64_t> next_id{1};
    id_ = next_id.fetch_add(1);
    for (auto g : groups) {
      for (auto& r : group_rules(g)) {
        rules_.push_back(std::move(r));
      }
    }
    index();
  }

  explicit RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
    static std::atomic<std::uint64_t> next_id{1ULL << 40U};
    id_ = next_id.fetch_add(1);
    index();
  }

  RuleSet(const RuleSet&) = delete;
  RuleSet& operator=(const RuleSet&) = delete;

  std::uint64_t id() const { return id_; }
  std::span<const Rule> rules() const { return rules_; }

  std::vector<const Rule*> group(RuleGroup g) const {
    std::vector<const Rule*> out;
    for (const auto& r : rules_) {
      if (r.group == g) out.push_back(&r);
    }
    return out;
  }

  /// Rules whose left-hand side can match a term with this root.
  std::span<const Rule* const> candidates(Kind root) const { return by_root_[static_cast<std::size_t>(root)]; }

  const Rule* find(std::string_view name) const {
    for (const auto& r : rules_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

 private:
  void index() {
    for (const auto& r : rules_) {
      Kind k = r.lhs.kind();
      if (k == Kind::Meta && r.lhs.meta_sort() == MetaSort::Dyadic) {
        k = Kind::DyadicLit;
      }
      by_root_[static_cast<std::size_t>(k)].push_back(&r);
    }
  }

  std::uint64_t id_ = 0;
  std::vector<Rule> rules_;
  std::array<std::vector<const Rule*>, static_cast<std::size_t>(Kind::MetaIndex) + 1> by_root_;
};

/// The complete rule set in trial order.
inline const RuleSet& build_ruleset() {
  static const RuleSet rs;
  return rs;
}

}  // namespace lalc
