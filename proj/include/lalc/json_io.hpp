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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lalc/dyadic.hpp"
#include "lalc/term.hpp"

namespace lalc {

using Json = nlohmann::json;

namespace detail {

inline Kind kind_from_string(std::string_view s) {
  for (int k = 0; k <= static_cast<int>(Kind::MetaIndex); ++k) {
    if (s == to_string(static_cast<Kind>(k))) return static_cast<Kind>(k);
  }
  throw std::invalid_argument("unknown node kind '" + std::string(s) + "'");
}

}  // namespace detail

/// `{"node": kind, "children": [...]}` plus `"value"` on leaves that carry
/// data.
inline Json to_json(const Term& t) {
  Json j;
  j["node"] = to_string(t.kind());
  Json kids = Json::array();
  for (const auto& c : t.children()) kids.push_back(to_json(c));
  j["children"] = std::move(kids);
  switch (t.kind()) {
    case Kind::Var: j["value"] = t.var_index(); break;
    case Kind::BasisScalar: j["value"] = to_string(t.basis()); break;
    case Kind::DyadicLit: {
      const DyadicFloat& f = t.dyadic();
      j["value"] = {{"sign", f.sign == Sign::Neg ? "neg" : "pos"},
                    {"mantissa", f.mantissa.to_string()},
                    {"exponent", f.exponent}};
      break;
    }
    case Kind::Meta:
    case Kind::MetaIndex: throw std::invalid_argument("to_json: pattern variables cannot be serialized");
    default: break;
  }
  return j;
}

inline Term from_json(const Json& j) {
  const Kind k = detail::kind_from_string(j.at("node").get<std::string>());
  std::vector<Term> kids;
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) kids.push_back(from_json(c));
  }
  auto need = [&](std::size_t n) {
    if (kids.size() != n) {
      throw std::invalid_argument(std::string("from_json: ") + to_string(k) + " expects " + std::to_string(n) +
                                  " children");
    }
  };
  switch (k) {
    case Kind::ScalarZero: need(0); return make_scalar_zero();
    case Kind::ScalarOne: need(0); return make_scalar_one();
    case Kind::False: need(0); return make_false();
    case Kind::True: need(0); return make_true();
    case Kind::ZeroVec: need(0); return make_zero_vec();
    case Kind::Lift: need(0); return make_lift();
    case Kind::Var: need(0); return make_var(j.at("value").get<std::uint32_t>());
    case Kind::BasisScalar: {
      need(0);
      const auto name = j.at("value").get<std::string>();
      for (auto b : {ScalarBasisSymbol::One, ScalarBasisSymbol::InvSqrt2, ScalarBasisSymbol::I,
                     ScalarBasisSymbol::IInvSqrt2}) {
        if (name == to_string(b)) return make_basis(b);
      }
      throw std::invalid_argument("from_json: unknown basis scalar '" + name + "'");
    }
    case Kind::DyadicLit: {
      need(0);
      const Json& v = j.at("value");
      DyadicFloat f;
      f.sign = v.at("sign").get<std::string>() == "neg" ? Sign::Neg : Sign::Pos;
      f.mantissa = BinaryNumeral::from_string(v.at("mantissa").get<std::string>());
      f.exponent = v.at("exponent").get<std::uint32_t>();
      return make_dyadic(f);
    }
    case Kind::Sum:
    case Kind::ScalarSum:
    case Kind::ScalarProd: return make_ac(k, std::move(kids));
    case Kind::Meta:
    case Kind::MetaIndex: throw std::invalid_argument("from_json: pattern variables are not terms");
    default: break;
  }
  if (kids.empty()) {
    throw std::invalid_argument(std::string("from_json: ") + to_string(k) + " needs children");
  }
  switch (k) {
    case Kind::Conj: need(1); return make_conj(kids[0]);
    case Kind::Lam: need(1); return make_lam(kids[0]);
    case Kind::SubstArg: need(1); return make_subst_arg(kids[0]);
    case Kind::LiftUnder: need(1); return make_lift_under(kids[0]);
    case Kind::ScalarMul: need(2); return make_scalar_mul(kids[0], kids[1]);
    case Kind::Tensor: need(2); return make_tensor(kids[0], kids[1]);
    case Kind::Match: need(2); return make_match(kids[0], kids[1]);
    case Kind::App: need(2); return make_app(kids[0], kids[1]);
    case Kind::Of: need(2); return make_of(kids[0], kids[1]);
    case Kind::Dot: need(2); return make_dot(kids[0], kids[1]);
    case Kind::Bof: need(2); return make_bof(kids[0], kids[1]);
    default: break;
  }
  throw std::invalid_argument(std::string("from_json: unsupported node ") + to_string(k));
}

}  // namespace lalc
