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
 * Surface syntax: lexer, parser, conversion to de Bruijn terms, and the
 * pretty printer.
 *
 * Operators, loosest first:
 *
 *     of bof     substitution forms (left)
 *     +          sum
 *     |>         matching pair (left)
 *     #          tensor (left)
 *     @          scalar product (left)
 *     *          application, or product of scalars (left)
 *     .          scalar action, or product of scalars (right)
 *
 * A lambda `\x -> body` extends as far to the right as possible. Literals:
 * `0` and `1` are the scalar constants, other numbers are dyadic: `3`,
 * `-0.75`, `5/2^3`, or the raw form `-0b1010/2^2` which keeps its digits.
 * A bare `im * isqrt2` denotes the basis scalar i/sqrt2.
 */

#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lalc/dyadic.hpp"
#include "lalc/term.hpp"
#include "lalc/term_ops.hpp"

namespace lalc {

enum class ErrorKind : std::uint8_t { Lexical, Syntax, Unbound, Sort, NonDyadic, Recursive, Open };

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Lexical: return "lexical error";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Unbound: return "unbound identifier";
    case ErrorKind::Sort: return "sort error";
    case ErrorKind::NonDyadic: return "non-dyadic literal";
    case ErrorKind::Recursive: return "recursive definition";
    case ErrorKind::Open: return "open definition";
  }
  return "error";
}

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, SourcePos pos, const std::string& msg)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + lalc::to_string(kind) +
                           ": " + msg),
        kind_(kind),
        pos_(pos) {}

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Lexer

enum class Tok : std::uint8_t {
  Ident,
  Number,
  LParen,
  RParen,
  Plus,
  Match,
  Hash,
  At,
  Star,
  Dot,
  Lambda,
  Arrow,
  Equals,
  Semi,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
inline bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.pos = pos_;
      if (i_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = src_[i_];
      if (ident_start(c)) {
        std::size_t j = i_;
        while (j < src_.size() && ident_char(src_[j])) ++j;
        t.kind = Tok::Ident;
        t.text = std::string(src_.substr(i_, j - i_));
        advance(j - i_);
      } else if (digit(c) || (c == '-' && i_ + 1 < src_.size() && digit(src_[i_ + 1]))) {
        t.kind = Tok::Number;
        t.text = number();
      } else {
        t.kind = symbol(t.text);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src_[i_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
      ++i_;
    }
  }

  bool at(std::string_view s) const { return src_.substr(i_, s.size()) == s; }

  void skip_space() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        advance(1);
      } else if (at("//")) {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  std::string number() {
    const std::size_t start = i_;
    if (src_[i_] == '-') advance(1);
    if (at("0b")) {
      advance(2);
      if (i_ >= src_.size() || (src_[i_] != '0' && src_[i_] != '1')) {
        throw ParseError(ErrorKind::Lexical, pos_, "expected binary digits after 0b");
      }
      while (i_ < src_.size() && (src_[i_] == '0' || src_[i_] == '1')) advance(1);
    } else {
      while (i_ < src_.size() && digit(src_[i_])) advance(1);
      if (i_ + 1 < src_.size() && src_[i_] == '.' && digit(src_[i_ + 1])) {
        advance(1);
        while (i_ < src_.size() && digit(src_[i_])) advance(1);
      }
    }
    if (at("/2^")) {
      advance(3);
      if (i_ >= src_.size() || !digit(src_[i_])) {
        throw ParseError(ErrorKind::Lexical, pos_, "expected an exponent after /2^");
      }
      while (i_ < src_.size() && digit(src_[i_])) advance(1);
    }
    if (i_ < src_.size() && ident_char(src_[i_])) {
      throw ParseError(ErrorKind::Lexical, pos_, "malformed number");
    }
    return std::string(src_.substr(start, i_ - start));
  }

  Tok symbol(std::string& text) {
    static constexpr std::pair<std::string_view, Tok> kSymbols[] = {
        {"|>", Tok::Match}, {"->", Tok::Arrow}, {"(", Tok::LParen}, {")", Tok::RParen}, {"+", Tok::Plus},
        {"#", Tok::Hash},   {"@", Tok::At},     {"*", Tok::Star},   {".", Tok::Dot},    {"\\", Tok::Lambda},
        {"=", Tok::Equals}, {";", Tok::Semi},
    };
    for (const auto& [s, k] : kSymbols) {
      if (at(s)) {
        text = std::string(s);
        advance(s.size());
        return k;
      }
    }
    throw ParseError(ErrorKind::Lexical, pos_, std::string("unexpected character '") + src_[i_] + "'");
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

inline std::uint32_t parse_exponent(std::string_view digits, SourcePos pos) {
  std::uint64_t e = 0;
  for (char c : digits) {
    e = e * 10 + static_cast<std::uint64_t>(c - '0');
    if (e > 100000) throw ParseError(ErrorKind::Lexical, pos, "exponent too large");
  }
  return static_cast<std::uint32_t>(e);
}

/// Scalar term of a number token.
inline Term number_literal(const std::string& text, SourcePos pos) {
  if (text == "0") return make_scalar_zero();
  if (text == "1") return make_scalar_one();
  std::string_view s = text;
  Sign sign = Sign::Pos;
  if (s.front() == '-') {
    sign = Sign::Neg;
    s.remove_prefix(1);
  }
  std::uint32_t exp2 = 0;
  if (auto slash = s.find("/2^"); slash != std::string_view::npos) {
    exp2 = parse_exponent(s.substr(slash + 3), pos);
    s = s.substr(0, slash);
  }
  if (s.substr(0, 2) == "0b") {
    return make_dyadic(DyadicFloat{sign, BinaryNumeral::from_string(s.substr(2)), exp2});
  }
  std::string digits(s);
  std::uint32_t frac = 0;
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    frac = static_cast<std::uint32_t>(digits.size() - dot - 1);
    digits.erase(dot, 1);
    if (frac > 10000) throw ParseError(ErrorKind::Lexical, pos, "too many decimal digits");
  }
  // digits / 10^frac is dyadic iff 5^frac divides digits.
  BinaryNumeral m = BinaryNumeral::from_decimal(digits);
  for (std::uint32_t k = 0; k < frac; ++k) {
    auto [q, r] = m.divmod_small(5);
    if (r != 0) {
      throw ParseError(ErrorKind::NonDyadic, pos, "'" + text + "' is not a dyadic rational");
    }
    m = q;
  }
  return make_dyadic(DyadicFloat{sign, m, frac + exp2}.normalized());
}

}  // namespace detail

inline std::vector<Token> tokenize(std::string_view src) { return detail::Lexer(src).run(); }

// ---------------------------------------------------------------------------
// Surface terms

struct SurfaceTerm {
  enum class Op : std::uint8_t {
    Lam,       // \name -> kids[0]
    Name,      // identifier
    RawVar,    // var(index)
    Literal,   // constant leaf in `literal`
    Plus,
    Star,
    Scale,     // .
    Match,
    Tensor,
    At,
    Of,
    Bof,
    Conj,
    SubstArg,
    Lift,      // shift
    LiftUnder, // lift(s)
    ImIsqrt2,  // bare `im * isqrt2`
  };

  Op op = Op::Literal;
  std::string name;
  std::uint32_t index = 0;
  Term literal;
  std::vector<SurfaceTerm> kids;
  SourcePos pos;
};

struct LetDef {
  std::string name;
  SurfaceTerm body;
  SourcePos pos;
};

struct Program {
  std::vector<LetDef> defs;
  std::optional<SurfaceTerm> main;
};

namespace detail {

inline bool is_keyword(std::string_view s) {
  static constexpr std::string_view kKeywords[] = {"true",  "false", "zerov", "isqrt2", "im",   "conj", "var",
                                                   "of",    "bof",   "subst", "shift",  "lift", "let"};
  for (auto k : kKeywords) {
    if (k == s) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (peek_ident("let")) {
      LetDef d;
      d.pos = next().pos;
      d.name = ident("a definition name");
      expect(Tok::Equals, "'='");
      d.body = expr();
      expect(Tok::Semi, "';'");
      p.defs.push_back(std::move(d));
    }
    if (peek().kind != Tok::End) {
      p.main = expr();
    }
    if (peek().kind != Tok::End) {
      fail("unexpected '" + peek().text + "'");
    }
    return p;
  }

  SurfaceTerm single() {
    SurfaceTerm t = expr();
    if (peek().kind != Tok::End) {
      fail("unexpected '" + peek().text + "'");
    }
    return t;
  }

 private:
  using Op = SurfaceTerm::Op;

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool peek_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ErrorKind::Syntax, peek().pos, msg); }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) {
      fail(std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    next();
  }

  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) {
      fail(std::string("expected ") + what);
    }
    return next().text;
  }

  static SurfaceTerm node(Op op, SourcePos pos, std::vector<SurfaceTerm> kids) {
    SurfaceTerm t;
    t.op = op;
    t.pos = pos;
    t.kids = std::move(kids);
    return t;
  }

  SurfaceTerm expr() {
    if (peek().kind == Tok::Lambda) {
      const SourcePos pos = next().pos;
      SurfaceTerm t = node(Op::Lam, pos, {});
      t.name = ident("a parameter name");
      expect(Tok::Arrow, "'->'");
      t.kids.push_back(expr());
      return t;
    }
    SurfaceTerm left = sum();
    while (peek_ident("of") || peek_ident("bof")) {
      const Token op = next();
      if (op.text == "of") {
        left = node(Op::Of, op.pos, {std::move(left), operand([this] { return sum(); })});
      } else {
        left = node(Op::Bof, op.pos, {std::move(left), subst()});
      }
    }
    return left;
  }

  // Right operand that may also be a lambda reaching to the end.
  template <typename F>
  SurfaceTerm operand(F&& f) {
    if (peek().kind == Tok::Lambda) {
      return expr();
    }
    return f();
  }

  template <typename Sub>
  SurfaceTerm left_chain(Tok tok, Op op, Sub sub) {
    SurfaceTerm left = sub();
    while (peek().kind == tok) {
      const SourcePos pos = next().pos;
      left = node(op, pos, {std::move(left), operand(sub)});
    }
    return left;
  }

  SurfaceTerm sum() { return left_chain(Tok::Plus, Op::Plus, [this] { return match(); }); }
  SurfaceTerm match() { return left_chain(Tok::Match, Op::Match, [this] { return tensor(); }); }
  SurfaceTerm tensor() { return left_chain(Tok::Hash, Op::Tensor, [this] { return at(); }); }
  SurfaceTerm at() { return left_chain(Tok::At, Op::At, [this] { return star(); }); }

  SurfaceTerm star() {
    SurfaceTerm left = scale();
    while (peek().kind == Tok::Star) {
      const SourcePos pos = next().pos;
      SurfaceTerm right = operand([this] { return scale(); });
      if (is_bare(left, "im") && is_bare(right, "isqrt2")) {
        left = node(Op::ImIsqrt2, left.pos, {});
      } else {
        left = node(Op::Star, pos, {std::move(left), std::move(right)});
      }
    }
    return left;
  }

  static bool is_bare(const SurfaceTerm& t, std::string_view word) {
    return t.op == Op::Literal && !t.name.empty() && t.name == word;
  }

  SurfaceTerm scale() {
    SurfaceTerm left = primary();
    if (peek().kind == Tok::Dot) {
      const SourcePos pos = next().pos;
      return node(Op::Scale, pos, {std::move(left), operand([this] { return scale(); })});
    }
    return left;
  }

  SurfaceTerm literal(Term t, SourcePos pos, std::string word = {}) {
    SurfaceTerm s = node(Op::Literal, pos, {});
    s.literal = std::move(t);
    s.name = std::move(word);
    return s;
  }

  SurfaceTerm parenthesized() {
    expect(Tok::LParen, "'('");
    SurfaceTerm t = expr();
    expect(Tok::RParen, "')'");
    return t;
  }

  SurfaceTerm subst() {
    const Token& tk = peek();
    const SourcePos pos = tk.pos;
    if (peek_ident("subst")) {
      next();
      return node(Op::SubstArg, pos, {parenthesized()});
    }
    if (peek_ident("shift")) {
      next();
      return node(Op::Lift, pos, {});
    }
    if (peek_ident("lift")) {
      next();
      expect(Tok::LParen, "'('");
      SurfaceTerm inner = subst();
      expect(Tok::RParen, "')'");
      return node(Op::LiftUnder, pos, {std::move(inner)});
    }
    if (tk.kind == Tok::LParen) {
      next();
      SurfaceTerm inner = subst();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail("expected a substitution (subst(...), shift or lift(...))");
  }

  SurfaceTerm primary() {
    const Token tk = peek();
    switch (tk.kind) {
      case Tok::LParen: {
        SurfaceTerm t = parenthesized();
        // A parenthesized `im` or `isqrt2` is no longer bare.
        if (t.op == Op::Literal) t.name.clear();
        return t;
      }
      case Tok::Lambda: return expr();
      case Tok::Number:
        next();
        return literal(number_literal(tk.text, tk.pos), tk.pos);
      case Tok::Ident: break;
      default:
        fail(tk.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tk.text + "'");
    }
    next();
    const std::string& w = tk.text;
    if (w == "true") return literal(make_true(), tk.pos);
    if (w == "false") return literal(make_false(), tk.pos);
    if (w == "zerov") return literal(make_zero_vec(), tk.pos);
    if (w == "isqrt2") return literal(make_basis(ScalarBasisSymbol::InvSqrt2), tk.pos, w);
    if (w == "im") return literal(make_basis(ScalarBasisSymbol::I), tk.pos, w);
    if (w == "conj") return node(Op::Conj, tk.pos, {parenthesized()});
    if (w == "var") {
      expect(Tok::LParen, "'('");
      const Token n = peek();
      if (n.kind != Tok::Number || n.text.find_first_not_of("0123456789") != std::string::npos) {
        fail("expected a de Bruijn index");
      }
      next();
      expect(Tok::RParen, "')'");
      SurfaceTerm t = node(Op::RawVar, tk.pos, {});
      t.index = parse_exponent(n.text, n.pos);
      return t;
    }
    if (w == "subst" || w == "shift" || w == "lift") {
      --i_;
      return subst();
    }
    if (is_keyword(w)) {
      throw ParseError(ErrorKind::Syntax, tk.pos, "unexpected keyword '" + w + "'");
    }
    SurfaceTerm t = node(Op::Name, tk.pos, {});
    t.name = w;
    return t;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses `let NAME = term;` definitions followed by an optional term.
inline Program parse(std::string_view text) { return detail::Parser(tokenize(text)).program(); }

/// Parses a single term.
inline SurfaceTerm parse_surface(std::string_view text) { return detail::Parser(tokenize(text)).single(); }

// ---------------------------------------------------------------------------
// Conversion to de Bruijn terms

/// Closed definitions visible to a term, by name.
using Environment = std::map<std::string, Term, std::less<>>;

namespace detail {

struct Scope {
  enum class Kind : std::uint8_t { Named, Anonymous, Barrier };
  Kind kind;
  std::string name;
};

class Elaborator {
 public:
  explicit Elaborator(const Environment& env, std::string_view defining = {}) : env_(env), defining_(defining) {}

  Term run(const SurfaceTerm& s) {
    using Op = SurfaceTerm::Op;
    switch (s.op) {
      case Op::Literal: return s.literal;
      case Op::ImIsqrt2: return make_basis(ScalarBasisSymbol::IInvSqrt2);
      case Op::RawVar: return make_var(s.index);
      case Op::Name: return resolve(s);
      case Op::Lam: {
        scopes_.push_back({Scope::Kind::Named, s.name});
        Term body = run(s.kids[0]);
        scopes_.pop_back();
        require(body, Sort::Vector, s.kids[0].pos, "a lambda body");
        return make_lam(body);
      }
      case Op::Of: {
        scopes_.push_back({Scope::Kind::Anonymous, {}});
        Term f = run(s.kids[0]);
        scopes_.pop_back();
        Term a = run(s.kids[1]);
        require(f, Sort::Vector, s.kids[0].pos, "the body of 'of'");
        require(a, Sort::Vector, s.kids[1].pos, "the argument of 'of'");
        return make_of(f, a);
      }
      case Op::Bof: {
        scopes_.push_back({Scope::Kind::Barrier, {}});
        Term t = run(s.kids[0]);
        scopes_.pop_back();
        Term sub = run(s.kids[1]);
        if (t.sort() == Sort::Subst) sort_error(s.kids[0].pos, "a substitution cannot be substituted into");
        require(sub, Sort::Subst, s.kids[1].pos, "the right of 'bof'");
        return make_bof(t, sub);
      }
      case Op::SubstArg: {
        Term v = run(s.kids[0]);
        require(v, Sort::Vector, s.kids[0].pos, "subst(...)");
        return make_subst_arg(v);
      }
      case Op::Lift: return make_lift();
      case Op::LiftUnder: return make_lift_under(run(s.kids[0]));
      case Op::Conj: {
        Term x = run(s.kids[0]);
        require(x, Sort::Scalar, s.kids[0].pos, "conj(...)");
        return make_conj(x);
      }
      default: break;
    }
    Term a = run(s.kids[0]);
    Term b = run(s.kids[1]);
    const Sort sa = a.sort();
    const Sort sb = b.sort();
    if (sa == Sort::Subst || sb == Sort::Subst) sort_error(s.pos, "substitution used as an operand");
    switch (s.op) {
      case Op::Plus:
        if (sa != sb) sort_error(s.pos, "'+' between a scalar and a vector");
        return sa == Sort::Vector ? make_sum(a, b) : make_scalar_sum(a, b);
      case Op::Star:
        if (sa != sb) sort_error(s.pos, "'*' between a scalar and a vector");
        return sa == Sort::Vector ? make_app(a, b) : make_scalar_prod(a, b);
      case Op::Scale:
        if (sa != Sort::Scalar) sort_error(s.pos, "the left of '.' must be a scalar");
        return sb == Sort::Vector ? make_scalar_mul(a, b) : make_scalar_prod(a, b);
      case Op::Match:
      case Op::Tensor:
      case Op::At: {
        if (sa != Sort::Vector || sb != Sort::Vector) sort_error(s.pos, "operands must be vectors");
        if (s.op == Op::Match) return make_match(a, b);
        if (s.op == Op::Tensor) return make_tensor(a, b);
        return make_dot(a, b);
      }
      default: break;
    }
    throw std::logic_error("unhandled surface operator");
  }

 private:
  [[noreturn]] static void sort_error(SourcePos pos, const std::string& msg) {
    throw ParseError(ErrorKind::Sort, pos, msg);
  }

  static void require(const Term& t, Sort s, SourcePos pos, const char* where) {
    if (t.sort() != s) {
      static constexpr const char* kNames[] = {"vector", "scalar", "substitution"};
      sort_error(pos, std::string(where) + " must be a " + kNames[static_cast<int>(s)]);
    }
  }

  Term resolve(const SurfaceTerm& s) {
    std::uint32_t depth = 0;
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->kind == Scope::Kind::Barrier) {
        break;
      }
      if (it->kind == Scope::Kind::Named && it->name == s.name) {
        return make_var(depth);
      }
      ++depth;
    }
    if (auto it = env_.find(s.name); it != env_.end()) {
      return it->second;
    }
    if (!defining_.empty() && s.name == defining_) {
      throw ParseError(ErrorKind::Recursive, s.pos, "'" + s.name + "' refers to itself");
    }
    throw ParseError(ErrorKind::Unbound, s.pos, "'" + s.name + "' is not defined");
  }

  const Environment& env_;
  std::string_view defining_;
  std::vector<Scope> scopes_;
};

}  // namespace detail

/// Named lambdas become de Bruijn binders; names defined in `env` are
/// inlined.
inline Term to_debruijn(const SurfaceTerm& s, const Environment& env = {}) {
  return detail::Elaborator(env).run(s);
}

/// Elaborates a definition body; it must be closed and must not mention
/// its own name.
inline Term elaborate_definition(const LetDef& d, const Environment& env) {
  Environment visible = env;
  visible.erase(d.name);
  Term t = detail::Elaborator(visible, d.name).run(d.body);
  if (!is_closed(t)) {
    throw ParseError(ErrorKind::Open, d.pos, "definition of '" + d.name + "' has free variables");
  }
  return t;
}

inline Term parse_term(std::string_view text, const Environment& env = {}) {
  return to_debruijn(parse_surface(text), env);
}

// ---------------------------------------------------------------------------
// Pretty printer

namespace detail {

enum Prec : int {
  kPrecTop = 0,
  kPrecOf = 1,
  kPrecPlus = 2,
  kPrecMatch = 3,
  kPrecTensor = 4,
  kPrecAt = 5,
  kPrecStar = 6,
  kPrecScale = 7,
  kPrecAtom = 8,
};

inline std::string dyadic_text(const DyadicFloat& f) {
  const std::string sign = f.sign == Sign::Neg ? "-" : "";
  if (!f.is_canonical() || f.is_zero() || f.is_one()) {
    std::string s = sign + "0b" + f.mantissa.to_string();
    if (f.exponent > 0) s += "/2^" + std::to_string(f.exponent);
    return s;
  }
  if (f.exponent == 0) {
    return sign + f.mantissa.to_decimal();
  }
  if (f.exponent <= 16) {
    return f.to_decimal();
  }
  return sign + f.mantissa.to_decimal() + "/2^" + std::to_string(f.exponent);
}

class Printer {
 public:
  std::string run(const Term& t) {
    out_.clear();
    print(t, kPrecTop);
    return out_;
  }

 private:
  void open(bool paren) {
    if (paren) out_ += '(';
  }
  void close(bool paren) {
    if (paren) out_ += ')';
  }

  void binary(const Term& t, int prec, int ctx, const char* op, int lp, int rp) {
    const bool paren = prec < ctx;
    open(paren);
    print(t.child(0), lp);
    out_ += op;
    print(t.child(1), rp);
    close(paren);
  }

  void nary(const Term& t, int prec, int ctx, const char* op) {
    const bool paren = prec < ctx;
    open(paren);
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i > 0) out_ += op;
      print(t.child(i), prec + 1);
    }
    close(paren);
  }

  void var(std::uint32_t n) {
    std::uint32_t depth = 0;
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->kind == Scope::Kind::Barrier) break;
      if (depth == n) {
        if (it->kind == Scope::Kind::Named) {
          out_ += it->name;
          return;
        }
        break;
      }
      ++depth;
    }
    out_ += "var(" + std::to_string(n) + ")";
  }

  void print(const Term& t, int ctx) {
    switch (t.kind()) {
      case Kind::ZeroVec: out_ += "zerov"; return;
      case Kind::True: out_ += "true"; return;
      case Kind::False: out_ += "false"; return;
      case Kind::ScalarZero: out_ += "0"; return;
      case Kind::ScalarOne: out_ += "1"; return;
      case Kind::DyadicLit: out_ += dyadic_text(t.dyadic()); return;
      case Kind::BasisScalar:
        switch (t.basis()) {
          case ScalarBasisSymbol::InvSqrt2: out_ += "isqrt2"; return;
          case ScalarBasisSymbol::I: out_ += "im"; return;
          default: {
            const bool paren = kPrecStar < ctx;
            open(paren);
            out_ += "im * isqrt2";
            close(paren);
            return;
          }
        }
      case Kind::Var: var(t.var_index()); return;
      case Kind::Sum:
      case Kind::ScalarSum: nary(t, kPrecPlus, ctx, " + "); return;
      case Kind::ScalarProd: nary(t, kPrecStar, ctx, " * "); return;
      case Kind::ScalarMul: binary(t, kPrecScale, ctx, " . ", kPrecAtom, kPrecScale); return;
      case Kind::Match: binary(t, kPrecMatch, ctx, " |> ", kPrecMatch, kPrecMatch + 1); return;
      case Kind::Tensor: binary(t, kPrecTensor, ctx, " # ", kPrecTensor, kPrecTensor + 1); return;
      case Kind::Dot: binary(t, kPrecAt, ctx, " @ ", kPrecAt, kPrecAt + 1); return;
      case Kind::App: binary(t, kPrecStar, ctx, " * ", kPrecStar, kPrecStar + 1); return;
      case Kind::Conj:
        out_ += "conj(";
        print(t.child(0), kPrecTop);
        out_ += ")";
        return;
      case Kind::Lam: {
        const bool paren = ctx > kPrecTop;
        open(paren);
        const std::string name = "x" + std::to_string(named_depth());
        out_ += "\\" + name + " -> ";
        scopes_.push_back({Scope::Kind::Named, name});
        print(t.child(0), kPrecTop);
        scopes_.pop_back();
        close(paren);
        return;
      }
      case Kind::Of: {
        const bool paren = kPrecOf < ctx;
        open(paren);
        scopes_.push_back({Scope::Kind::Anonymous, {}});
        print(t.child(0), kPrecOf + (t.child(0).kind() == Kind::Lam ? 1 : 0));
        scopes_.pop_back();
        out_ += " of ";
        print(t.child(1), kPrecOf + 1);
        close(paren);
        return;
      }
      case Kind::Bof: {
        const bool paren = kPrecOf < ctx;
        open(paren);
        scopes_.push_back({Scope::Kind::Barrier, {}});
        print(t.child(0), kPrecOf);
        scopes_.pop_back();
        out_ += " bof ";
        print(t.child(1), kPrecAtom);
        close(paren);
        return;
      }
      case Kind::SubstArg:
        out_ += "subst(";
        print(t.child(0), kPrecTop);
        out_ += ")";
        return;
      case Kind::Lift: out_ += "shift"; return;
      case Kind::LiftUnder:
        out_ += "lift(";
        print(t.child(0), kPrecTop);
        out_ += ")";
        return;
      case Kind::Meta: out_ += "?" + std::to_string(t.meta_id()); return;
      case Kind::MetaIndex:
        out_ += "var(S^" + std::to_string(t.meta_offset()) + "(?" + std::to_string(t.meta_id()) + "))";
        return;
    }
  }

  std::size_t named_depth() const {
    std::size_t n = 0;
    for (const auto& s : scopes_) {
      if (s.kind == Scope::Kind::Named) ++n;
    }
    return n;
  }

  std::string out_;
  std::vector<Scope> scopes_;
};

}  // namespace detail

/// Renders a term in the surface syntax; binders get names `x0`, `x1`, ...
inline std::string pretty(const Term& t) { return detail::Printer{}.run(t); }

}  // namespace lalc
