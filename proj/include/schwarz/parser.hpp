// Copyright 2026 The schwarzmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHWARZ_PARSER_HPP
#define SCHWARZ_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "schwarz/error.hpp"
#include "schwarz/mpoly.hpp"
#include "schwarz/number_field.hpp"
#include "schwarz/ratfunc.hpp"
#include "schwarz/unipoly.hpp"

namespace schwarz {

/// What identifiers mean while parsing. With variables present, exponents
/// must be nonnegative and division is only by constants.
struct ParseContext {
  RingPtr ring;                   // polynomial variables (may be empty)
  FieldPtr field;                 // optional number field; its generator is a constant
  bool allow_z = true;            // the base-field variable z
};

namespace detail {

/// Precedence climbing: + - below * / below unary - below ^.
class ExpressionParser {
 public:
  using Value = MPoly<RatFunc>;

  ExpressionParser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) fail(ErrorCode::SyntaxError, "empty expression");
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { throw ParseError(code, pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value constant(RatFunc c) const { return Value(ctx_.ring, std::move(c)); }

  Value expression() {
    Value v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Value d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail(ErrorCode::DivisionByZero, "division by zero");
        }
        if (!d.is_constant()) {
          pos_ = at;
          fail(ErrorCode::NotAPolynomial, "division by a non-constant polynomial");
        }
        v = d.constant_term().inverse() * v;
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const bool parens = accept('(');
    const bool negative = accept('-');
    skip_space();
    Integer e = integer_literal();
    if (parens && !accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail(ErrorCode::SyntaxError, "chained exponent needs parentheses");
    if (!e.fits_ulong_p() || e > 100000) {
      pos_ = at;
      fail(ErrorCode::SyntaxError, "exponent too large");
    }
    const unsigned long k = e.get_ui();
    if (!negative) return base.pow(static_cast<unsigned>(k));
    if (ctx_.ring->nvars() > 0) {
      pos_ = at;
      fail(ErrorCode::NegativeExponent, "negative exponent in a polynomial");
    }
    if (base.is_zero()) {
      pos_ = at;
      fail(ErrorCode::DivisionByZero, "zero to a negative power");
    }
    return constant(base.constant_term().pow(-static_cast<long>(k)));
  }

  Integer integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(ErrorCode::SyntaxError, "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value primary() {
    skip_space();
    if (pos_ == text_.size()) fail(ErrorCode::SyntaxError, "unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expression();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(RatFunc(NFElem(Rational(integer_literal()))));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto i = ctx_.ring->index_of(name)) return Value::variable(ctx_.ring, *i);
      if (ctx_.field && name == ctx_.field->generator_name()) return constant(RatFunc(NFElem::generator(ctx_.field)));
      if (ctx_.allow_z && name == "z") return constant(RatFunc::variable());
      pos_ = start;
      fail(ErrorCode::UnknownIdentifier, "unknown identifier '" + name + "'");
    }
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RingPtr empty_ring() {
  static const RingPtr r = make_ring({});
  return r;
}

/// A polynomial in ctx.ring with coefficients in K = k(z).
inline MPoly<RatFunc> parse_polynomial(std::string_view text, const ParseContext& ctx) {
  return detail::ExpressionParser(text, ctx).parse();
}

inline MPoly<RatFunc> parse_polynomial(std::string_view text, const RingPtr& ring, FieldPtr field = nullptr) {
  return parse_polynomial(text, ParseContext{ring, std::move(field), true});
}

/// An element of K = k(z).
inline RatFunc parse_rational_function(std::string_view text, FieldPtr field = nullptr) {
  ParseContext ctx{empty_ring(), std::move(field), true};
  auto v = parse_polynomial(text, ctx);
  return v.is_zero() ? RatFunc(0) : v.constant_term();
}

/// A polynomial in z.
inline UniPoly<NFElem> parse_univariate(std::string_view text, FieldPtr field = nullptr) {
  RatFunc r = parse_rational_function(text, std::move(field));
  if (!r.is_polynomial()) throw ParseError(ErrorCode::NotAPolynomial, 0, "expression is not a polynomial in z");
  return r.num();
}

/// An element of the number field (no z).
inline NFElem parse_constant(std::string_view text, FieldPtr field = nullptr) {
  ParseContext ctx{empty_ring(), std::move(field), false};
  auto v = parse_polynomial(text, ctx);
  if (v.is_zero()) return NFElem(0);
  return v.constant_term().constant_value();
}

}  // namespace schwarz

#endif  // SCHWARZ_PARSER_HPP
