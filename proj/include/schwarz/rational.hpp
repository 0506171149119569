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

#ifndef SCHWARZ_RATIONAL_HPP
#define SCHWARZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "schwarz/error.hpp"

namespace schwarz {

/// Arbitrary-precision rational, always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Accepts "p", "-p" or "p/q" in base 10.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::SyntaxError, "not a rational literal: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  r.canonicalize();
  return r;
}

inline std::string render(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// How a coefficient prints in front of a monomial. `atomic` coefficients can
/// be written as "magnitude*X" with the sign pulled out; the rest are
/// wrapped in parentheses by their own renderer and carry no sign.
struct CoefficientText {
  bool negative = false;
  bool is_one = false;
  bool atomic = true;
  std::string magnitude;
};

inline CoefficientText coefficient_text(const Rational& r) {
  CoefficientText t;
  t.negative = sgn(r) < 0;
  Rational a = abs(r);
  t.is_one = (a == 1);
  t.magnitude = render(a);
  return t;
}

/// Joins (sign, text) terms into "a + b - c" form.
template <class Range>
std::string join_signed_terms(const Range& terms) {
  std::string out;
  bool first = true;
  for (const auto& [negative, text] : terms) {
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += text;
  }
  return out.empty() ? std::string("0") : out;
}

}  // namespace schwarz

#endif  // SCHWARZ_RATIONAL_HPP
