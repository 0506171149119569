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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "schwarz/hessian.hpp"
#include "schwarz/parser.hpp"
#include "test_support.hpp"

namespace schwarz {
namespace {

using testing::Const;
using testing::Poly;
using testing::Ring;
using testing::Var;
using testing::z;

void ExpectParseError(const std::string& text, ErrorCode code, std::size_t position, const RingPtr& ring,
                      FieldPtr field = nullptr) {
  try {
    (void)parse_polynomial(text, ring, field);
    ADD_FAILURE() << "no error for '" << text << "'";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), code) << text << ": " << e.what();
    EXPECT_EQ(e.position(), position) << text << ": " << e.what();
  }
}

TEST(ParserTest, Examples) {
  RingPtr r = Ring(3);
  Poly x1 = Var(r, 0), x2 = Var(r, 1), x3 = Var(r, 2);
  EXPECT_EQ(parse_polynomial("X1^3 + X2^3 + X3^3", r), x1.pow(3) + x2.pow(3) + x3.pow(3));
  EXPECT_TRUE(parse_polynomial("0", r).is_zero());
  EXPECT_EQ(parse_rational_function("(z^2 - 1)/(z - 1)"), z() + RatFunc(1));
}

TEST(ParserTest, Precedence) {
  RingPtr r = Ring(2);
  Poly x1 = Var(r, 0), x2 = Var(r, 1);
  EXPECT_EQ(parse_polynomial("-X1^2", r), -(x1 * x1));
  EXPECT_EQ(parse_polynomial("2*3^2", r), Const(r, RatFunc(18)));
  EXPECT_EQ(parse_polynomial("-2^2", r), Const(r, RatFunc(-4)));
  EXPECT_EQ(parse_polynomial("X1 - X2 - X1", r), -x2);
  EXPECT_EQ(parse_polynomial("12/3/2", r), Const(r, RatFunc(2)));
  EXPECT_EQ(parse_polynomial("1/2*z*X1", r), Const(r, z() / RatFunc(2)) * x1);
  EXPECT_EQ(parse_polynomial(" ( X1+X2 ) ^ 2 ", r), (x1 + x2).pow(2));
  EXPECT_EQ(parse_polynomial("X1^(2)", r), x1 * x1);
  EXPECT_EQ(parse_polynomial("2*-X1", r), Const(r, RatFunc(-2)) * x1);
  EXPECT_EQ(parse_rational_function("z^-2"), RatFunc(1) / (z() * z()));
  EXPECT_EQ(parse_rational_function("-1/(2*z)"), RatFunc(-1) / (RatFunc(2) * z()));
}

TEST(ParserTest, FieldGenerator) {
  auto f = NumberField::create("e", {1, 0, 0, 1, 0, 0, 1});
  EXPECT_TRUE(parse_constant("e^6 + e^3 + 1", f).is_zero());
  EXPECT_EQ(parse_constant("-1 - e^3", f), hessian_data().omega);
  EXPECT_EQ(parse_constant("1/(e - e^4)", f) * (NFElem::generator(f) - NFElem::generator(f).pow(4)), NFElem(1));
  try {
    (void)parse_constant("z", f);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownIdentifier);
  }
}

TEST(ParserTest, Errors) {
  RingPtr r = Ring(2);
  ExpectParseError("", ErrorCode::SyntaxError, 0, r);
  ExpectParseError("X1 +", ErrorCode::SyntaxError, 4, r);
  ExpectParseError("X1 $ X2", ErrorCode::SyntaxError, 3, r);
  ExpectParseError("(X1 + X2", ErrorCode::SyntaxError, 8, r);
  ExpectParseError("2 X1", ErrorCode::SyntaxError, 2, r);
  ExpectParseError("X1^2^3", ErrorCode::SyntaxError, 4, r);
  ExpectParseError("X1 + Y", ErrorCode::UnknownIdentifier, 5, r);
  ExpectParseError("X1^-1", ErrorCode::NegativeExponent, 3, r);
  ExpectParseError("1/X1", ErrorCode::NotAPolynomial, 2, r);
  ExpectParseError("X1/(z - z)", ErrorCode::DivisionByZero, 3, r);
  try {
    (void)parse_univariate("1/z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPolynomial);
  }
}

TEST(ParserRoundTripTest, RandomPolynomials) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    RingPtr r = Ring(1 + i % 3);
    Poly p = testing::RandomPoly(rng, r, 4, 4, 5);
    EXPECT_EQ(parse_polynomial(render(p), r), p) << render(p);
  }
}

TEST(ParserRoundTripTest, RandomRationalFunctions) {
  std::mt19937 rng(4);
  for (int i = 0; i < 200; ++i) {
    RatFunc a = testing::RandomRatFunc(rng, 4) * testing::RandomRatFunc(rng, 3) + testing::RandomRatFunc(rng, 2);
    EXPECT_EQ(parse_rational_function(render(a)), a) << render(a);
  }
}

TEST(ParserRoundTripTest, NumberFieldCoefficients) {
  const auto& h = hessian_data();
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-3, 3);
  RingPtr r = Ring(2);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k < 6; ++k) c.emplace_back(d(rng), 1 + (d(rng) + 3));
    NFElem x(h.field, c);
    RatFunc coeff = RatFunc(x) * z() + RatFunc(x * x);
    Poly p = Const(r, coeff) * Var(r, 0) + Const(r, RatFunc(x) / (z() + RatFunc(x))) * Var(r, 1).pow(2);
    EXPECT_EQ(parse_polynomial(render(p), r, h.field), p) << render(p);
    EXPECT_EQ(parse_constant(render(x), h.field), x) << render(x);
  }
}

TEST(ParserRoundTripTest, EngineOutputs) {
  const auto& h = hessian_data();
  for (const HPoly* p : {&h.invariants.F6, &h.invariants.R, &h.invariants.Psi12}) {
    std::string text = render(*p);
    auto back = parse_polynomial(text, h.invariants.ring, h.field);
    EXPECT_EQ(render(back), text);
  }
  for (const std::string s : {"-1/(2*z)", "1/(2*z^2)", "(z + 1)/(z - 1)", "1/2*z", "0"}) {
    EXPECT_EQ(render(parse_rational_function(s)), s);
  }
}

}  // namespace
}  // namespace schwarz
