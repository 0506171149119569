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
#include <vector>

#include "gtest/gtest.h"
#include "schwarz/mpoly.hpp"
#include "test_support.hpp"

namespace schwarz {
namespace {

using testing::Const;
using testing::Poly;
using testing::Ring;
using testing::Var;
using testing::z;

class MultiPolyTest : public ::testing::Test {
 protected:
  RingPtr ring = Ring(3);
  Poly x1 = Var(ring, 0), x2 = Var(ring, 1), x3 = Var(ring, 2);
  Poly one = Const(ring, 1);
};

TEST_F(MultiPolyTest, CyclicPermutationFixesProductOfVariables) {
  Poly p = x1 * x2 * x3;
  // X1 -> X3, X2 -> X1, X3 -> X2.
  EXPECT_EQ(substitute(p, {x3, x1, x2}), p);
}

TEST_F(MultiPolyTest, EvaluateSextic) {
  Poly s = x1.pow(3) + x2.pow(3) + x3.pow(3);
  Poly q = x1.pow(3) * x2.pow(3) + x1.pow(3) * x3.pow(3) + x2.pow(3) * x3.pow(3);
  Poly f6 = s * s - Const(ring, 12) * q;
  Poly zero(ring);
  EXPECT_EQ(substitute(f6, {one, zero, zero}), one);
}

TEST_F(MultiPolyTest, IdentitySubstitution) {
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    Poly p = testing::RandomPoly(rng, ring, 4, 5);
    EXPECT_EQ(substitute(p, {x1, x2, x3}), p);
  }
}

TEST_F(MultiPolyTest, SubstitutionArityMismatch) {
  try {
    (void)substitute(x1, {x1, x2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST_F(MultiPolyTest, SubstitutionIsMultiplicative) {
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    Poly p = testing::RandomPoly(rng, ring, 3, 3), q = testing::RandomPoly(rng, ring, 3, 3);
    std::vector<Poly> images;
    for (int k = 0; k < 3; ++k) {
      images.push_back(Const(ring, testing::RandomRatFunc(rng)) * x1 + Const(ring, testing::RandomRatFunc(rng)) * x2 +
                       Const(ring, testing::RandomRatFunc(rng)) * x3);
    }
    EXPECT_EQ(substitute(p * q, images), substitute(p, images) * substitute(q, images));
    EXPECT_EQ(substitute(p + q, images), substitute(p, images) + substitute(q, images));
  }
}

TEST_F(MultiPolyTest, PartialDerivativeExamples) {
  EXPECT_EQ(partial_derivative(x1 * x2 * x3, 0), x2 * x3);
  EXPECT_EQ(partial_derivative(Const(ring, z()) * x1 * x1, 0), Const(ring, RatFunc(2) * z()) * x1);
  Poly s = x1.pow(3) + x2.pow(3) + x3.pow(3);
  EXPECT_EQ(partial_derivative(s, 0), Const(ring, 3) * x1 * x1);
}

TEST_F(MultiPolyTest, PartialDerivativesCommute) {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    Poly p = testing::RandomPoly(rng, ring, 4, 6);
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(partial_derivative(partial_derivative(p, j), k), partial_derivative(partial_derivative(p, k), j));
      }
    }
  }
}

TEST_F(MultiPolyTest, DeltaExamples) {
  EXPECT_EQ(delta_coeffs(Const(ring, z()) * x1 * x1), x1 * x1);
  EXPECT_TRUE(delta_coeffs(Const(ring, 7) * x1 * x2.pow(3)).is_zero());
  Poly p = Const(ring, z() * z()) * x1 + Const(ring, RatFunc(1) / z()) * x2;
  Poly expected = Const(ring, RatFunc(2) * z()) * x1 - Const(ring, RatFunc(1) / (z() * z())) * x2;
  EXPECT_EQ(delta_coeffs(p), expected);
}

TEST_F(MultiPolyTest, DeltaCommutesWithPartialAndSatisfiesLeibniz) {
  std::mt19937 rng(29);
  for (int i = 0; i < 20; ++i) {
    Poly p = testing::RandomPoly(rng, ring, 3, 4), q = testing::RandomPoly(rng, ring, 3, 4);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(delta_coeffs(partial_derivative(p, k)), partial_derivative(delta_coeffs(p), k));
    }
    EXPECT_EQ(delta_coeffs(p * q), delta_coeffs(p) * q + p * delta_coeffs(q));
  }
}

TEST(MonomialOrderTest, TermsDescendAndLeadingMonomialIsMultiplicative) {
  std::mt19937 rng(31);
  for (auto kind : {OrderKind::Lex, OrderKind::GradedLex, OrderKind::GrevLex}) {
    for (std::vector<std::size_t> prio : {std::vector<std::size_t>{}, std::vector<std::size_t>{2, 0, 1}}) {
      MonomialOrder order(kind, prio);
      RingPtr r = Ring(3, order);
      for (int i = 0; i < 20; ++i) {
        Poly p = testing::RandomPoly(rng, r, 4, 6), q = testing::RandomPoly(rng, r, 4, 6);
        Poly pq = p * q;
        for (std::size_t t = 1; t < pq.terms().size(); ++t) {
          EXPECT_GT(order.compare(pq.terms()[t - 1].first, pq.terms()[t].first), 0);
        }
        EXPECT_EQ(pq.leading_monomial(), p.leading_monomial() * q.leading_monomial());
      }
    }
  }
}

TEST(MonomialOrderTest, KnownComparisons) {
  Monomial a({2, 0, 0}), b({1, 1, 0}), c({0, 0, 3}), d({1, 0, 1}), one(3);
  // grevlex: x1^2 > x1x2 > x1x3; x3^3 beats all degree-2 monomials.
  MonomialOrder grevlex = MonomialOrder::grevlex();
  EXPECT_GT(grevlex.compare(a, b), 0);
  EXPECT_GT(grevlex.compare(b, d), 0);
  EXPECT_GT(grevlex.compare(c, a), 0);
  EXPECT_GT(grevlex.compare(d, one), 0);
  // x1^2 x3 vs x1 x2^2 separates grevlex from graded lex.
  Monomial e({2, 0, 1}), f({1, 2, 0});
  EXPECT_GT(MonomialOrder(OrderKind::GradedLex).compare(e, f), 0);
  EXPECT_LT(grevlex.compare(e, f), 0);
  // lex ignores degree.
  EXPECT_GT(MonomialOrder::lex().compare(a, c), 0);
  EXPECT_EQ(MonomialOrder::parse("deglex"), MonomialOrder(OrderKind::GradedLex));
}

TEST_F(MultiPolyTest, Rendering) {
  Poly p = x1 * x1 - Const(ring, RatFunc(2) * z()) * x2 + Const(ring, z() + RatFunc(1));
  EXPECT_EQ(render(p), "X1^2 - 2*z*X2 + (z + 1)");
  EXPECT_EQ(render(Const(ring, RatFunc(-1) / (RatFunc(2) * z())) * x2), "(-1/(2*z))*X2");
  EXPECT_EQ(render(Poly(ring)), "0");
  EXPECT_EQ(render(Const(ring, RatFunc(1) / RatFunc(2)) * x3 - one), "1/2*X3 - 1");
}

TEST_F(MultiPolyTest, HomogeneityAndDegrees) {
  Poly p = x1 * x2 + x3 * x3;
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + x1).is_homogeneous());
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(p.degree_in(2), 2);
  EXPECT_EQ(Poly(ring).total_degree(), -1);
}

}  // namespace
}  // namespace schwarz
