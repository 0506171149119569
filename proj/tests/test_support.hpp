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

#ifndef SCHWARZ_TESTS_TEST_SUPPORT_HPP
#define SCHWARZ_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "schwarz/mpoly.hpp"
#include "schwarz/ratfunc.hpp"

namespace schwarz::testing {

using Poly = MPoly<RatFunc>;

inline RatFunc z() { return RatFunc::variable(); }
inline RatFunc rf(long c) { return RatFunc(c); }

inline RingPtr Ring(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return make_ring(std::move(names), std::move(order));
}

inline Poly Var(const RingPtr& r, std::size_t i) { return Poly::variable(r, i); }
inline Poly Const(const RingPtr& r, RatFunc c) { return Poly(r, std::move(c)); }

/// (a + b z) / (c + d z) with integer entries in [-h, h], denominator nonzero.
inline RatFunc RandomRatFunc(std::mt19937& rng, int height = 2, bool allow_fraction = true) {
  std::uniform_int_distribution<int> d(-height, height);
  std::uniform_int_distribution<int> kind(0, 3);
  RatFunc num = RatFunc(d(rng)) + RatFunc(d(rng)) * z();
  if (!allow_fraction || kind(rng) != 0) return num;
  RatFunc den = RatFunc(d(rng)) + RatFunc(d(rng)) * z();
  if (den.is_zero()) return num;
  return num / den;
}

inline RatFunc RandomNonzeroRatFunc(std::mt19937& rng, int height = 2) {
  RatFunc r;
  do {
    r = RandomRatFunc(rng, height);
  } while (r.is_zero());
  return r;
}

inline Poly RandomPoly(std::mt19937& rng, const RingPtr& ring, int max_degree, int max_terms, int height = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::vector<Poly::Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> e(ring->nvars(), 0);
    int budget = exp(rng);
    for (int b = 0; b < budget; ++b) {
      std::uniform_int_distribution<std::size_t> v(0, ring->nvars() - 1);
      ++e[v(rng)];
    }
    terms.emplace_back(Monomial(e), RandomNonzeroRatFunc(rng, height));
  }
  return Poly::from_terms(ring, std::move(terms));
}


/// Small random ideal: up to 3 variables, degree <= 4, coefficients of
/// height <= 2. Zero-dimensional ideals lead each variable with a pure power
/// and add one random generator; general ideals are 1-3 sparse generators.
struct RandomIdeal {
  RingPtr ring;
  std::vector<Poly> generators;
  bool zero_dimensional_by_construction = false;
};

inline RandomIdeal MakeRandomIdeal(std::mt19937& rng, bool zero_dimensional) {
  std::uniform_int_distribution<std::size_t> nv(1, 3);
  RandomIdeal out;
  out.ring = Ring(nv(rng));
  const std::size_t n = out.ring->nvars();
  if (zero_dimensional) {
    out.zero_dimensional_by_construction = true;
    std::uniform_int_distribution<int> deg(1, n == 1 ? 4 : 2);
    for (std::size_t i = 0; i < n; ++i) {
      int d = deg(rng);
      Poly g = Poly::variable(out.ring, i).pow(static_cast<unsigned>(d));
      if (d > 1) g += RandomPoly(rng, out.ring, d - 1, 2);
      else g += Poly(out.ring, RandomRatFunc(rng));
      out.generators.push_back(g);
    }
    std::bernoulli_distribution extra(0.5);
    if (extra(rng)) out.generators.push_back(RandomPoly(rng, out.ring, 3, 3));
  } else {
    std::uniform_int_distribution<int> ngen(1, 3);
    int k = ngen(rng);
    for (int i = 0; i < k; ++i) out.generators.push_back(RandomPoly(rng, out.ring, 4, 3));
  }
  return out;
}

}  // namespace schwarz::testing

#endif  // SCHWARZ_TESTS_TEST_SUPPORT_HPP
