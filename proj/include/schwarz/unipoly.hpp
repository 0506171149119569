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

#ifndef SCHWARZ_UNIPOLY_HPP
#define SCHWARZ_UNIPOLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/number_field.hpp"
#include "schwarz/rational.hpp"

namespace schwarz {

/// Dense univariate polynomial over a field K, coefficients stored in
/// ascending order with no trailing zeros (the zero polynomial is empty).
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(K constant) {  // NOLINT
    if (!schwarz::is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit UniPoly(std::vector<K> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static UniPoly monomial(K c, std::size_t k) {
    if (schwarz::is_zero(c)) return {};
    std::vector<K> v(k + 1, K(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v), Trimmed{});
  }
  static UniPoly variable() { return monomial(K(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == K(1); }
  const std::vector<K>& coeffs() const noexcept { return coeffs_; }
  K coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : K(0); }
  const K& leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  K constant_term() const { return coeff(0); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const UniPoly& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const UniPoly& small = &big == &a ? b : a;
    std::vector<K> r = big.coeffs_;
    for (std::size_t i = 0; i < small.coeffs_.size(); ++i) r[i] += small.coeffs_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (schwarz::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const K& s, const UniPoly& p) {
    if (schwarz::is_zero(s)) return {};
    std::vector<K> r = p.coeffs_;
    for (auto& c : r) c = s * c;
    return UniPoly(std::move(r), Trimmed{});
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<K> rem = a.coeffs_;
    std::vector<K> quot(a.coeffs_.size() - b.coeffs_.size() + 1, K(0));
    const K inv_lead = K(1) / b.coeffs_.back();
    const std::size_t db = b.coeffs_.size();
    for (std::size_t top = rem.size(); top-- >= db;) {
      if (schwarz::is_zero(rem[top])) continue;
      K c = rem[top] * inv_lead;
      std::size_t shift = top - (db - 1);
      for (std::size_t i = 0; i < db; ++i) rem[shift + i] -= c * b.coeffs_[i];
      quot[shift] = std::move(c);
    }
    rem.resize(db - 1);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<K> r(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) r[k - 1] = K(static_cast<long>(k)) * coeffs_[k];
    return UniPoly(std::move(r));
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return (K(1) / leading()) * (*this);
  }

  UniPoly pow(unsigned long e) const {
    UniPoly result(K(1)), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

 private:
  struct Trimmed {};
  UniPoly(std::vector<K> c, Trimmed) : coeffs_(std::move(c)) {}

  void trim() {
    while (!coeffs_.empty() && schwarz::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
  return p.is_zero();
}

/// Monic greatest common divisor (gcd(0, 0) = 0).
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Exact quotient; the caller guarantees b | a.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).first;
}

/// p(q(z)).
template <class K>
UniPoly<K> compose(const UniPoly<K>& p, const UniPoly<K>& q) {
  UniPoly<K> out;
  for (long k = p.degree(); k >= 0; --k) out = out * q + UniPoly<K>(p.coeff(static_cast<std::size_t>(k)));
  return out;
}

template <class K>
struct SquarefreeDecomposition {
  K leading;
  /// Monic, squarefree, pairwise coprime factors with strictly increasing
  /// multiplicities.
  std::vector<std::pair<UniPoly<K>, int>> factors;

  UniPoly<K> expand() const {
    UniPoly<K> p(leading);
    for (const auto& [f, m] : factors) p *= f.pow(static_cast<unsigned long>(m));
    return p;
  }
};

/// Yun's algorithm (characteristic zero): p = lc * prod f_i^i.
template <class K>
SquarefreeDecomposition<K> squarefree_decomposition(const UniPoly<K>& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition<K> out{p.leading(), {}};
  if (p.degree() == 0) return out;
  UniPoly<K> f = p.monic();
  UniPoly<K> df = f.derivative();
  UniPoly<K> a = gcd(f, df);
  UniPoly<K> b = exact_div(f, a);
  UniPoly<K> c = exact_div(df, a);
  UniPoly<K> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly<K> g = gcd(b, d);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    if (g.degree() > 0) out.factors.emplace_back(std::move(g), i);
  }
  return out;
}

/// Descending powers, e.g. "3*z^2 - (e + 1)*z + 1/2".
template <class K>
std::string render(const UniPoly<K>& p, const std::string& var = "z") {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return render(p.coeffs()[0]);
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const K& c = p.coeffs()[k];
    if (schwarz::is_zero(c)) continue;
    CoefficientText t = coefficient_text(c);
    std::string text;
    if (k == 0) {
      text = t.magnitude;
    } else {
      std::string power = k == 1 ? var : var + "^" + std::to_string(k);
      text = t.is_one ? power : t.magnitude + "*" + power;
    }
    terms.emplace_back(t.negative, std::move(text));
  }
  return join_signed_terms(terms);
}

}  // namespace schwarz

#endif  // SCHWARZ_UNIPOLY_HPP
