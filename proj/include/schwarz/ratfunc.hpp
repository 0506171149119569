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

#ifndef SCHWARZ_RATFUNC_HPP
#define SCHWARZ_RATFUNC_HPP

#include <string>
#include <utility>

#include "schwarz/error.hpp"
#include "schwarz/number_field.hpp"
#include "schwarz/rational.hpp"
#include "schwarz/unipoly.hpp"

namespace schwarz {

inline Integer denominator_lcm(const Rational& r) { return r.get_den(); }
inline Integer denominator_lcm(const NFElem& x) { return x.denominator_lcm(); }

template <class K>
Integer denominator_lcm(const UniPoly<K>& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = denominator_lcm(c);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

/// An element of K(z) in canonical form: gcd(num, den) = 1 and den monic.
/// Canonical forms are unique, so equality is structural.
template <class K>
class RationalFunction {
 public:
  RationalFunction() : den_(K(1)) {}
  RationalFunction(long c) : num_(K(c)), den_(K(1)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(static_cast<long>(c)) {}  // NOLINT
  RationalFunction(K c) : num_(std::move(c)), den_(K(1)) {}  // NOLINT
  RationalFunction(UniPoly<K> p) : num_(std::move(p)), den_(K(1)) {}  // NOLINT

  /// Normalizes num/den; throws DivisionByZero when den = 0.
  RationalFunction(UniPoly<K> num, UniPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RationalFunction variable() { return RationalFunction(UniPoly<K>::variable()); }

  const UniPoly<K>& num() const noexcept { return num_; }
  const UniPoly<K>& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.degree() <= 0; }
  K constant_value() const { return num_.constant_term(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    UniPoly<K> g = gcd(a.den_, b.den_);
    UniPoly<K> ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    if (a.is_constant()) return RationalFunction(a.num_.coeffs()[0] * b.num_, b.den_, Canonical{});
    if (b.is_constant()) return RationalFunction(b.num_.coeffs()[0] * a.num_, a.den_, Canonical{});
    UniPoly<K> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RationalFunction(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                            exact_div(a.den_, g2) * exact_div(b.den_, g1), Canonical{});
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero rational function");
    K lead = num_.leading();
    K inv = K(1) / lead;
    return RationalFunction(inv * den_, inv * num_, Canonical{});
  }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned long>(e)),
                            den_.pow(static_cast<unsigned long>(e)), Canonical{});
  }

  /// d/dz.
  RationalFunction derivative() const {
    if (is_polynomial()) return RationalFunction(num_.derivative());
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RationalFunction(UniPoly<K> num, UniPoly<K> den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly<K>(K(1));
      return;
    }
    UniPoly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    K inv = K(1) / den_.leading();
    if (!(inv == K(1))) {
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  UniPoly<K> num_;
  UniPoly<K> den_;
};

template <class K>
bool is_zero(const RationalFunction<K>& r) {
  return r.is_zero();
}

/// The canonical form of num/den.
template <class K>
RationalFunction<K> ratfunc_normalize(UniPoly<K> num, UniPoly<K> den) {
  return RationalFunction<K>(std::move(num), std::move(den));
}

template <class K>
RationalFunction<K> derivative(const RationalFunction<K>& r) {
  return r.derivative();
}

namespace detail {

template <class K>
bool single_atomic_term(const UniPoly<K>& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) {
    if (!schwarz::is_zero(c)) {
      ++nonzero;
      if (!coefficient_text(c).atomic) return false;
    }
  }
  return nonzero == 1;
}

}  // namespace detail

/// Renders num/den with integer-cleared coefficients, e.g. "-1/(2*z)",
/// "(z + 1)/(z - 1)".
template <class K>
std::string render(const RationalFunction<K>& r, const std::string& var = "z") {
  if (r.is_polynomial()) return render(r.num(), var);
  Integer l = denominator_lcm(r.num());
  Integer ld = denominator_lcm(r.den());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  K scale{Rational(l)};
  UniPoly<K> num = scale * r.num(), den = scale * r.den();
  std::string n = render(num, var), d = render(den, var);
  if (!detail::single_atomic_term(num)) n = "(" + n + ")";
  bool bare_den = detail::single_atomic_term(den) && den.leading() == K(1);
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

template <class K>
CoefficientText coefficient_text(const RationalFunction<K>& r) {
  if (r.is_polynomial() && detail::single_atomic_term(r.num())) {
    std::size_t k = static_cast<std::size_t>(r.num().degree());
    CoefficientText t = coefficient_text(r.num().leading());
    if (k > 0) {
      std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
      t.magnitude = t.is_one ? power : t.magnitude + "*" + power;
      t.is_one = false;
    }
    return t;
  }
  CoefficientText t;
  t.atomic = false;
  t.magnitude = "(" + render(r) + ")";
  return t;
}

using RatFunc = RationalFunction<NFElem>;

}  // namespace schwarz

#endif  // SCHWARZ_RATFUNC_HPP
