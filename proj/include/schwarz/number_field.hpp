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

#ifndef SCHWARZ_NUMBER_FIELD_HPP
#define SCHWARZ_NUMBER_FIELD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/rational.hpp"

namespace schwarz {

namespace detail {

// Dense polynomials over Q, ascending coefficients, no trailing zeros.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// a mod m for monic m, in place; skips the zero coefficients of m.
inline void reduce_monic(QPoly& a, const QPoly& m) {
  const std::size_t d = m.size() - 1;
  Rational c;
  while (a.size() > d) {
    c = a.back();
    a.pop_back();
    if (sgn(c) == 0) continue;
    const std::size_t shift = a.size() - d;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(m[i]) != 0) a[shift + i] -= c * m[i];
    }
  }
}

// Quotient and remainder of a by nonzero b.
inline std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace detail

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[t]/(m(t)) for a monic m of degree d >= 1. Irreducibility of m is not
/// checked; a reducible m surfaces as ZeroDivisor on inversion.
class NumberField {
 public:
  NumberField(std::string generator, std::vector<Rational> minpoly)
      : generator_(std::move(generator)), minpoly_(std::move(minpoly)) {
    detail::trim(minpoly_);
    if (minpoly_.size() < 2) {
      throw Error(ErrorCode::InvalidProblem, "minimal polynomial must have degree >= 1");
    }
    Rational lead = minpoly_.back();
    for (auto& c : minpoly_) c /= lead;
  }

  /// `minpoly` is given in ascending order of powers; it is made monic.
  static FieldPtr create(std::string generator, std::vector<Rational> minpoly) {
    return std::make_shared<const NumberField>(std::move(generator), std::move(minpoly));
  }

  /// Q as the degree-one field Q[t]/(t).
  static const FieldPtr& rationals() {
    static const FieldPtr q = create("", {Rational(0), Rational(1)});
    return q;
  }

  const std::string& generator_name() const noexcept { return generator_; }
  const std::vector<Rational>& minpoly() const noexcept { return minpoly_; }
  std::size_t degree() const noexcept { return minpoly_.size() - 1; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.generator_ == b.generator_ && a.minpoly_ == b.minpoly_;
  }

 private:
  std::string generator_;
  std::vector<Rational> minpoly_;
};

/// An element of a NumberField, stored as its reduced remainder modulo the
/// minimal polynomial. Elements of any degree-one field embed into every
/// field, so integer and rational constants mix freely with field elements.
class NFElem {
 public:
  NFElem() : NFElem(0L) {}
  NFElem(long value) : field_(NumberField::rationals()), coeffs_{Rational(value)} {}  // NOLINT
  NFElem(int value) : NFElem(static_cast<long>(value)) {}  // NOLINT
  NFElem(Rational value) : field_(NumberField::rationals()), coeffs_{std::move(value)} {}  // NOLINT

  /// Reduces an arbitrary-length coefficient vector (ascending powers of the
  /// generator) modulo the minimal polynomial.
  NFElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    const std::size_t d = field_->degree();
    detail::trim(coeffs);
    if (coeffs.size() > d) detail::reduce_monic(coeffs, field_->minpoly());
    coeffs.resize(d);
    coeffs_ = std::move(coeffs);
  }

  static NFElem generator(const FieldPtr& field) {
    return NFElem(field, {Rational(0), Rational(1)});
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t degree() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i; zero beyond the field degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
  }
  bool is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
  }
  bool is_one() const { return is_rational() && coeffs_[0] == 1; }
  const Rational& rational_value() const { return coeffs_[0]; }

  NFElem operator-() const {
    NFElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    if (a.degree() == 1 && b.degree() == 1) return NFElem(Rational(a.coeffs_[0] + b.coeffs_[0]));
    const FieldPtr& f = common_field(a, b);
    std::vector<Rational> r(f->degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return NFElem(f, std::move(r), Reduced{});
  }

  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    if (a.degree() == 1 && b.degree() == 1) return NFElem(Rational(a.coeffs_[0] - b.coeffs_[0]));
    const FieldPtr& f = common_field(a, b);
    std::vector<Rational> r(f->degree());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return NFElem(f, std::move(r), Reduced{});
  }

  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    if (a.degree() == 1 && b.degree() == 1) return NFElem(Rational(a.coeffs_[0] * b.coeffs_[0]));
    if (a.degree() == 1 || b.degree() == 1) {
      const NFElem& big = a.degree() == 1 ? b : a;
      const Rational& s = a.degree() == 1 ? a.coeffs_[0] : b.coeffs_[0];
      std::vector<Rational> r(big.coeffs_);
      for (auto& c : r) c *= s;
      return NFElem(big.field_, std::move(r), Reduced{});
    }
    const FieldPtr& f = common_field(a, b);
    return NFElem(f, detail::qpoly_mul(a.coeffs_, b.coeffs_));
  }

  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  NFElem& operator/=(const NFElem& o) { return *this = *this / o; }

  /// Inverse via the extended Euclidean algorithm against the minimal
  /// polynomial. Throws DivisionByZero for 0 and ZeroDivisor when the
  /// element shares a factor with a reducible minimal polynomial.
  NFElem inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in number field");
    if (degree() == 1) return NFElem(field_, {Rational(1) / coeffs_[0]}, Reduced{});
    detail::QPoly r0 = field_->minpoly(), r1 = coeffs_;
    detail::trim(r1);
    detail::QPoly s0{}, s1{Rational(1)};  // s_i * a == r_i (mod m)
    while (!r1.empty()) {
      auto [q, r] = detail::qpoly_divmod(r0, r1);
      detail::QPoly s = detail::qpoly_sub(s0, detail::qpoly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.size() != 1) {
      throw Error(ErrorCode::ZeroDivisor,
                  "element shares a nontrivial factor with the minimal polynomial (reducible minpoly)");
    }
    for (auto& c : s0) c /= r0[0];
    return NFElem(field_, std::move(s0));
  }

  NFElem pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    NFElem result(1L), base = *this;
    while (exponent > 0) {
      if (exponent & 1) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const NFElem& a, const NFElem& b) {
    if (a.degree() == 1 && b.degree() == 1) return a.coeffs_[0] == b.coeffs_[0];
    (void)common_field(a, b);  // throws FieldMismatch
    return (a <=> b) == 0;
  }

  /// Lexicographic on the coefficient vector (ascending powers); the
  /// canonical order used for group elements.
  friend std::strong_ordering operator<=>(const NFElem& a, const NFElem& b) {
    std::size_t d = std::max(a.degree(), b.degree());
    if (a.degree() != 1 && b.degree() != 1) d = common_field(a, b)->degree();
    static const Rational zero(0);
    for (std::size_t i = 0; i < d; ++i) {
      const Rational& x = i < a.coeffs_.size() ? a.coeffs_[i] : zero;
      const Rational& y = i < b.coeffs_.size() ? b.coeffs_[i] : zero;
      int c = cmp(x, y);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Least common multiple of the denominators of all coefficients.
  Integer denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
  }

 private:
  struct Reduced {};
  NFElem(FieldPtr field, std::vector<Rational> coeffs, Reduced)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  static const FieldPtr& common_field(const NFElem& a, const NFElem& b) {
    if (a.field_ == b.field_ || b.field_->degree() == 1) return a.field_;
    if (a.field_->degree() == 1) return b.field_;
    if (*a.field_ == *b.field_) return a.field_;
    throw Error(ErrorCode::FieldMismatch, "arithmetic between elements of different number fields");
  }

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const NFElem& x) { return x.is_zero(); }

/// Embeds x into `field` (x must be rational or already live there).
inline NFElem promote(const NFElem& x, const FieldPtr& field) {
  if (x.field() == field) return x;
  if (x.degree() != 1 && !(*x.field() == *field)) {
    throw Error(ErrorCode::FieldMismatch, "cannot embed element into a different number field");
  }
  return NFElem(field, x.coeffs());
}

/// Descending powers of the generator, e.g. "2*e^3 - e + 1/2".
inline std::string render(const NFElem& x) {
  if (x.degree() == 1 || x.is_rational()) return render(x.rational_value());
  const std::string& g = x.field()->generator_name();
  std::vector<std::pair<bool, std::string>> terms;
  for (std::size_t k = x.degree(); k-- > 0;) {
    const Rational& c = x.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    std::string text;
    if (k == 0) {
      text = render(a);
    } else {
      std::string power = k == 1 ? g : g + "^" + std::to_string(k);
      text = a == 1 ? power : render(a) + "*" + power;
    }
    terms.emplace_back(sgn(c) < 0, std::move(text));
  }
  return join_signed_terms(terms);
}

inline CoefficientText coefficient_text(const NFElem& x) {
  if (x.is_rational()) return coefficient_text(x.rational_value());
  std::size_t nonzero = 0, last = 0;
  for (std::size_t k = 0; k < x.degree(); ++k) {
    if (sgn(x.coeffs()[k]) != 0) {
      ++nonzero;
      last = k;
    }
  }
  CoefficientText t;
  if (nonzero == 1) {
    t.negative = sgn(x.coeffs()[last]) < 0;
    t.magnitude = render(t.negative ? -x : x);
    return t;
  }
  t.atomic = false;
  t.magnitude = "(" + render(x) + ")";
  return t;
}

}  // namespace schwarz

#endif  // SCHWARZ_NUMBER_FIELD_HPP
