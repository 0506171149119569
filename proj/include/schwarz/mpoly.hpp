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

#ifndef SCHWARZ_MPOLY_HPP
#define SCHWARZ_MPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/monomial.hpp"
#include "schwarz/ratfunc.hpp"

namespace schwarz {

/// Variable names plus the active monomial order.
struct PolyRing {
  std::vector<std::string> names;
  MonomialOrder order;

  std::size_t nvars() const noexcept { return names.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing>(PolyRing{std::move(names), std::move(order)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Sparse polynomial in the ring's variables with coefficients in C. Terms
/// are kept sorted strictly descending in the ring's monomial order and no
/// zero coefficient is ever stored.
template <class C>
class MPoly {
 public:
  using Term = std::pair<Monomial, C>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, C constant) : ring_(std::move(ring)) {
    if (!schwarz::is_zero(constant)) terms_.emplace_back(Monomial(ring_->nvars()), std::move(constant));
  }

  static MPoly variable(const RingPtr& ring, std::size_t i) {
    return term(ring, Monomial::variable(ring->nvars(), i), C(1));
  }

  static MPoly term(const RingPtr& ring, Monomial m, C c) {
    MPoly p(ring);
    if (!schwarz::is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  /// Combines duplicate monomials and sorts.
  static MPoly from_terms(const RingPtr& ring, std::vector<Term> terms) {
    std::map<Monomial, C> acc;
    for (auto& [m, c] : terms) {
      if (m.size() != ring->nvars()) throw Error(ErrorCode::ArityMismatch, "monomial arity mismatch");
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
    return from_map(ring, std::move(acc));
  }

  /// Trusted construction from terms already sorted descending, distinct and
  /// nonzero.
  static MPoly from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
    MPoly p(ring);
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of zero polynomial");
    return terms_.front().first;
  }
  const C& leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return terms_.front().second;
  }

  C constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return C(0);
  }

  C coefficient(const Monomial& m) const {
    for (const auto& [mono, c] : terms_) {
      if (mono == m) return c;
    }
    return C(0);
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first[var]);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.first.degree() != terms_.front().first.degree()) return false;
    }
    return true;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    const RingPtr& ring = common_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MPoly(ring);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    std::map<Monomial, C> acc;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        C prod = ca * cb;
        auto [it, inserted] = acc.try_emplace(ma * mb, prod);
        if (!inserted) it->second += prod;
      }
    }
    return from_map(ring, std::move(acc));
  }

  friend MPoly operator*(const C& s, const MPoly& p) {
    if (schwarz::is_zero(s)) return MPoly(p.ring_);
    MPoly r = p;
    for (auto& t : r.terms_) t.second = s * t.second;
    return r;
  }

  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  /// p * c * m; order is preserved because monomial orders are multiplicative.
  MPoly mul_term(const Monomial& m, const C& c) const {
    MPoly r(ring_);
    if (schwarz::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mono, coef] : terms_) r.terms_.emplace_back(mono * m, coef * c);
    return r;
  }

  MPoly pow(unsigned e) const {
    MPoly result(ring_, C(1)), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  MPoly monic() const {
    if (is_zero()) return *this;
    return (C(1) / leading_coefficient()) * (*this);
  }

  template <class F>
  MPoly map_coefficients(F&& f) const {
    MPoly r(ring_);
    for (const auto& [m, c] : terms_) {
      C v = f(c);
      if (!schwarz::is_zero(v)) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }

  /// Same polynomial viewed in another ring with the same variables (e.g. a
  /// different monomial order).
  MPoly with_ring(const RingPtr& ring) const {
    if (ring->nvars() != (ring_ ? ring_->nvars() : ring->nvars())) {
      throw Error(ErrorCode::ArityMismatch, "ring change with a different number of variables");
    }
    MPoly r(ring);
    r.terms_ = terms_;
    const MonomialOrder& order = ring->order;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const Term& x, const Term& y) { return order.compare(x.first, y.first) > 0; });
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  static MPoly from_map(const RingPtr& ring, std::map<Monomial, C> acc) {
    MPoly p(ring);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!schwarz::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    }
    const MonomialOrder& order = ring->order;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& x, const Term& y) { return order.compare(x.first, y.first) > 0; });
    return p;
  }

  static const RingPtr& common_ring(const MPoly& a, const MPoly& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_ || same_ring(a.ring_, b.ring_)) return a.ring_;
    throw Error(ErrorCode::ArityMismatch, "polynomials from different rings");
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    const RingPtr& ring = common_ring(a, b);
    MPoly r(ring);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const MonomialOrder& order = ring->order;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size()   ? -1
              : j == b.terms_.size() ? 1
                                     : order.compare(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        C s = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!schwarz::is_zero(s)) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

template <class C>
bool is_zero(const MPoly<C>& p) {
  return p.is_zero();
}

/// Ring homomorphism X_i -> images[i]. The images may live in a different
/// ring than p (all in the same one); the result lives in the images' ring.
template <class C>
MPoly<C> substitute(const MPoly<C>& p, const std::vector<MPoly<C>>& images) {
  if (!p.ring() || images.size() != p.ring()->nvars()) {
    throw Error(ErrorCode::ArityMismatch, "substitution needs one image per variable");
  }
  RingPtr target = images.empty() ? p.ring() : images.front().ring();
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw Error(ErrorCode::ArityMismatch, "substitution images from different rings");
  }
  std::vector<std::vector<MPoly<C>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const MPoly<C>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly<C>(target, C(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  MPoly<C> result(target);
  for (const auto& [m, c] : p.terms()) {
    MPoly<C> t(target, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] > 0) t *= power(i, m[i]);
    }
    result += t;
  }
  return result;
}

/// Formal partial derivative in X_var (0-based index).
template <class C>
MPoly<C> partial_derivative(const MPoly<C>& p, std::size_t var) {
  if (var >= p.ring()->nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  std::vector<typename MPoly<C>::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    std::vector<int> e = m.exponents();
    C factor(static_cast<long>(e[var]));
    --e[var];
    terms.emplace_back(Monomial(std::move(e)), factor * c);
  }
  return MPoly<C>::from_terms(p.ring(), std::move(terms));
}

/// Applies d/dz to every coefficient; the derivation with delta(X_i) = 0.
template <class K>
MPoly<RationalFunction<K>> delta_coeffs(const MPoly<RationalFunction<K>>& p) {
  return p.map_coefficients([](const RationalFunction<K>& c) { return c.derivative(); });
}

inline std::string render_monomial(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? std::string("1") : out;
}

/// Terms in descending ring order, e.g. "X1^2 - 2*z*X2 + (z + 1)".
template <class C>
std::string render(const MPoly<C>& p) {
  if (p.is_zero()) return "0";
  if (p.is_constant()) return render(p.terms().front().second);
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [m, c] : p.terms()) {
    CoefficientText t = coefficient_text(c);
    std::string text;
    if (m.is_one()) {
      text = t.magnitude;
    } else {
      std::string mono = render_monomial(m, *p.ring());
      text = t.is_one ? mono : t.magnitude + "*" + mono;
    }
    terms.emplace_back(t.negative, std::move(text));
  }
  return join_signed_terms(terms);
}

}  // namespace schwarz

#endif  // SCHWARZ_MPOLY_HPP
