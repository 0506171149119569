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

#ifndef SCHWARZ_GROEBNER_HPP
#define SCHWARZ_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/monomial.hpp"
#include "schwarz/mpoly.hpp"

namespace schwarz {

/// Reduced Groebner basis: monic elements sorted ascending by leading
/// monomial, no monomial of an element divisible by another element's
/// leading monomial. {1} is the unit ideal, {} the zero ideal.
template <class C>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<MPoly<C>> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const { return ring_->order; }
  const std::vector<MPoly<C>>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<MPoly<C>> elements_;
};

namespace detail {

struct DescendingOrder {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace detail

/// Full multivariate division remainder. Among divisors whose leading
/// monomial divides the current term, the earliest in `divisors` is used.
template <class C>
MPoly<C> reduce(const MPoly<C>& p, const std::vector<MPoly<C>>& divisors) {
  if (divisors.empty() || p.is_zero()) return p;
  const RingPtr& ring = p.ring();
  std::map<Monomial, C, detail::DescendingOrder> work(detail::DescendingOrder{&ring->order});
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  std::vector<typename MPoly<C>::Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const MPoly<C>* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(it->first)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.emplace_back(it->first, std::move(it->second));
      work.erase(it);
      continue;
    }
    const C factor = it->second / divisor->leading_coefficient();
    const Monomial shift = quotient(it->first, divisor->leading_monomial());
    work.erase(it);
    const auto& gt = divisor->terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      C delta = -(factor * gt[k].second);
      Monomial m = gt[k].first * shift;
      auto [pos, inserted] = work.try_emplace(std::move(m), delta);
      if (!inserted) {
        pos->second += delta;
        if (schwarz::is_zero(pos->second)) work.erase(pos);
      }
    }
  }
  return MPoly<C>::from_sorted_terms(ring, std::move(remainder));
}

/// The remainder of p by B; zero iff p lies in the ideal.
template <class C>
MPoly<C> normal_form(const MPoly<C>& p, const GroebnerBasis<C>& basis) {
  if (p.ring() && basis.ring() && !same_ring(p.ring(), basis.ring())) {
    return reduce(p.with_ring(basis.ring()), basis.elements());
  }
  return reduce(p, basis.elements());
}

template <class C>
MPoly<C> s_polynomial(const MPoly<C>& f, const MPoly<C>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(quotient(l, f.leading_monomial()), C(1) / f.leading_coefficient()) -
         g.mul_term(quotient(l, g.leading_monomial()), C(1) / g.leading_coefficient());
}

/// Buchberger's algorithm with the coprime-leading-terms and chain
/// criteria, normal pair selection, followed by full interreduction.
/// Deterministic for fixed input and order.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<MPoly<C>>& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidProblem, "buchberger needs at least one generator");
  const RingPtr ring = generators.front().ring();
  const MonomialOrder& order = ring->order;
  std::vector<MPoly<C>> g;
  for (const auto& p : generators) {
    if (!same_ring(p.ring(), ring)) throw Error(ErrorCode::ArityMismatch, "generators from different rings");
    if (p.is_zero()) continue;
    if (p.is_constant()) return GroebnerBasis<C>(ring, {MPoly<C>(ring, C(1))});
    g.push_back(p.monic());
  }
  if (g.empty()) return GroebnerBasis<C>(ring, {});

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  }
  auto pending = [&](std::size_t a, std::size_t b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = g[k].leading_monomial().divides(best_lcm) && !pending(i, k) && !pending(j, k);
    }
    if (chain) continue;

    MPoly<C> s = reduce(s_polynomial(g[i], g[j]), g);
    if (s.is_zero()) continue;
    if (s.is_constant()) return GroebnerBasis<C>(ring, {MPoly<C>(ring, C(1))});
    g.push_back(s.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (first occurrence wins on ties).
  std::vector<MPoly<C>> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].leading_monomial();
      const Monomial& lb = g[b].leading_monomial();
      redundant = lb.divides(la) && (!(la == lb) || b < a);
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MPoly<C>> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MPoly<C>> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    reduced.push_back(reduce(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly<C>& x, const MPoly<C>& y) {
    return order.compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  return GroebnerBasis<C>(ring, std::move(reduced));
}

/// Basis of the ideal generated by `generators` under `order`.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<MPoly<C>>& generators, const MonomialOrder& order) {
  if (generators.empty()) throw Error(ErrorCode::InvalidProblem, "buchberger needs at least one generator");
  RingPtr ring = make_ring(generators.front().ring()->names, order);
  std::vector<MPoly<C>> moved;
  for (const auto& p : generators) moved.push_back(p.with_ring(ring));
  return buchberger(moved);
}

/// Standard monomials (not divisible by any leading monomial of B), sorted
/// ascending in B's order.
struct QuotientBasis {
  std::vector<Monomial> monomials;

  std::size_t dimension() const noexcept { return monomials.size(); }
};

/// Throws NotZeroDimensional when some variable has no pure power among the
/// leading monomials.
template <class C>
QuotientBasis quotient_basis(const GroebnerBasis<C>& basis) {
  const std::size_t n = basis.ring()->nvars();
  if (basis.is_unit()) return {};
  std::vector<int> bound(n, -1);
  for (const auto& g : basis.elements()) {
    const Monomial& lm = g.leading_monomial();
    int v = lm.pure_power_variable();
    if (v >= 0 && (bound[v] < 0 || lm[v] < bound[v])) bound[v] = lm[v];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bound[i] < 0) {
      throw Error(ErrorCode::NotZeroDimensional,
                  "no pure power of " + basis.ring()->names[i] + " among the leading monomials");
    }
  }
  QuotientBasis out;
  std::vector<int> e(n, 0);
  while (true) {
    Monomial m(e);
    bool standard = true;
    for (const auto& g : basis.elements()) {
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) out.monomials.push_back(std::move(m));
    std::size_t k = 0;
    while (k < n && ++e[k] >= bound[k]) e[k++] = 0;
    if (k == n) break;
  }
  const MonomialOrder& order = basis.order();
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

/// K[X]/I for a zero-dimensional I, as a finite-dimensional K-vector space
/// with the standard monomials as basis.
template <class C>
class QuotientRing {
 public:
  using Poly = MPoly<C>;

  explicit QuotientRing(GroebnerBasis<C> basis) : basis_(std::move(basis)), standard_(quotient_basis(basis_)) {
    for (std::size_t i = 0; i < standard_.monomials.size(); ++i) index_.emplace(standard_.monomials[i], i);
  }

  const GroebnerBasis<C>& groebner_basis() const noexcept { return basis_; }
  const QuotientBasis& standard_monomials() const noexcept { return standard_; }
  std::size_t dimension() const noexcept { return standard_.dimension(); }
  const RingPtr& ring() const { return basis_.ring(); }

  Poly reduce(const Poly& p) const { return normal_form(p, basis_); }

  /// Coordinates of a polynomial already in normal form.
  std::vector<C> coordinates(const Poly& nf) const {
    std::vector<C> v(dimension(), C(0));
    for (const auto& [m, c] : nf.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw Error(ErrorCode::InvalidProblem, "polynomial is not in normal form");
      v[it->second] = c;
    }
    return v;
  }

  Poly from_coordinates(const std::vector<C>& v) const {
    std::vector<typename Poly::Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!schwarz::is_zero(v[i])) terms.emplace_back(standard_.monomials[i], v[i]);
    }
    return Poly::from_terms(ring(), std::move(terms));
  }

  /// Column j holds the coordinates of NF(p * b_j).
  Matrix<C> multiplication_matrix(const Poly& p) const {
    const std::size_t d = dimension();
    Matrix<C> m(d, d, C(0));
    for (std::size_t j = 0; j < d; ++j) {
      Poly prod = reduce(p.mul_term(standard_.monomials[j], C(1)));
      std::vector<C> col = coordinates(prod);
      for (std::size_t i = 0; i < d; ++i) m(i, j) = std::move(col[i]);
    }
    return m;
  }

  /// q in normal form with NF(p q) = 1. NotInvertible when p lies in I,
  /// ZeroDivisorError (with witness) when multiplication by p is singular.
  Poly inverse(const Poly& p) const {
    Poly r = reduce(p);
    if (r.is_zero()) throw Error(ErrorCode::NotInvertible, "element lies in the ideal");
    if (r.is_constant()) return Poly(ring(), C(1) / r.leading_coefficient());
    const std::size_t d = dimension();
    Matrix<C> m = multiplication_matrix(r);
    std::vector<C> rhs = coordinates(Poly(ring(), C(1)));
    // Gauss-Jordan on [m | rhs].
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < d; ++col) {
      std::size_t piv = row;
      while (piv < d && schwarz::is_zero(m(piv, col))) ++piv;
      if (piv == d) continue;
      m.swap_rows(piv, row);
      std::swap(rhs[piv], rhs[row]);
      C inv = C(1) / m(row, col);
      for (std::size_t k = col; k < d; ++k) m(row, k) = inv * m(row, k);
      rhs[row] = inv * rhs[row];
      for (std::size_t i = 0; i < d; ++i) {
        if (i == row || schwarz::is_zero(m(i, col))) continue;
        C f = m(i, col);
        for (std::size_t k = col; k < d; ++k) m(i, k) -= f * m(row, k);
        rhs[i] -= f * rhs[row];
      }
      pivot_col.push_back(col);
      ++row;
    }
    if (pivot_col.size() < d) {
      // Kernel vector: first free column set to 1.
      std::size_t free_col = 0;
      for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free_col; ++k) ++free_col;
      std::vector<C> w(d, C(0));
      w[free_col] = C(1);
      for (std::size_t r2 = 0; r2 < pivot_col.size(); ++r2) w[pivot_col[r2]] = -m(r2, free_col);
      throw ZeroDivisorError<Poly>(from_coordinates(w), "element is a zero divisor modulo the ideal");
    }
    return from_coordinates(rhs);
  }

  /// Inverse of a square matrix over K[X]/I by Gauss-Jordan elimination,
  /// pivots inverted with inverse(); every entry is kept in normal form.
  Matrix<Poly> inverse(const Matrix<Poly>& input) const {
    if (!input.is_square()) throw Error(ErrorCode::ArityMismatch, "matrix inverse needs a square matrix");
    const std::size_t n = input.rows();
    const Poly zero(ring()), one(ring(), C(1));
    Matrix<Poly> a(n, 2 * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = reduce(input(i, j));
      a(i, n + i) = one;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::optional<std::size_t> chosen;
      Poly pivot_inverse(ring());
      std::optional<ZeroDivisorError<Poly>> first_failure;
      for (std::size_t r = col; r < n && !chosen; ++r) {
        if (a(r, col).is_zero()) continue;
        try {
          pivot_inverse = inverse(a(r, col));
          chosen = r;
        } catch (const ZeroDivisorError<Poly>& e) {
          if (!first_failure) first_failure = e;
        }
      }
      if (!chosen) {
        if (first_failure) throw *first_failure;
        throw Error(ErrorCode::SingularMatrixModI, "matrix is singular modulo the ideal");
      }
      a.swap_rows(*chosen, col);
      for (std::size_t k = 0; k < 2 * n; ++k) {
        if (!a(col, k).is_zero()) a(col, k) = reduce(pivot_inverse * a(col, k));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col).is_zero()) continue;
        Poly f = a(i, col);
        for (std::size_t k = 0; k < 2 * n; ++k) {
          if (!a(col, k).is_zero()) a(i, k) = reduce(a(i, k) - f * a(col, k));
        }
      }
    }
    Matrix<Poly> out(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    }
    return out;
  }

 private:
  GroebnerBasis<C> basis_;
  QuotientBasis standard_;
  std::map<Monomial, std::size_t> index_;
};

template <class C>
MPoly<C> invert_mod(const MPoly<C>& p, const GroebnerBasis<C>& basis) {
  return QuotientRing<C>(basis).inverse(p);
}

template <class C>
Matrix<MPoly<C>> invert_matrix_mod(const Matrix<MPoly<C>>& m, const GroebnerBasis<C>& basis) {
  return QuotientRing<C>(basis).inverse(m);
}

/// NF(A * B) entrywise.
template <class C>
Matrix<MPoly<C>> multiply_mod(const Matrix<MPoly<C>>& a, const Matrix<MPoly<C>>& b, const GroebnerBasis<C>& basis) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ArityMismatch, "matrix shapes do not agree");
  Matrix<MPoly<C>> out(a.rows(), b.cols(), MPoly<C>(basis.ring()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      MPoly<C> acc(basis.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = normal_form(acc, basis);
    }
  }
  return out;
}

}  // namespace schwarz

#endif  // SCHWARZ_GROEBNER_HPP
