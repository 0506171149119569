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

#ifndef SCHWARZ_GROUP_HPP
#define SCHWARZ_GROUP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/mpoly.hpp"
#include "schwarz/number_field.hpp"

namespace schwarz {

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Invertible square matrix over a number field.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Matrix<NFElem> m) : m_(std::move(m)) {
    if (!m_.is_square()) throw Error(ErrorCode::ArityMismatch, "group element must be square");
  }

  static GroupElement identity(std::size_t n) { return GroupElement(identity_matrix(n, NFElem(0), NFElem(1))); }

  const Matrix<NFElem>& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  const NFElem& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  NFElem determinant() const { return schwarz::determinant(m_); }

  GroupElement inverse() const {
    auto inv = schwarz::inverse(m_);
    if (!inv) throw Error(ErrorCode::SingularGenerator, "matrix is singular");
    return GroupElement(std::move(*inv));
  }

  bool is_identity() const { return *this == identity(size()); }

  /// Each entry is accumulated unreduced and reduced once.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::ArityMismatch, "group elements differ in size");
    FieldPtr field = NumberField::rationals();
    for (const auto* m : {&a.m_, &b.m_}) {
      for (const auto& x : m->data()) {
        if (x.degree() > 1) field = x.field();
      }
    }
    Matrix<NFElem> out(n, n, NFElem(0));
    detail::QPoly acc;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        acc.assign(2 * field->degree() - 1, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
          const auto& x = a.m_(i, k).coeffs();
          const auto& y = b.m_(k, j).coeffs();
          for (std::size_t s = 0; s < x.size(); ++s) {
            if (sgn(x[s]) == 0) continue;
            for (std::size_t t = 0; t < y.size(); ++t) {
              if (sgn(y[t]) != 0) acc[s + t] += x[s] * y[t];
            }
          }
        }
        out(i, j) = NFElem(field, acc);
      }
    }
    return GroupElement(std::move(out));
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    const auto& x = a.m_.data();
    const auto& y = b.m_.data();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  Matrix<NFElem> m_;
};

/// Finite group given by generators together with its full, sorted element list.
class MatrixGroup {
 public:
  MatrixGroup(std::vector<GroupElement> generators, std::vector<GroupElement> elements)
      : generators_(std::move(generators)), elements_(std::move(elements)) {}

  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const { return elements_.front().size(); }

  bool contains(const GroupElement& g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

/// Breadth-first closure under right multiplication by the generators.
inline MatrixGroup closure(const std::vector<GroupElement>& generators, std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw Error(ErrorCode::ArityMismatch, "no generators");
  const std::size_t n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::ArityMismatch, "generators differ in size");
    if (g.determinant().is_zero()) throw Error(ErrorCode::SingularGenerator, "generator has zero determinant");
  }
  std::set<GroupElement> seen{GroupElement::identity(n)};
  std::deque<GroupElement> queue{GroupElement::identity(n)};
  while (!queue.empty()) {
    GroupElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      GroupElement y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::GroupTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return MatrixGroup(generators, std::vector<GroupElement>(seen.begin(), seen.end()));
}

/// X_j -> sum_i X_i g_ij.  Satisfies act(g*h, p) == act(g, act(h, p)).
template <class C>
MPoly<C> act(const GroupElement& g, const MPoly<C>& p) {
  const auto& ring = p.ring();
  if (g.size() != ring->nvars()) throw Error(ErrorCode::ArityMismatch, "matrix size differs from ring arity");
  std::vector<MPoly<C>> images;
  for (std::size_t j = 0; j < g.size(); ++j) {
    MPoly<C> image(ring);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g(i, j).is_zero()) image += MPoly<C>::variable(ring, i) * MPoly<C>(ring, C(g(i, j)));
    }
    images.push_back(std::move(image));
  }
  return substitute(p, images);
}

/// chi(g) with act(g, p) = chi(g) p for every generator, or nullopt.
template <class C>
std::optional<std::vector<C>> semi_invariant_character(const MPoly<C>& p, const std::vector<GroupElement>& generators) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "semi-invariance of the zero polynomial");
  std::vector<C> chi;
  for (const auto& g : generators) {
    MPoly<C> q = act(g, p);
    if (q.is_zero() || !(q.leading_monomial() == p.leading_monomial())) return std::nullopt;
    C ratio = q.leading_coefficient() / p.leading_coefficient();
    if (!(q == ratio * p)) return std::nullopt;
    chi.push_back(std::move(ratio));
  }
  return chi;
}

template <class C>
std::optional<std::vector<C>> semi_invariant_character(const MPoly<C>& p, const MatrixGroup& group) {
  return semi_invariant_character(p, group.generators());
}

template <class C>
bool is_invariant(const MPoly<C>& p, const std::vector<GroupElement>& generators) {
  for (const auto& g : generators) {
    if (!(act(g, p) == p)) return false;
  }
  return true;
}

template <class C>
MPoly<C> reynolds(const MPoly<C>& p, const MatrixGroup& group) {
  MPoly<C> sum(p.ring());
  for (const auto& g : group.elements()) sum += act(g, p);
  return C(1) / C(static_cast<long>(group.order())) * sum;
}

inline bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const auto& x) { return g.contains(x); });
}

/// x h x^-1 in H for generators x of G and h of H.
inline bool is_normal_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
  if (!is_subgroup(h, g)) return false;
  for (const auto& x : g.generators()) {
    const GroupElement xi = x.inverse();
    for (const auto& y : h.generators()) {
      if (!h.contains(x * y * xi)) return false;
    }
  }
  return true;
}

inline std::optional<std::size_t> subgroup_index(const MatrixGroup& h, const MatrixGroup& g) {
  if (!is_subgroup(h, g) || g.order() % h.order() != 0) return std::nullopt;
  return g.order() / h.order();
}

}  // namespace schwarz

#endif  // SCHWARZ_GROUP_HPP
