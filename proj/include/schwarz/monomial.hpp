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

#ifndef SCHWARZ_MONOMIAL_HPP
#define SCHWARZ_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"

namespace schwarz {

/// Exponent vector X_1^e_1 ... X_n^e_n with a cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw Error(ErrorCode::NegativeExponent, "negative exponent in monomial");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.exps_[i] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// The single variable index when this is a pure power X_i^k (k >= 1).
  int pure_power_variable() const {
    int found = -1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
    return found;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.degree_ = 0;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Raw lexicographic comparison of exponent vectors (container key order,
  /// not a ring order).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class OrderKind { Lex, GradedLex, GrevLex };

/// Admissible monomial order with an explicit variable priority
/// (priority[0] is the most significant variable). An empty priority means
/// the natural order X_1 > X_2 > ... > X_n.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {})
      : kind_(kind), priority_(std::move(priority)) {}

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }

  /// "lex", "grevlex", "graded-lex" (alias "deglex").
  static MonomialOrder parse(std::string_view name) {
    if (name == "lex") return MonomialOrder(OrderKind::Lex);
    if (name == "grevlex") return MonomialOrder(OrderKind::GrevLex);
    if (name == "graded-lex" || name == "deglex") return MonomialOrder(OrderKind::GradedLex);
    throw Error(ErrorCode::InvalidProblem, "unknown monomial order '" + std::string(name) + "'");
  }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::Lex: return "lex";
      case OrderKind::GradedLex: return "graded-lex";
      case OrderKind::GrevLex: return "grevlex";
    }
    return "grevlex";
  }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    if (kind_ != OrderKind::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (kind_ == OrderKind::GrevLex) {
      for (std::size_t k = n; k-- > 0;) {
        std::size_t i = var(k);
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = var(k);
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.priority_ == b.priority_;
  }

 private:
  std::size_t var(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }

  OrderKind kind_ = OrderKind::GrevLex;
  std::vector<std::size_t> priority_;
};

}  // namespace schwarz

#endif  // SCHWARZ_MONOMIAL_HPP
