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

#ifndef SCHWARZ_SCHWARZ_SOLVER_HPP
#define SCHWARZ_SCHWARZ_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/groebner.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/mpoly.hpp"
#include "schwarz/ratfunc.hpp"

namespace schwarz {

using SPoly = MPoly<RatFunc>;

/// Invariants F_1..F_N (coefficients free of z, each homogeneous) and targets f_1..f_N in K = k(z).
struct SchwarzProblem {
  RingPtr ring;
  std::vector<SPoly> invariants;
  std::vector<RatFunc> targets;

  std::size_t n() const { return ring->nvars(); }

  void validate() const {
    if (!ring || ring->nvars() == 0) throw Error(ErrorCode::InvalidProblem, "no variables");
    if (invariants.size() != targets.size()) {
      throw Error(ErrorCode::InvalidProblem, "invariant and target counts differ");
    }
    if (invariants.size() < n()) throw Error(ErrorCode::InvalidProblem, "fewer invariants than variables");
    for (std::size_t i = 0; i < invariants.size(); ++i) {
      const SPoly& f = invariants[i];
      const std::string which = "invariant " + std::to_string(i + 1);
      if (!same_ring(f.ring(), ring)) throw Error(ErrorCode::InvalidProblem, which + " lives in another ring");
      if (f.is_zero() || f.is_constant()) throw Error(ErrorCode::InvalidProblem, which + " is constant");
      if (!f.is_homogeneous()) throw Error(ErrorCode::InvalidProblem, which + " is not homogeneous");
      for (const auto& [m, c] : f.terms()) {
        if (!c.is_constant()) throw Error(ErrorCode::InvalidProblem, which + " has a coefficient depending on z");
      }
    }
  }
};

/// Y_0..Y_n; Y_j[i] is the normal form of the j-th derivative of X_{i+1}.
struct DerivativeVectors {
  std::vector<std::vector<SPoly>> Y;
};

/// y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0; coefficients stored as a_{n-1}, ..., a_0.
struct Lode {
  std::vector<RatFunc> coefficients;

  std::size_t order() const { return coefficients.size(); }
  const RatFunc& a(std::size_t k) const { return coefficients[order() - 1 - k]; }
  RatFunc& a(std::size_t k) { return coefficients[order() - 1 - k]; }
  friend bool operator==(const Lode&, const Lode&) = default;
};

struct SolveResult {
  Lode lode;
  DerivativeVectors vectors;
  GroebnerBasis<RatFunc> basis;
  std::vector<std::size_t> jacobian_rows;  // indices of the invariants used for J
  bool verified = false;
};

inline GroebnerBasis<RatFunc> solution_ideal_basis(const SchwarzProblem& p) {
  std::vector<SPoly> gens;
  for (std::size_t i = 0; i < p.invariants.size(); ++i) gens.push_back(p.invariants[i] - SPoly(p.ring, p.targets[i]));
  GroebnerBasis<RatFunc> b = buchberger(gens);
  if (b.is_unit()) throw Error(ErrorCode::InconsistentIdeal, "the targets generate the unit ideal");
  return b;
}

namespace detail {

inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// First n-subset of the invariants (lexicographic) whose Jacobian is invertible mod I, with that inverse.
inline std::pair<std::vector<std::size_t>, Matrix<SPoly>> invertible_jacobian(const SchwarzProblem& p,
                                                                            const QuotientRing<RatFunc>& q) {
  const std::size_t n = p.n();
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  do {
    Matrix<SPoly> j(n, n, SPoly(p.ring));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) j(r, c) = partial_derivative(p.invariants[rows[r]], c);
    }
    try {
      return {rows, q.inverse(j)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMatrixModI && e.code() != ErrorCode::ZeroDivisor) throw;
    }
  } while (detail::next_subset(rows, p.invariants.size()));
  throw Error(ErrorCode::JacobianNotInvertible, "no n invariants have a Jacobian invertible modulo I");
}

/// Y_1 = NF(J^-1 delta f); Y_j = NF(delta Y_{j-1} + sum_k dY_{j-1}/dX_k Y_{1,k}).
inline DerivativeVectors derivative_vectors(const SchwarzProblem& p, const QuotientRing<RatFunc>& q,
                                            const std::vector<std::size_t>& rows, const Matrix<SPoly>& j_inverse) {
  const std::size_t n = p.n();
  DerivativeVectors dv;
  dv.Y.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) dv.Y[0].push_back(SPoly::variable(p.ring, i));
  for (std::size_t i = 0; i < n; ++i) {
    SPoly acc(p.ring);
    for (std::size_t k = 0; k < n; ++k) acc += j_inverse(i, k) * SPoly(p.ring, p.targets[rows[k]].derivative());
    dv.Y[1].push_back(q.reduce(acc));
  }
  for (std::size_t step = 2; step <= n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      const SPoly& prev = dv.Y[step - 1][i];
      SPoly acc = delta_coeffs(prev);
      for (std::size_t k = 0; k < n; ++k) acc += partial_derivative(prev, k) * dv.Y[1][k];
      dv.Y[step].push_back(q.reduce(acc));
    }
  }
  return dv;
}

inline DerivativeVectors derivative_vectors(const GroebnerBasis<RatFunc>& basis, const SchwarzProblem& p) {
  QuotientRing<RatFunc> q(basis);
  auto [rows, jinv] = invertible_jacobian(p, q);
  return derivative_vectors(p, q, rows, jinv);
}

/// NF(Y_n + sum_k a_k Y_k) == 0 componentwise.
inline bool verify_lode(const Lode& lode, const DerivativeVectors& dv, const GroebnerBasis<RatFunc>& basis) {
  const std::size_t n = lode.order();
  if (dv.Y.size() != n + 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    SPoly acc = dv.Y[n][i];
    for (std::size_t k = 0; k < n; ++k) acc += lode.a(k) * dv.Y[k][i];
    if (!normal_form(acc, basis).is_zero()) return false;
  }
  return true;
}

inline SolveResult solve(const SchwarzProblem& p) {
  p.validate();
  const std::size_t n = p.n();
  SolveResult out{Lode{}, DerivativeVectors{}, solution_ideal_basis(p), {}, false};
  QuotientRing<RatFunc> q(out.basis);
  auto [rows, jinv] = invertible_jacobian(p, q);
  out.jacobian_rows = rows;
  out.vectors = derivative_vectors(p, q, rows, jinv);

  // [Y_{n-1} | ... | Y_1 | Y_0]
  Matrix<SPoly> w(n, n, SPoly(p.ring));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) w(i, col) = out.vectors.Y[n - 1 - col][i];
  }
  Matrix<SPoly> w_inverse;
  try {
    w_inverse = q.inverse(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrixModI && e.code() != ErrorCode::ZeroDivisor) throw;
    throw Error(ErrorCode::CurveInHyperplane, "the Wronskian-type matrix is singular modulo I");
  }
  for (std::size_t r = 0; r < n; ++r) {
    SPoly acc(p.ring);
    for (std::size_t k = 0; k < n; ++k) acc -= w_inverse(r, k) * out.vectors.Y[n][k];
    SPoly a = q.reduce(acc);
    if (!a.is_constant()) {
      throw Error(ErrorCode::InvariantLeakage, "coefficient a_" + std::to_string(n - 1 - r) + " depends on X");
    }
    out.lode.coefficients.push_back(a.is_zero() ? RatFunc(0) : a.constant_term());
  }
  out.verified = verify_lode(out.lode, out.vectors, out.basis);
  return out;
}

}  // namespace schwarz

#endif  // SCHWARZ_SCHWARZ_SOLVER_HPP
