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

#ifndef SCHWARZ_HESSIAN_HPP
#define SCHWARZ_HESSIAN_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/error.hpp"
#include "schwarz/group.hpp"
#include "schwarz/matrix.hpp"
#include "schwarz/mpoly.hpp"
#include "schwarz/number_field.hpp"
#include "schwarz/unipoly.hpp"

namespace schwarz {

using HPoly = MPoly<NFElem>;
using ZPoly = UniPoly<NFElem>;

namespace detail {

inline NFElem nf(const FieldPtr& f, std::vector<long> coeffs) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return NFElem(f, std::move(q));
}

inline GroupElement mat3(std::vector<std::vector<NFElem>> rows) {
  return GroupElement(Matrix<NFElem>::from_rows(std::move(rows)));
}

/// S, T, U, V given omega (a primitive cube root of unity) and, optionally, a ninth root epsilon.
struct HessianGenerators {
  GroupElement S, T, U, V;
};

inline HessianGenerators hessian_generators(const NFElem& omega, const std::optional<NFElem>& epsilon) {
  const NFElem o = 0, l = 1;
  const NFElem omega2 = omega * omega;
  const NFElem rho = NFElem(1) / (omega - omega2);
  HessianGenerators g;
  g.S = mat3({{l, o, o}, {o, omega, o}, {o, o, omega2}});
  g.T = mat3({{o, l, o}, {o, o, l}, {l, o, o}});
  if (epsilon) g.U = mat3({{*epsilon, o, o}, {o, *epsilon, o}, {o, o, *epsilon * omega}});
  g.V = mat3({{rho, rho, rho}, {rho, rho * omega, rho * omega2}, {rho, rho * omega2, rho * omega}});
  return g;
}

}  // namespace detail

/// Invariant polynomials of the Hessian group, expanded in X1, X2, X3.
struct HessianInvariants {
  RingPtr ring;
  HPoly P, S, Q, R, F6, Phi6, F12, Psi12;
};

inline HessianInvariants make_hessian_invariants() {
  HessianInvariants inv;
  inv.ring = make_ring({"X1", "X2", "X3"});
  HPoly x1 = HPoly::variable(inv.ring, 0), x2 = HPoly::variable(inv.ring, 1), x3 = HPoly::variable(inv.ring, 2);
  auto c = [&](long v) { return HPoly(inv.ring, NFElem(v)); };
  HPoly a = x1.pow(3), b = x2.pow(3), d = x3.pow(3);
  inv.P = x1 * x2 * x3;
  inv.S = a + b + d;
  inv.Q = a * b + a * d + b * d;
  inv.R = (a - b) * (a - d) * (b - d);
  inv.F6 = inv.S.pow(2) - c(12) * inv.Q;
  inv.Phi6 = inv.S.pow(2) - c(18) * inv.P.pow(2) - c(6) * inv.P * inv.S;
  inv.F12 = inv.S.pow(4) + c(216) * inv.P.pow(3) * inv.S;
  inv.Psi12 = inv.P * inv.S.pow(3) + c(3) * inv.P.pow(2) * inv.S.pow(2) - c(18) * inv.P.pow(3) * inv.S;
  return inv;
}

/// The Hessian data over Q(e), e^6 + e^3 + 1 = 0.
struct HessianData {
  FieldPtr field;
  NFElem epsilon, omega, rho, xi;
  GroupElement S, T, U, V;
  HessianInvariants invariants;
};

inline const HessianData& hessian_data() {
  static const HessianData data = [] {
    HessianData h;
    h.field = NumberField::create("e", {1, 0, 0, 1, 0, 0, 1});
    h.epsilon = NFElem::generator(h.field);
    h.omega = NFElem(-1) - h.epsilon.pow(3);
    h.rho = NFElem(1) / (h.omega - h.omega * h.omega);
    h.xi = -(h.omega * h.omega);
    auto g = detail::hessian_generators(h.omega, h.epsilon);
    h.S = g.S;
    h.T = g.T;
    h.U = g.U;
    h.V = g.V;
    h.invariants = make_hessian_invariants();
    return h;
  }();
  return data;
}

struct HessianGroups {
  MatrixGroup h216, h72, f36;
};

inline std::vector<GroupElement> h216_generators() {
  const auto& h = hessian_data();
  return {h.S, h.T, h.U, h.V};
}

inline std::vector<GroupElement> h72_generators() {
  const auto& h = hessian_data();
  return {h.S, h.T, h.V, h.U * h.V * h.U.inverse()};
}

inline std::vector<GroupElement> f36_generators() {
  const auto& h = hessian_data();
  return {h.S, h.T, h.V};
}

inline HessianGroups build_groups(std::size_t cap = kDefaultClosureCap) {
  return {closure(h216_generators(), cap), closure(h72_generators(), cap), closure(f36_generators(), cap)};
}

inline HPoly hessian_jacobian_determinant() {
  const auto& inv = hessian_data().invariants;
  const HPoly* rows[3] = {&inv.F6, &inv.R, &inv.F12};
  std::vector<std::vector<HPoly>> j(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) j[r].push_back(partial_derivative(*rows[r], c));
  }
  HPoly det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
              j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
  return det;
}

/// 18 (F12 - Phi6^2)^2.
inline HPoly hessian_jacobian_closed_form() {
  const auto& inv = hessian_data().invariants;
  return HPoly(inv.ring, NFElem(18)) * (inv.F12 - inv.Phi6.pow(2)).pow(2);
}

/// det(d(F6, R, F12)/d(X1, X2, X3)) - 18 (F12 - Phi6^2)^2.
inline HPoly check_jacobian_identity() {
  return hessian_jacobian_determinant() - hessian_jacobian_closed_form();
}

enum class Syzygy {
  T36,
  T36Factored,  // the second displayed form of T36, written with xi
  T18,
  T24,          // corrected: Z12^2 - X6^2 (Z12 + 12 X12) - 108 X12^2
  T24AsPrinted  // Z12^2 - X6^2 (Z12 + 12 X12) + 12 X12^2, kept to document the discrepancy
};

inline std::string syzygy_name(Syzygy s) {
  switch (s) {
    case Syzygy::T36: return "T36";
    case Syzygy::T36Factored: return "T36_factored";
    case Syzygy::T18: return "T18";
    case Syzygy::T24: return "T24";
    case Syzygy::T24AsPrinted: return "T24_as_printed";
  }
  return "?";
}

/// Relations live in Q(e)[Z6, X6, Z9, Z12, X12].
inline RingPtr syzygy_ring() {
  static const RingPtr ring = make_ring({"Z6", "X6", "Z9", "Z12", "X12"});
  return ring;
}

inline HPoly syzygy_relation(Syzygy s) {
  const RingPtr& r = syzygy_ring();
  HPoly z6 = HPoly::variable(r, 0), x6 = HPoly::variable(r, 1), z9 = HPoly::variable(r, 2),
        z12 = HPoly::variable(r, 3), x12 = HPoly::variable(r, 4);
  auto c = [&](NFElem v) { return HPoly(r, std::move(v)); };
  HPoly head = c(432) * z9.pow(2) + c(3) * z6 * z12 - z6.pow(3);
  switch (s) {
    case Syzygy::T36:
      return head.pow(2) - c(4) * (x12.pow(3) - c(3) * z12 * x12.pow(2) + c(3) * z12.pow(2) * x12);
    case Syzygy::T36Factored: {
      const NFElem xi = hessian_data().xi;
      const NFElem xi_bar = NFElem(1) / xi;
      return head.pow(2) - c(4) * x12 * (c(xi + NFElem(1)) * z12 - x12) * (c(xi_bar + NFElem(1)) * z12 - x12);
    }
    case Syzygy::T18:
      return c(432) * z9.pow(2) - z6.pow(3) + c(3) * z6 * z12 - c(2) * x6.pow(3) - c(36) * x6 * x12;
    case Syzygy::T24:
      return z12.pow(2) - x6.pow(2) * (z12 + c(12) * x12) - c(108) * x12.pow(2);
    case Syzygy::T24AsPrinted:
      return z12.pow(2) - x6.pow(2) * (z12 + c(12) * x12) + c(12) * x12.pow(2);
  }
  throw Error(ErrorCode::InvalidProblem, "unknown syzygy");
}

/// Relation with Z6->F6, Z9->R, Z12->F12 and X12->Phi6^2 (T36) or X6->Phi6, X12->Psi12.
inline HPoly check_syzygy(Syzygy s) {
  const auto& inv = hessian_data().invariants;
  const bool t36 = s == Syzygy::T36 || s == Syzygy::T36Factored;
  std::vector<HPoly> images{inv.F6, inv.Phi6, inv.R, inv.F12, t36 ? inv.Phi6.pow(2) : inv.Psi12};
  return substitute(syzygy_relation(s), images);
}

/// Both displayed forms of T36 as polynomials in the abstract variables.
inline HPoly check_t36_forms() { return syzygy_relation(Syzygy::T36) - syzygy_relation(Syzygy::T36Factored); }

/// Phi6 = (S + aP)(S + bP) with a, b the roots of t^2 + 6t - 18, over Q(c), c^4 - c^2 + 1 = 0
/// (c a primitive twelfth root of unity, sqrt(3) = 2c - c^3).
struct Phi6Factorization {
  FieldPtr field;
  NFElem a, b;
  HPoly first, second;
  std::vector<NFElem> first_character, second_character;  // on the F36 generators S, T, V
};

inline FieldPtr cyclotomic12_field() {
  static const FieldPtr f = NumberField::create("c", {1, 0, -1, 0, 1});
  return f;
}

/// S, T, V realized over Q(c) with omega = c^4.
inline std::vector<GroupElement> f36_generators_cyclotomic12() {
  const NFElem c = NFElem::generator(cyclotomic12_field());
  auto g = detail::hessian_generators(c.pow(4), std::nullopt);
  return {g.S, g.T, g.V};
}

inline Phi6Factorization factor_phi6_with_roots(NFElem a, NFElem b) {
  if (b < a) std::swap(a, b);
  const auto& inv = hessian_data().invariants;
  Phi6Factorization out;
  out.field = cyclotomic12_field();
  out.a = promote(a, out.field);
  out.b = promote(b, out.field);
  out.first = inv.S + HPoly(inv.ring, out.a) * inv.P;
  out.second = inv.S + HPoly(inv.ring, out.b) * inv.P;
  if (!(out.first * out.second == inv.Phi6)) {
    throw Error(ErrorCode::FactorizationMismatch, "factors do not multiply to Phi6");
  }
  const auto gens = f36_generators_cyclotomic12();
  auto chi1 = semi_invariant_character(out.first, gens);
  auto chi2 = semi_invariant_character(out.second, gens);
  if (!chi1 || !chi2) throw Error(ErrorCode::FactorizationMismatch, "factor is not a semi-invariant");
  out.first_character = std::move(*chi1);
  out.second_character = std::move(*chi2);
  return out;
}

inline Phi6Factorization factor_phi6() {
  const NFElem c = NFElem::generator(cyclotomic12_field());
  const NFElem sqrt3 = NFElem(2) * c - c.pow(3);
  return factor_phi6_with_roots(NFElem(-3) + NFElem(3) * sqrt3, NFElem(-3) - NFElem(3) * sqrt3);
}

enum class ObstructionVerdict { SubgroupF36, NotHypergeometric, Inconclusive };

inline std::string verdict_name(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::SubgroupF36: return "SubgroupF36";
    case ObstructionVerdict::NotHypergeometric: return "NotHypergeometric";
    case ObstructionVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Squarefree factors of odd multiplicity, with the multiplicity.
using OddFactors = std::vector<std::pair<ZPoly, int>>;

inline OddFactors odd_multiplicity_factors(const ZPoly& p) {
  OddFactors out;
  if (p.is_zero()) return out;
  for (const auto& [f, k] : squarefree_decomposition(p).factors) {
    if (k % 2 == 1 && f.degree() > 0) out.emplace_back(f, k);
  }
  return out;
}

struct ObstructionReport {
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
  // keyed by "phi6sq", "phi6sq - (xi+1)*f12", "phi6sq - (xi_bar+1)*f12"
  std::vector<std::pair<std::string, OddFactors>> witnesses;
  ZPoly relation_residual;
};

/// (432 r9^2 + 3 f6 f12 - f6^3)^2 - 4 (phi^3 - 3 f12 phi^2 + 3 f12^2 phi), phi = phi6sq.
inline ZPoly obstruction_relation_residual(const ZPoly& f6, const ZPoly& r9, const ZPoly& f12, const ZPoly& phi) {
  const ZPoly head = NFElem(432) * r9 * r9 + NFElem(3) * f6 * f12 - f6.pow(3);
  return head * head - NFElem(4) * (phi.pow(3) - NFElem(3) * f12 * phi * phi + NFElem(3) * f12 * f12 * phi);
}

class NotOnQuotientCurveError : public Error {
 public:
  NotOnQuotientCurveError(ZPoly residual)
      : Error(ErrorCode::NotOnQuotientCurve, "inputs violate the T36 image relation"), residual_(std::move(residual)) {}
  const ZPoly& residual() const noexcept { return residual_; }

 private:
  ZPoly residual_;
};

/// `xi` is a primitive sixth root of unity in the coefficient field (default: the one in Q(e)).
inline ObstructionReport obstruction_analysis(const ZPoly& f6, const ZPoly& r9, const ZPoly& f12, const ZPoly& phi6sq,
                                              const std::optional<NFElem>& xi_override = std::nullopt) {
  ObstructionReport report;
  report.relation_residual = obstruction_relation_residual(f6, r9, f12, phi6sq);
  if (!report.relation_residual.is_zero()) throw NotOnQuotientCurveError(report.relation_residual);
  if (phi6sq.is_zero()) {
    report.verdict = ObstructionVerdict::SubgroupF36;
    return report;
  }
  const NFElem xi = xi_override ? *xi_override : hessian_data().xi;
  const NFElem xi_bar = NFElem(1) / xi;
  OddFactors odd = odd_multiplicity_factors(phi6sq);
  report.witnesses.emplace_back("phi6sq", odd);
  report.witnesses.emplace_back("phi6sq - (xi+1)*f12", odd_multiplicity_factors(phi6sq - (xi + NFElem(1)) * f12));
  report.witnesses.emplace_back("phi6sq - (xi_bar+1)*f12",
                                odd_multiplicity_factors(phi6sq - (xi_bar + NFElem(1)) * f12));
  if (odd.empty()) {
    report.verdict = ObstructionVerdict::SubgroupF36;
    return report;
  }
  // Every odd zero of phi6sq must be a common zero of f12 and (f12 - phi6sq)^2.
  const ZPoly jacobian = (f12 - phi6sq).pow(2);
  ZPoly odd_part = ZPoly(NFElem(1));
  for (const auto& [f, k] : odd) {
    if (!(f12 % f).is_zero() || !(jacobian % f).is_zero()) return report;
    odd_part = odd_part * f;
  }
  // Certified once some odd zero lies outside {0, 1}: odd_part must not divide z (z - 1).
  const ZPoly z = ZPoly::variable();
  const ZPoly zz1 = z * (z - ZPoly(NFElem(1)));
  if ((zz1 % odd_part).is_zero()) return report;
  report.verdict = ObstructionVerdict::NotHypergeometric;
  return report;
}

}  // namespace schwarz

#endif  // SCHWARZ_HESSIAN_HPP
