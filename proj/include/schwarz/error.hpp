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

#ifndef SCHWARZ_ERROR_HPP
#define SCHWARZ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace schwarz {

/// Every failure the engine can report. The enumerator order is part of the
/// CLI contract: exit_status() derives the process exit code from it.
enum class ErrorCode {
  DivisionByZero,
  ZeroDivisor,
  ZeroPolynomial,
  ArityMismatch,
  FieldMismatch,
  NotZeroDimensional,
  NotInvertible,
  SingularMatrixModI,
  GroupTooLarge,
  SingularGenerator,
  JacobianNotInvertible,
  InconsistentIdeal,
  CurveInHyperplane,
  InvariantLeakage,
  FactorizationMismatch,
  NotOnQuotientCurve,
  SyntaxError,
  UnknownIdentifier,
  NegativeExponent,
  NotAPolynomial,
  InvalidProblem,
  IoError,
};

constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::SingularMatrixModI: return "SingularMatrixModI";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::JacobianNotInvertible: return "JacobianNotInvertible";
    case ErrorCode::InconsistentIdeal: return "InconsistentIdeal";
    case ErrorCode::CurveInHyperplane: return "CurveInHyperplane";
    case ErrorCode::InvariantLeakage: return "InvariantLeakage";
    case ErrorCode::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorCode::NotOnQuotientCurve: return "NotOnQuotientCurve";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Process exit status used by the CLI for a library error (0 is success,
/// 1 is reserved for failed checks, 2 for usage errors).
constexpr int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by inversion modulo an ideal when the element is a zero divisor.
/// The witness w satisfies NF(p * w) = 0 with NF(w) != 0.
template <class Witness>
class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(Witness witness, const std::string& message)
      : Error(ErrorCode::ZeroDivisor, message), witness_(std::move(witness)) {}

  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace schwarz

#endif  // SCHWARZ_ERROR_HPP
