// Copyright 2026 The wronsk Authors
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

#ifndef WRONSK_ERRORS_HPP
#define WRONSK_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wronsk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class UnsupportedShiftOfPrincipalPart : public Error {
 public:
  UnsupportedShiftOfPrincipalPart()
      : Error("t -> t + a with a != 0 is not closed on Laurent polynomials with negative exponents") {}
};

class PoleEvaluation : public Error {
 public:
  using Error::Error;
};

struct ParseDiagnostic {
  std::size_t offset = 0;
  std::string message;
  std::vector<std::string> expected;
  /// Index of the curve component the error occurred in, if any.
  std::optional<std::size_t> component;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diag);
  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }

 private:
  ParseDiagnostic diag_;
};

class NonLinearDenominatorFactor : public ParseError {
 public:
  using ParseError::ParseError;
};

class RepeatedExponent : public Error {
 public:
  RepeatedExponent() : Error("exponents must be pairwise distinct") {}
  using Error::Error;
};

class LinearlyDependent : public Error {
 public:
  LinearlyDependent() : Error("the functions are linearly dependent") {}
  using Error::Error;
};

/// Two reduced members are nonzero constants; certifies linear dependence.
class TwoConstants : public LinearlyDependent {
 public:
  using LinearlyDependent::LinearlyDependent;
};

class NotPolynomial : public Error {
 public:
  NotPolynomial() : Error("expected polynomials without negative exponents") {}
  using Error::Error;
};

/// Internal consistency failure. Seeing this means a bug.
class BasisExpressionFailed : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
  using Error::Error;
};

class ExponentSumViolation : public Error {
 public:
  using Error::Error;
};

class ZeroWronskian : public Error {
 public:
  ZeroWronskian() : Error("the Wronskian is identically zero") {}
  using Error::Error;
};

class HodographVanishes : public Error {
 public:
  HodographVanishes() : Error("every component of the hodograph is zero") {}
  using Error::Error;
};

class ZeroNumerator : public Error {
 public:
  ZeroNumerator() : Error("the invariant numerator is identically zero") {}
  using Error::Error;
};

class NoPoles : public Error {
 public:
  NoPoles() : Error("the family has no poles") {}
  using Error::Error;
};

class NotEnoughPoles : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidCurve : public Error {
 public:
  using Error::Error;
};

}  // namespace wronsk

#endif  // WRONSK_ERRORS_HPP
