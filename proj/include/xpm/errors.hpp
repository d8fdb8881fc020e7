// Copyright 2026 The xpmsim Authors
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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace xpm {

/// A parameter is outside the domain an operation accepts.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for this kind of object (e.g. pointwise
/// evaluation of an exact delta kernel).
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Quadrature failed to converge. Carries the last estimate and the
/// difference between the final two refinement levels.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::complex<double> partial, double residual)
      : std::runtime_error(what), partial_(partial), residual_(residual) {}

  std::complex<double> partial() const { return partial_; }
  double residual() const { return residual_; }

 private:
  std::complex<double> partial_;
  double residual_;
};

/// An analytically impossible state was reached (e.g. a coherent-state
/// overlap exponent with positive real part).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xpm
