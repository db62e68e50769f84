// Copyright 2026 The Expo Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expo {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A NaN or infinity was offered to the algebra.
class InvalidScalar : public Error {
 public:
  using Error::Error;
};

// Evaluation overflowed.
class NonFiniteResult : public Error {
 public:
  using Error::Error;
};

// Polynomial degree bound exceeded.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

// Equation parameters violate their invariants (zero constant, alpha1 == alpha2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Syntax errors and unsupported forms from the expression parser. Always
// carries the byte offset into the input where the problem was detected.
class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kUnsupportedForm, kNotConstant, kNotPolynomial };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : Error(message + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

// Evaluation of the Riccati general solution hit a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& message, double nearest_re, double nearest_im)
      : Error(message), nearest_re_(nearest_re), nearest_im_(nearest_im) {}
  double nearest_pole_re() const noexcept { return nearest_re_; }
  double nearest_pole_im() const noexcept { return nearest_im_; }

 private:
  double nearest_re_;
  double nearest_im_;
};

// A contour would touch or enclose a singularity it must avoid.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Quantity undefined for the given input (e.g. winding number of f == 0).
class Undefined : public Error {
 public:
  using Error::Error;
};

}  // namespace expo
