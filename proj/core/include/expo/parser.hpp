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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "expo/expsum.hpp"

namespace expo {

// Syntax tree of the expression language.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?            right associative
//   atom    := number | imag-number | 'i' | 'pi' | 'e' | 'z'
//            | 'exp' '(' expr ')' | 'sqrt' '(' expr ')' | '(' expr ')'
//
// An imaginary literal is a decimal literal immediately followed by 'i'
// ("2.5i", "1e-3i"); it is a single token, not juxtaposition, which is
// rejected everywhere. There is no division.
struct ExprAst {
  enum class Kind {
    kNumber,
    kImaginaryUnit,
    kPi,
    kEConst,
    kVariableZ,
    kNeg,
    kAdd,
    kSub,
    kMul,
    kPow,
    kExpCall,
    kSqrtCall,
    kParen,
  };

  Kind kind;
  // Byte offset of the token that introduced this node.
  std::size_t offset = 0;
  // Literal value for kNumber (imaginary literals carry a purely
  // imaginary value).
  Complex value{};
  std::vector<ExprAst> children;
};

ExprAst parse_ast(std::string_view text);
// Folds a syntax tree into a canonical exponential sum.
ExpSum fold(const ExprAst& ast, Tolerance tol = {});

ExpSum parse_expsum(std::string_view text, Tolerance tol = {});
// Constant-only subset; non-constant input throws ParseError(kNotConstant).
Complex parse_complex(std::string_view text);
// Polynomial-only subset (no exp with nonzero frequency).
PolyC parse_poly(std::string_view text);

// Canonical rendering, e.g. "(1) * exp((3.141592653589793i)*z)". Monomials
// are emitted as "(c) * z^k * exp((l)*z)"; z^0 and exp((0)*z) factors are
// elided, z^1 is written "z", and the zero sum renders as "0".
std::string render(const ExpSum& a);
std::string render(const PolyC& p);
// "(re+imi)" without the parentheses and with zero parts elided.
std::string render_complex(Complex c);

}  // namespace expo
