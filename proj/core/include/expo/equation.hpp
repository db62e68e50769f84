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

#include "expo/expsum.hpp"

namespace expo {

// One instance of f^n + q(z) (f(z+1) - f(z)) = p1 e^{alpha1 z} + p2 e^{alpha2 z}.
class EquationParams {
 public:
  // Throws ParameterError unless n >= 2, q != 0, p1, p2, alpha1, alpha2 are
  // nonzero and |alpha1 - alpha2| exceeds the frequency tolerance.
  EquationParams(int n, PolyC q, Complex p1, Complex p2, Complex alpha1, Complex alpha2,
                 Tolerance tol = {});

  int n() const noexcept { return n_; }
  const PolyC& q() const noexcept { return q_; }
  Complex p1() const noexcept { return p1_; }
  Complex p2() const noexcept { return p2_; }
  Complex alpha1() const noexcept { return alpha1_; }
  Complex alpha2() const noexcept { return alpha2_; }
  const Tolerance& tolerance() const noexcept { return tol_; }

  // p1 e^{alpha1 z} + p2 e^{alpha2 z}.
  ExpSum rhs() const;

 private:
  int n_;
  PolyC q_;
  Complex p1_, p2_, alpha1_, alpha2_;
  Tolerance tol_;
};

struct VerificationReport {
  bool is_solution = false;
  // Largest coefficient magnitude of the residual.
  double residual_max = 0.0;
  // Reference magnitude: max(|p1|, |p2|, largest coefficient of f^n).
  double scale = 0.0;
  // The relative tolerance that was applied; is_solution iff
  // residual_max <= tolerance * scale.
  double tolerance = 0.0;
  ExpSum residual;
};

inline constexpr double kDefaultVerifyTolerance = 1e-9;

// f^n + q delta(f) - p1 e^{alpha1 z} - p2 e^{alpha2 z}.
ExpSum residual(const EquationParams& params, const ExpSum& f);

VerificationReport verify(const EquationParams& params, const ExpSum& f,
                          double tau = kDefaultVerifyTolerance);

}  // namespace expo
