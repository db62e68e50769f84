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

#include <string>

#include "expo/poly.hpp"

namespace expo {

// The Riccati equation t' + n t^2 - (alpha1 + alpha2) t + alpha1 alpha2 / n = 0
// satisfied by t = f'/f, with constant solutions t1 = alpha1/n, t2 = alpha2/n
// and the one-parameter family
//   t(z) = t2 + (t2 - t1) / (e^{n (t2 - t1) z + C} - 1).
class RiccatiModel {
 public:
  // Throws ParameterError when n < 1 or alpha1 == alpha2.
  RiccatiModel(int n, Complex alpha1, Complex alpha2, Complex C = {});

  int n() const noexcept { return n_; }
  Complex alpha1() const noexcept { return alpha1_; }
  Complex alpha2() const noexcept { return alpha2_; }
  Complex t1() const noexcept { return t1_; }
  Complex t2() const noexcept { return t2_; }
  Complex C() const noexcept { return c_; }

  // n (t2 - t1), the rate of the exponential in the general solution.
  Complex rate() const noexcept;
  // z_k = (2 pi i k - C) / (n (t2 - t1)).
  Complex pole(long k) const noexcept;
  // Distance between neighbouring poles, 2 pi / |n (t2 - t1)|.
  double pole_spacing() const noexcept;

 private:
  int n_;
  Complex alpha1_, alpha2_, t1_, t2_, c_;
};

Complex riccati_residual(const RiccatiModel& model, Complex t_value, Complex t_prime);

struct ConstantSolutions {
  Complex t1;
  Complex t2;
};
ConstantSolutions constant_solutions(int n, Complex alpha1, Complex alpha2);

// t(z) on the general family. Throws PoleError (carrying the nearest pole)
// when |e^{n (t2 - t1) z + C} - 1| < 1e-12.
Complex general_solution(const RiccatiModel& model, Complex z);
// Closed-form t'(z) of the general family; same pole rule.
Complex general_solution_derivative(const RiccatiModel& model, Complex z);

struct ResidueOptions {
  // <= 0 selects min(1e-2, half the pole spacing).
  double radius = 0.0;
  int initial_nodes = 4096;
  int max_nodes = 1 << 20;
  // Successive node doublings must agree to this before stopping.
  double agreement = 1e-8;
};

struct ResidueResult {
  Complex value;
  Complex pole;
  double radius = 0.0;
  int nodes = 0;
  bool converged = false;
};

// (1/(2 pi i)) times the contour integral of t around pole_index, by the
// trapezoid rule on a circle. Throws GeometryError if the circle would touch
// a neighbouring pole.
ResidueResult residue_at_pole(const RiccatiModel& model, long pole_index,
                              const ResidueOptions& opts = {});

// Why the non-constant Riccati branch cannot come from an entire f: the
// residue of f'/f at a zero of f must be its multiplicity, a positive
// integer, but the family forces residue 1/n.
struct ContradictionWitness {
  int n = 0;
  Complex residue;
  std::string required;
  std::string conclusion;
  bool contradiction = false;
  bool inconclusive = false;
};

ContradictionWitness contradiction_witness(int n);

}  // namespace expo
