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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expo/equation.hpp"

namespace expo {

// Labels of the solution families the classifier can certify.
inline constexpr const char* kBinomialCase = "Binomial-T1.1-(1)";
inline constexpr const char* kMonomialAlpha1Case = "Monomial-α1=nα2";
inline constexpr const char* kMonomialAlpha2Case = "Monomial-α2=nα1";

struct ConstraintCheck {
  std::string name;
  double violation = 0.0;
};

struct SolutionCase {
  std::string case_label;
  ExpSum solution;
  std::map<std::string, Complex> constants;
  std::vector<ConstraintCheck> constraints_checked;
  VerificationReport certificate;

  double max_violation() const noexcept;
};

struct Classification {
  EquationParams params;
  bool q_is_constant = false;
  std::vector<SolutionCase> solutions;
  std::vector<std::string> notes;
};

struct ClassifierOptions {
  // Relative tolerance for the frequency gates and constant constraints.
  double tau_rel = 1e-8;
  // Gates failing by less than near_miss_factor * tau_rel are reported.
  double near_miss_factor = 1e3;
  double verify_tau = kDefaultVerifyTolerance;
};

// All n complex n-th roots of w, principal root first, then counterclockwise.
std::vector<Complex> nth_roots(Complex w, int n);

// f = c e^{(alpha1/n) z} with c^n = p1, c (e^{alpha1/n} - 1) q = p2 when
// alpha1 = n alpha2, and the mirror family with the roles swapped. Each
// emitted case is certified by substitution. Notes explain empty results.
std::vector<SolutionCase> monomial_candidates(const EquationParams& params,
                                              const ClassifierOptions& opts,
                                              std::vector<std::string>* notes = nullptr);

// n = 3 only: f = e1 e^{(alpha1/3) z} + e2 e^{(alpha2/3) z} with e1^3, e2^3
// drawn from {p1, p2} (both attachments), 3 e1 e2 = 2q, alpha1 + alpha2 = 0
// and e^{alpha1/3} = -1.
std::vector<SolutionCase> binomial_candidates(const EquationParams& params,
                                              const ClassifierOptions& opts,
                                              std::vector<std::string>* notes = nullptr);

Classification classify(const EquationParams& params, const ClassifierOptions& opts = {});

}  // namespace expo
