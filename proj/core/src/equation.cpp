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

#include "expo/equation.hpp"

#include <algorithm>
#include <cmath>

#include "expo/error.hpp"

namespace expo {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

EquationParams::EquationParams(int n, PolyC q, Complex p1, Complex p2, Complex alpha1,
                               Complex alpha2, Tolerance tol)
    : n_(n), q_(std::move(q)), p1_(p1), p2_(p2), alpha1_(alpha1), alpha2_(alpha2), tol_(tol) {
  if (n_ < 2) throw ParameterError("n must be at least 2");
  if (q_.is_zero()) throw ParameterError("q must not be the zero polynomial");
  for (Complex c : {p1_, p2_, alpha1_, alpha2_}) {
    if (!finite(c)) throw ParameterError("constants must be finite");
  }
  for (Complex c : q_.coeffs()) {
    if (!finite(c)) throw ParameterError("q must have finite coefficients");
  }
  if (p1_ == Complex{}) throw ParameterError("p1 must be nonzero");
  if (p2_ == Complex{}) throw ParameterError("p2 must be nonzero");
  if (alpha1_ == Complex{}) throw ParameterError("alpha1 must be nonzero");
  if (alpha2_ == Complex{}) throw ParameterError("alpha2 must be nonzero");
  const double ref = std::max({1.0, std::abs(alpha1_), std::abs(alpha2_)});
  if (std::abs(alpha1_ - alpha2_) <= tol_.freq_rel * ref) {
    throw ParameterError("alpha1 and alpha2 must be distinct");
  }
}

ExpSum EquationParams::rhs() const {
  return ExpSum::exponential(p1_, alpha1_, tol_) + ExpSum::exponential(p2_, alpha2_, tol_);
}

ExpSum residual(const EquationParams& params, const ExpSum& f) {
  const ExpSum g = f.with_tolerance(params.tolerance());
  const ExpSum q = ExpSum::polynomial(params.q(), params.tolerance());
  return g.pow(static_cast<unsigned>(params.n())) + q * g.delta() - params.rhs();
}

VerificationReport verify(const EquationParams& params, const ExpSum& f, double tau) {
  VerificationReport report;
  const ExpSum g = f.with_tolerance(params.tolerance());
  report.scale = std::max({std::abs(params.p1()), std::abs(params.p2()),
                           g.pow(static_cast<unsigned>(params.n())).max_coeff_magnitude()});
  report.tolerance = tau;
  report.residual = residual(params, g);
  report.residual_max = report.residual.max_coeff_magnitude();
  report.is_solution = report.residual_max <= tau * report.scale;
  return report;
}

}  // namespace expo
