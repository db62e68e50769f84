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

#include <complex>
#include <span>
#include <vector>

#include "expo/poly.hpp"
#include "expo/tolerance.hpp"

namespace expo {

// One summand p(z) e^{freq z}.
struct ExpTerm {
  Complex freq;
  PolyC coeff;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

// Result of evaluating with a common real exponent pulled out:
// f(z) = mantissa * e^{log_shift}. Lets callers work with |f| far beyond
// the double range.
struct ScaledValue {
  Complex mantissa;
  double log_shift = 0.0;
  // Sum of the per-term magnitudes of the mantissa; |mantissa| / term_mass
  // small means heavy cancellation, i.e. z sits near a zero of f.
  double term_mass = 0.0;
};

// Exponential polynomial sum_i p_i(z) e^{l_i z} in canonical form:
//   - frequencies pairwise separated by more than the frequency tolerance,
//   - terms sorted by (Re l, Im l),
//   - no zero coefficient polynomial (the zero function has no terms).
//
// Values are immutable. Every operation returns a fresh canonical value.
// Each value remembers the largest coefficient magnitude that went into
// building it (scale), which anchors is_zero and coefficient dropping.
class ExpSum {
 public:
  ExpSum() = default;

  // Canonicalizes raw terms: merges frequencies within tolerance (merged
  // frequency is the coefficient-magnitude-weighted mean), drops
  // coefficients at or below coeff_rel * scale. Throws InvalidScalar on
  // NaN/inf input.
  static ExpSum normalize(std::vector<ExpTerm> raw, Tolerance tol = {},
                          double scale_hint = 0.0);

  static ExpSum constant(Complex c, Tolerance tol = {});
  static ExpSum exponential(Complex c, Complex freq, Tolerance tol = {});
  static ExpSum polynomial(PolyC p, Tolerance tol = {});

  std::span<const ExpTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Tolerance& tolerance() const noexcept { return tol_; }
  double scale() const noexcept { return scale_; }

  // True when the sum has at most one term and that term has frequency 0.
  bool is_polynomial() const noexcept;
  // The coefficient polynomial of frequency 0 (zero if absent).
  PolyC polynomial_part() const;

  double max_coeff_magnitude() const noexcept;
  // Every coefficient magnitude <= tau * max(1, scale). By Borel's theorem
  // on the linear independence of distinct exponentials, this is the
  // identically-zero test for a canonical sum.
  bool is_zero(double tau) const noexcept;

  // Throws NonFiniteResult on overflow.
  Complex eval(Complex z) const;
  ScaledValue eval_scaled(Complex z) const noexcept;
  // log|f(z)|, -inf at an exact zero. Never overflows.
  double log_abs(Complex z) const noexcept;

  ExpSum derive() const;
  // f(z + c).
  ExpSum shift(Complex c) const;
  // f(z + 1) - f(z).
  ExpSum delta() const;
  ExpSum pow(unsigned k) const;
  ExpSum with_tolerance(Tolerance tol) const;

  ExpSum operator-() const;
  friend ExpSum operator+(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator-(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(Complex s, const ExpSum& a);

  // Structural equality of canonical forms (bitwise frequencies and
  // coefficients). Use is_zero of the difference for numerical equality.
  friend bool operator==(const ExpSum& a, const ExpSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<ExpTerm> terms_;
  Tolerance tol_;
  double scale_ = 0.0;
};

// Named forms of the operators for call sites that read better that way.
inline ExpSum add(const ExpSum& a, const ExpSum& b) { return a + b; }
inline ExpSum mul(const ExpSum& a, const ExpSum& b) { return a * b; }
inline ExpSum pow(const ExpSum& a, unsigned k) { return a.pow(k); }
inline ExpSum derive(const ExpSum& a) { return a.derive(); }
inline ExpSum shift(const ExpSum& a, Complex c) { return a.shift(c); }
inline ExpSum delta(const ExpSum& a) { return a.delta(); }

}  // namespace expo
