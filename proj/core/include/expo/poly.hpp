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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace expo {

using Complex = std::complex<double>;

// Dense polynomial in z with complex coefficients, lowest power first.
// Trailing exact zeros are always trimmed, so the zero polynomial is the
// empty coefficient sequence.
class PolyC {
 public:
  static constexpr int kMaxDegree = 64;

  PolyC() = default;
  explicit PolyC(std::vector<Complex> coeffs);
  PolyC(std::initializer_list<Complex> coeffs);

  static PolyC constant(Complex c);
  // The polynomial z.
  static PolyC identity();

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  double max_abs() const noexcept;
  double l1_norm() const noexcept;

  Complex operator()(Complex z) const noexcept;

  PolyC derivative() const;
  // p(z + c).
  PolyC shifted(Complex c) const;
  // Zeroes every coefficient with |c| <= threshold, then trims.
  PolyC chopped(double threshold) const;

  PolyC operator-() const;
  friend PolyC operator+(const PolyC& a, const PolyC& b);
  friend PolyC operator-(const PolyC& a, const PolyC& b);
  // Throws DegreeOverflow past kMaxDegree.
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  friend PolyC operator*(Complex s, const PolyC& p);

  friend bool operator==(const PolyC&, const PolyC&) = default;

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

}  // namespace expo
