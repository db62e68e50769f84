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

#include "expo/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "expo/error.hpp"

namespace expo {
namespace {

void check_degree(std::size_t size) {
  if (size > static_cast<std::size_t>(PolyC::kMaxDegree) + 1) {
    throw DegreeOverflow("polynomial degree " + std::to_string(size - 1) +
                         " exceeds bound " + std::to_string(PolyC::kMaxDegree));
  }
}

}  // namespace

PolyC::PolyC(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
  check_degree(coeffs_.size());
}

PolyC::PolyC(std::initializer_list<Complex> coeffs)
    : PolyC(std::vector<Complex>(coeffs)) {}

PolyC PolyC::constant(Complex c) { return PolyC({c}); }

PolyC PolyC::identity() { return PolyC({Complex{0.0}, Complex{1.0}}); }

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

double PolyC::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double PolyC::l1_norm() const noexcept {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::abs(c);
  return s;
}

Complex PolyC::operator()(Complex z) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolyC PolyC::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PolyC(std::move(d));
}

PolyC PolyC::shifted(Complex c) const {
  // Horner in the basis (z + c): acc <- acc * (z + c) + a_k.
  std::vector<Complex> acc;
  acc.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.push_back(Complex{});
    for (std::size_t j = acc.size() - 1; j > 0; --j) {
      acc[j] = acc[j - 1] + c * acc[j];
    }
    acc[0] = c * acc[0] + *it;
  }
  return PolyC(std::move(acc));
}

PolyC PolyC::chopped(double threshold) const {
  std::vector<Complex> out = coeffs_;
  for (Complex& c : out) {
    if (std::abs(c) <= threshold) c = Complex{};
  }
  return PolyC(std::move(out));
}

PolyC PolyC::operator-() const {
  std::vector<Complex> out = coeffs_;
  for (Complex& c : out) c = -c;
  return PolyC(std::move(out));
}

PolyC operator+(const PolyC& a, const PolyC& b) {
  std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return PolyC(std::move(out));
}

PolyC operator-(const PolyC& a, const PolyC& b) { return a + (-b); }

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_degree(a.coeffs_.size() + b.coeffs_.size() - 1);
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyC(std::move(out));
}

PolyC operator*(Complex s, const PolyC& p) {
  std::vector<Complex> out = p.coeffs_;
  for (Complex& c : out) c *= s;
  return PolyC(std::move(out));
}

}  // namespace expo
