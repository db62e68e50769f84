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
#include <random>
#include <vector>

#include "expo/expsum.hpp"

namespace expo::testing {

inline Complex random_complex(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

// Point in the disc |z| <= radius.
inline Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> r(0.0, 1.0);
  std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
  return std::polar(radius * std::sqrt(r(rng)), t(rng));
}

inline PolyC random_poly(std::mt19937_64& rng, int max_degree, double radius = 1.0) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Complex> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (Complex& x : c) x = random_complex(rng, radius);
  return PolyC(std::move(c));
}

// Random canonical sum with well separated frequencies of modulus <= 2.
inline ExpSum random_expsum(std::mt19937_64& rng, int max_terms = 4, int max_degree = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<ExpTerm> raw;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Complex freq;
    bool fresh = false;
    while (!fresh) {
      freq = random_complex(rng, 1.4);
      fresh = true;
      for (const ExpTerm& t : raw) fresh = fresh && std::abs(t.freq - freq) > 0.05;
    }
    PolyC p;
    while (p.is_zero() || p.max_abs() < 0.05) p = random_poly(rng, max_degree);
    raw.push_back({freq, p});
  }
  return ExpSum::normalize(std::move(raw));
}

// Brute-force evaluation of sum_i p_i(z) e^{l_i z} straight from the terms.
inline Complex direct_eval(const ExpSum& f, Complex z) {
  Complex acc{};
  for (const ExpTerm& t : f.terms()) {
    Complex p{};
    Complex zk{1.0};
    for (const Complex& c : t.coeff.coeffs()) {
      p += c * zk;
      zk *= z;
    }
    acc += p * std::exp(t.freq * z);
  }
  return acc;
}

}  // namespace expo::testing
