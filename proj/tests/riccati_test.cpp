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

#include "expo/riccati.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "expo/error.hpp"
#include "expo/expsum.hpp"
#include "test_util.hpp"

namespace expo {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(RiccatiModelTest, Validation) {
  EXPECT_THROW(RiccatiModel(0, 1.0, 2.0), ParameterError);
  EXPECT_THROW(RiccatiModel(3, 2.0, 2.0), ParameterError);
  const RiccatiModel m(3, 3.0, 6.0);
  EXPECT_EQ(m.t1(), Complex(1.0));
  EXPECT_EQ(m.t2(), Complex(2.0));
  EXPECT_EQ(m.rate(), Complex(3.0));
  EXPECT_NEAR(m.pole_spacing(), 2.0 * kPi / 3.0, 1e-15);
}

TEST(RiccatiResidualTest, Examples) {
  const RiccatiModel m(3, 3.0, 6.0);
  // 0 + 0 - 0 + alpha1 alpha2 / n.
  EXPECT_NEAR(std::abs(riccati_residual(m, 0.0, 0.0) - 6.0), 0.0, 1e-15);
  // t = 1: 3 - 9 + 6 = 0.
  EXPECT_NEAR(std::abs(riccati_residual(m, 1.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(riccati_residual(m, 1.0, 2.5) - 2.5), 0.0, 1e-15);
}

TEST(ConstantSolutionsProperty, RootsOfTheQuadratic) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const Complex a1 = testing::random_complex(rng, 7.0);
    Complex a2 = testing::random_complex(rng, 7.0);
    if (std::abs(a1 - a2) < 1e-3) a2 += 1.0;
    const RiccatiModel m(n, a1, a2);
    const ConstantSolutions s = constant_solutions(n, a1, a2);
    const double ref = std::max({1.0, std::norm(a1), std::norm(a2)});
    EXPECT_LE(std::abs(riccati_residual(m, s.t1, 0.0)), 1e-12 * ref);
    EXPECT_LE(std::abs(riccati_residual(m, s.t2, 0.0)), 1e-12 * ref);
  }
}

TEST(GeneralSolutionTest, ClosedFormValues) {
  // C = ln 2 at z = 0: E = 2, t = t2 + (t2 - t1) = 2 t2 - t1.
  const RiccatiModel m(3, 3.0, 6.0, std::log(2.0));
  EXPECT_NEAR(std::abs(general_solution(m, 0.0) - 3.0), 0.0, 1e-14);
  // Re(rate z) -> +inf drives t to t2.
  EXPECT_NEAR(std::abs(general_solution(m, 20.0) - 2.0), 0.0, 1e-12);
  // Re(rate z) -> -inf drives t to t1.
  EXPECT_NEAR(std::abs(general_solution(m, -20.0) - 1.0), 0.0, 1e-12);
}

TEST(GeneralSolutionProperty, SatisfiesTheEquation) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 2;
    const Complex a1 = testing::random_complex(rng, 2.0);
    const Complex a2 = a1 + testing::random_complex(rng, 2.0) + 0.3;
    const RiccatiModel m(n, a1, a2, testing::random_complex(rng, 1.0));
    for (int j = 0; j < 20; ++j) {
      const Complex z = testing::random_point(rng, 1.0);
      const Complex zk = m.pole(std::lround(((m.rate() * z + m.C()) / Complex{0.0, 2.0 * kPi}).real()));
      if (std::abs(z - zk) < 0.05 * m.pole_spacing()) continue;
      const Complex t = general_solution(m, z);
      const Complex dt = general_solution_derivative(m, z);
      const double h = 1e-7;
      const Complex fd = (general_solution(m, z + h) - general_solution(m, z - h)) / (2.0 * h);
      const double ref = std::max({1.0, std::abs(dt), n * std::norm(t)});
      EXPECT_LE(std::abs(fd - dt), 1e-6 * ref);
      EXPECT_LE(std::abs(riccati_residual(m, t, fd)), 1e-6 * ref);
    }
  }
}

TEST(GeneralSolutionTest, PoleCarriesLocation) {
  const RiccatiModel m(3, 3.0, 6.0, 0.25);
  const Complex zk = m.pole(2);
  try {
    general_solution(m, zk);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_NEAR(e.nearest_pole_re(), zk.real(), 1e-12);
    EXPECT_NEAR(e.nearest_pole_im(), zk.imag(), 1e-12);
  }
}

TEST(ResidueProperty, ReciprocalOfN) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 20; ++k) {
    for (int n : {2, 3}) {
      const Complex a1 = testing::random_complex(rng, 3.0);
      const Complex a2 = a1 + testing::random_complex(rng, 3.0) + 0.5;
      const RiccatiModel m(n, a1, a2, testing::random_complex(rng, 1.0));
      const ResidueResult r = residue_at_pole(m, k % 5 - 2);
      EXPECT_TRUE(r.converged);
      EXPECT_NEAR(std::abs(r.value - 1.0 / n), 0.0, 1e-6);
    }
  }
}

TEST(ResidueTest, RadiusTooLarge) {
  const RiccatiModel m(3, 3.0, 6.0);
  ResidueOptions opts;
  opts.radius = m.pole_spacing() * 1.01;
  EXPECT_THROW(residue_at_pole(m, 0, opts), GeometryError);
}

TEST(WitnessTest, SmallExponents) {
  const ContradictionWitness w1 = contradiction_witness(1);
  EXPECT_TRUE(w1.inconclusive);
  EXPECT_FALSE(w1.contradiction);
  EXPECT_NEAR(std::abs(w1.residue - 1.0), 0.0, 1e-8);
  for (int n : {2, 3}) {
    const ContradictionWitness w = contradiction_witness(n);
    EXPECT_TRUE(w.contradiction) << n;
    EXPECT_FALSE(w.inconclusive);
    EXPECT_NEAR(std::abs(w.residue - 1.0 / n), 0.0, 1e-8);
    EXPECT_FALSE(w.conclusion.empty());
  }
}

TEST(MonomialLinkTest, LogDerivativeIsAConstantSolution) {
  // f = c e^{alpha1 z / n} gives f'/f = alpha1 / n = t1.
  const int n = 3;
  const Complex a1{0.0, 3.0 * kPi}, a2{0.0, kPi};
  const ExpSum f = ExpSum::exponential(Complex{0.7, -0.2}, a1 / 3.0);
  const ExpSum df = f.derive();
  const RiccatiModel m(n, a1, a2);
  for (Complex z : {Complex{0.3, 0.1}, Complex{-1.0, 0.5}}) {
    const Complex t = df.eval(z) / f.eval(z);
    EXPECT_NEAR(std::abs(t - m.t1()), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(riccati_residual(m, t, 0.0)), 0.0, 1e-10);
  }
}

}  // namespace
}  // namespace expo
