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

#include <cmath>
#include <numbers>
#include <vector>

#include "expo/error.hpp"
#include "expo/summation.hpp"

namespace expo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleThreshold = 1e-12;

// e^w - 1 without cancellation for small |w|.
Complex expm1c(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// Local expansion of the general family at z:
//   tail = (t2 - t1) / (E - 1)      so t = t2 + tail,
//   dtail = -rate (t2 - t1) E / (E - 1)^2   so t' = dtail.
struct Local {
  Complex tail;
  Complex dtail;
};

Local local(const RiccatiModel& m, Complex z) {
  Complex w = m.rate() * z + m.C();
  const double k = std::round(w.imag() / kTwoPi);
  w -= Complex{0.0, kTwoPi * k};
  const Complex gap = m.t2() - m.t1();
  Local out;
  if (w.real() <= 0.0) {
    const Complex em1 = expm1c(w);  // E - 1
    if (std::abs(em1) < kPoleThreshold) {
      const Complex p = m.pole(static_cast<long>(k));
      throw PoleError("general solution evaluated at a pole", p.real(), p.imag());
    }
    const Complex e = em1 + 1.0;
    out.tail = gap / em1;
    out.dtail = -m.rate() * gap * e / (em1 * em1);
  } else {
    // Large E: rewrite with u = e^{-w} to avoid overflow.
    const Complex u = std::exp(-w);
    const Complex one_minus_u = -expm1c(-w);
    if (std::abs(one_minus_u / u) < kPoleThreshold) {
      const Complex p = m.pole(static_cast<long>(k));
      throw PoleError("general solution evaluated at a pole", p.real(), p.imag());
    }
    out.tail = gap * u / one_minus_u;
    out.dtail = -m.rate() * gap * u / (one_minus_u * one_minus_u);
  }
  return out;
}

Complex trapezoid(const RiccatiModel& model, Complex center, double radius, int nodes) {
  std::vector<Complex> samples(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    const Complex unit = std::polar(1.0, kTwoPi * k / nodes);
    samples[static_cast<std::size_t>(k)] = general_solution(model, center + radius * unit) * radius * unit;
  }
  return pairwise_sum<Complex>(samples) / static_cast<double>(nodes);
}

}  // namespace

RiccatiModel::RiccatiModel(int n, Complex alpha1, Complex alpha2, Complex C)
    : n_(n), alpha1_(alpha1), alpha2_(alpha2), c_(C) {
  if (n_ < 1) throw ParameterError("Riccati model needs n >= 1");
  const double ref = std::max({1.0, std::abs(alpha1), std::abs(alpha2)});
  if (std::abs(alpha1 - alpha2) <= 1e-12 * ref) {
    throw ParameterError("Riccati model needs alpha1 != alpha2");
  }
  t1_ = alpha1_ / static_cast<double>(n_);
  t2_ = alpha2_ / static_cast<double>(n_);
}

Complex RiccatiModel::rate() const noexcept { return static_cast<double>(n_) * (t2_ - t1_); }

Complex RiccatiModel::pole(long k) const noexcept {
  return (Complex{0.0, kTwoPi * static_cast<double>(k)} - c_) / rate();
}

double RiccatiModel::pole_spacing() const noexcept { return kTwoPi / std::abs(rate()); }

Complex riccati_residual(const RiccatiModel& model, Complex t_value, Complex t_prime) {
  const double n = model.n();
  return t_prime + n * t_value * t_value - (model.alpha1() + model.alpha2()) * t_value +
         model.alpha1() * model.alpha2() / n;
}

ConstantSolutions constant_solutions(int n, Complex alpha1, Complex alpha2) {
  const RiccatiModel m(n, alpha1, alpha2);
  return {m.t1(), m.t2()};
}

Complex general_solution(const RiccatiModel& model, Complex z) {
  return model.t2() + local(model, z).tail;
}

Complex general_solution_derivative(const RiccatiModel& model, Complex z) {
  return local(model, z).dtail;
}

ResidueResult residue_at_pole(const RiccatiModel& model, long pole_index,
                              const ResidueOptions& opts) {
  ResidueResult out;
  out.pole = model.pole(pole_index);
  const double spacing = model.pole_spacing();
  out.radius = opts.radius > 0.0 ? opts.radius : std::min(1e-2, 0.5 * spacing);
  if (out.radius >= spacing) {
    throw GeometryError("contour of radius " + std::to_string(out.radius) +
                        " touches a neighbouring pole at distance " + std::to_string(spacing));
  }
  try {
    int nodes = opts.initial_nodes;
    Complex prev = trapezoid(model, out.pole, out.radius, nodes);
    while (true) {
      const int next = 2 * nodes;
      if (next > opts.max_nodes) break;
      const Complex cur = trapezoid(model, out.pole, out.radius, next);
      nodes = next;
      const bool agree = std::abs(cur - prev) <= opts.agreement * std::max(1.0, std::abs(cur));
      prev = cur;
      if (agree) {
        out.converged = true;
        break;
      }
    }
    out.value = prev;
    out.nodes = nodes;
  } catch (const PoleError& e) {
    throw GeometryError(std::string("contour passes through a pole: ") + e.what());
  }
  return out;
}

ContradictionWitness contradiction_witness(int n) {
  if (n < 1) throw ParameterError("contradiction witness needs n >= 1");
  // Canonical model: t1 = 1, t2 = 2.
  const RiccatiModel model(n, Complex{static_cast<double>(n)}, Complex{2.0 * n}, Complex{0.25});
  ContradictionWitness w;
  w.n = n;
  w.residue = residue_at_pole(model, 0).value;
  w.required = "positive integer multiplicity k";
  const double nearest = std::round(w.residue.real());
  const bool integral = std::abs(w.residue - Complex{nearest}) <= 1e-6 && nearest >= 1.0;
  w.contradiction = !integral;
  w.inconclusive = integral;
  w.conclusion = integral ? "inconclusive: the residue is a valid multiplicity"
                          : "non-constant branch impossible";
  return w;
}

}  // namespace expo
