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

#include <span>
#include <string>
#include <vector>

#include "expo/expsum.hpp"

namespace expo {

struct ProximityResult {
  double value = 0.0;
  int nodes = 0;
  bool converged = false;
  // Non-empty when the node cap was hit before successive estimates agreed.
  std::string warning;
};

inline constexpr int kDefaultProximityNodes = 512;
inline constexpr int kDefaultCountingGrid = 64;

// m(r, f) = (1/2pi) int_0^{2pi} log+ |f(r e^{i theta})| d theta by the
// trapezoid rule, doubling nodes until two successive estimates agree to
// 1e-6 relative or the count passes 2^20. Requires r > 0, nodes >= 256.
ProximityResult proximity(const ExpSum& f, double r, int nodes = kDefaultProximityNodes);

// T(r, f); equals m(r, f) since f is entire.
double characteristic(const ExpSum& f, double r);

struct ZeroCount {
  long count = 0;
  // Winding number before rounding.
  double raw = 0.0;
  // Radius actually used; differs from the request when a zero sat on the
  // circle and the radius was nudged outward by 1e-4 r.
  double radius = 0.0;
  bool nudged = false;
  // Number of arcs after adaptive subdivision.
  long arcs = 0;
};

// Number of zeros of f in |z| < r by the argument principle: the circle is
// split into arcs, each refined until its argument increment is below pi/2
// and consistent with its two halves. Throws Undefined for f == 0.
ZeroCount zero_count(const ExpSum& f, double r);

struct CountingResult {
  double value = 0.0;
  // Set when f(0) ~ 0 forced evaluation of f(z + offset) instead of f.
  bool shifted = false;
  double offset = 0.0;
};

inline constexpr double kCountingShift = 0.1237;

// N(r, 1/f) = sum over zeros |rho| <= r of log(r / |rho|), integrated from
// zero counts on a geometric grid of `grid` radii. Cells whose end counts
// differ are bisected (in log r) until they are narrower than 1e-4.
CountingResult counting(const ExpSum& f, double r, int grid = kDefaultCountingGrid);
// N at each of an increasing sequence of radii, sharing one integration.
std::vector<double> counting_sweep(const ExpSum& f, std::span<const double> radii,
                                   int grid = kDefaultCountingGrid,
                                   CountingResult* info = nullptr);

struct OrderEstimates {
  double order = 0.0;
  double hyper_order = 0.0;
};

// Least-squares slopes over the top half of the radii: order from log T
// against log r, hyper-order from log log T against log r. The hyper-order
// is clamped to 0 when log T is itself linear in log r (finite order).
// Requires >= 8 increasing radii spanning a factor >= 100.
OrderEstimates order_estimates(const ExpSum& f, std::span<const double> radii);
OrderEstimates fit_orders(std::span<const double> radii, std::span<const double> t_vals);

struct CharacteristicProfile {
  std::vector<double> radii;
  std::vector<double> m_vals;
  std::vector<long> n_counts;
  std::vector<double> N_vals;
  std::vector<double> T_vals;
  double order_est = 0.0;
  double hyper_order_est = 0.0;
  std::vector<std::string> notes;
};

// Geometric sweep of `points` radii from r_min to r_max.
CharacteristicProfile characteristic_profile(const ExpSum& f, double r_min, double r_max,
                                             int points, int grid = kDefaultCountingGrid);

}  // namespace expo
