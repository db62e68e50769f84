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

#include "expo/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "expo/error.hpp"
#include "expo/summation.hpp"

namespace expo {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxProximityNodes = 1 << 20;
constexpr double kNearZeroRelative = 1e-10;
constexpr double kMinArc = 1e-7;
constexpr int kMaxNudges = 12;
constexpr double kCellWidth = 1e-4;

double log_plus_at(const ExpSum& f, double r, double theta) {
  return std::max(0.0, f.log_abs(std::polar(r, theta)));
}

// Sum of log+|f| over nodes k*step + offset, k = 0..count-1.
double log_plus_sum(const ExpSum& f, double r, int count, double step, double offset) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] = log_plus_at(f, r, offset + k * step);
  return pairwise_sum<double>(v);
}

struct NearZero {};

// Unit phasor of f at r e^{i theta}; throws NearZero on heavy cancellation.
Complex phasor(const ExpSum& f, double r, double theta) {
  const ScaledValue v = f.eval_scaled(std::polar(r, theta));
  const double a = std::abs(v.mantissa);
  if (!(a > kNearZeroRelative * v.term_mass)) throw NearZero{};
  return v.mantissa / a;
}

double arg_step(Complex from, Complex to) { return std::arg(to * std::conj(from)); }

struct ArcWalker {
  const ExpSum& f;
  double r;
  long arcs = 0;

  double refine(double ta, Complex ua, double tb, Complex ub) {
    const double d = arg_step(ua, ub);
    const double tm = 0.5 * (ta + tb);
    const Complex um = phasor(f, r, tm);
    const double d1 = arg_step(ua, um);
    const double d2 = arg_step(um, ub);
    if (std::abs(d) < 0.5 * kPi && std::abs(d1) < 0.5 * kPi && std::abs(d2) < 0.5 * kPi &&
        std::abs(d1 + d2 - d) < 1e-6) {
      ++arcs;
      return d1 + d2;
    }
    if (r * (tb - ta) < kMinArc) throw NearZero{};
    return refine(ta, ua, tm, um) + refine(tm, um, tb, ub);
  }
};

std::optional<ZeroCount> try_winding(const ExpSum& f, double r) {
  double reach = 0.0;
  int degree = 0;
  for (const ExpTerm& t : f.terms()) {
    reach = std::max(reach, std::abs(t.freq));
    degree = std::max(degree, t.coeff.degree());
  }
  const double want = 64.0 + 8.0 * r * reach + 4.0 * degree;
  const int nodes = static_cast<int>(std::min(want, 1e6));
  try {
    ArcWalker walker{f, r};
    const double step = kTwoPi / nodes;
    const Complex first = phasor(f, r, 0.0);
    Complex prev = first;
    double total = 0.0;
    for (int k = 1; k <= nodes; ++k) {
      const Complex cur = k == nodes ? first : phasor(f, r, k * step);
      total += walker.refine((k - 1) * step, prev, k * step, cur);
      prev = cur;
    }
    ZeroCount out;
    out.raw = total / kTwoPi;
    out.count = std::lround(out.raw);
    out.radius = r;
    out.arcs = walker.arcs;
    return out;
  } catch (const NearZero&) {
    return std::nullopt;
  }
}

double fit_slope(std::span<const double> x, std::span<const double> y, double* rms = nullptr) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  if (rms != nullptr) {
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - (my + slope * (x[i] - mx));
      ss += e * e;
    }
    *rms = std::sqrt(ss / n);
  }
  return slope;
}

class CountingIntegrator {
 public:
  explicit CountingIntegrator(const ExpSum& g) : g_(g) {}

  // int_a^b n(t)/t dt with n(a), n(b) known. n is nondecreasing, so equal
  // end counts mean the count is constant on the whole cell.
  double cell(double a, double b, long na, long nb) {
    const double width = std::log(b / a);
    if (na == nb) return static_cast<double>(na) * width;
    if (width <= kCellWidth) return 0.5 * static_cast<double>(na + nb) * width;
    double m = std::sqrt(a * b);
    const ZeroCount zm = zero_count(g_, m);
    if (zm.radius > a && zm.radius < b) m = zm.radius;
    return cell(a, m, na, zm.count) + cell(m, b, zm.count, nb);
  }

 private:
  const ExpSum& g_;
};

}  // namespace

ProximityResult proximity(const ExpSum& f, double r, int nodes) {
  if (!(r > 0.0)) throw ParameterError("proximity needs r > 0");
  if (nodes < 256) throw ParameterError("proximity needs at least 256 nodes");
  ProximityResult out;
  double sum = log_plus_sum(f, r, nodes, kTwoPi / nodes, 0.0);
  double est = sum / nodes;
  while (true) {
    const int next = 2 * nodes;
    if (next > kMaxProximityNodes) break;
    // The refined grid adds the midpoints of the current one.
    sum += log_plus_sum(f, r, nodes, kTwoPi / nodes, kPi / nodes);
    nodes = next;
    const double refined = sum / nodes;
    const bool agree = std::abs(refined - est) <= 1e-6 * std::abs(refined) ||
                       std::abs(refined - est) <= 1e-300;
    est = refined;
    if (agree) {
      out.converged = true;
      break;
    }
  }
  out.value = est;
  out.nodes = nodes;
  if (!out.converged) {
    out.warning = "proximity quadrature did not reach 1e-6 relative agreement by 2^20 nodes";
  }
  return out;
}

double characteristic(const ExpSum& f, double r) { return proximity(f, r).value; }

ZeroCount zero_count(const ExpSum& f, double r) {
  if (f.empty()) throw Undefined("zero count of the zero function is undefined");
  if (!(r > 0.0)) throw ParameterError("zero count needs r > 0");
  double radius = r;
  for (int attempt = 0; attempt <= kMaxNudges; ++attempt) {
    if (auto wc = try_winding(f, radius)) {
      wc->nudged = attempt > 0;
      return *wc;
    }
    radius += 1e-4 * radius;
  }
  throw Undefined("could not find a zero-free circle near r = " + std::to_string(r));
}

std::vector<double> counting_sweep(const ExpSum& f, std::span<const double> radii, int grid,
                                   CountingResult* info) {
  if (radii.empty()) return {};
  if (grid < 2) throw ParameterError("counting grid needs at least 2 points");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && radii[i] < radii[i - 1])) {
      throw ParameterError("counting radii must be positive and nondecreasing");
    }
  }
  if (f.empty()) throw Undefined("counting function of the zero function is undefined");

  ExpSum g = f;
  CountingResult meta;
  if (std::abs(f.eval(Complex{})) < 1e-12) {
    g = f.shift(Complex{kCountingShift});
    meta.shifted = true;
    meta.offset = kCountingShift;
  }
  if (info != nullptr) *info = meta;

  // Inner radius enclosing no zero at all.
  double r_lo = radii.front() * 1e-3;
  int shrinks = 0;
  while (zero_count(g, r_lo).count > 0) {
    r_lo *= 0.1;
    if (++shrinks > 30) throw Undefined("could not find a zero-free disc around the origin");
  }

  const double r_hi = radii.back();
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(grid) + radii.size());
  const double ratio = std::log(r_hi / r_lo) / (grid - 1);
  for (int k = 0; k < grid; ++k) nodes.push_back(r_lo * std::exp(ratio * k));
  nodes.back() = r_hi;
  nodes.insert(nodes.end(), radii.begin(), radii.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  CountingIntegrator integ(g);
  std::vector<double> out;
  out.reserve(radii.size());
  double acc = 0.0;
  long n_prev = 0;
  std::size_t want = 0;
  for (std::size_t k = 0; k < nodes.size() && want < radii.size(); ++k) {
    const double a = k == 0 ? r_lo : nodes[k - 1];
    const double b = nodes[k];
    const long nb = zero_count(g, b).count;
    if (b > a) acc += integ.cell(a, b, n_prev, nb);
    n_prev = nb;
    while (want < radii.size() && radii[want] == b) {
      out.push_back(acc);
      ++want;
    }
  }
  return out;
}

CountingResult counting(const ExpSum& f, double r, int grid) {
  CountingResult out;
  const double radii[] = {r};
  out.value = counting_sweep(f, radii, grid, &out).front();
  return out;
}

OrderEstimates fit_orders(std::span<const double> radii, std::span<const double> t_vals) {
  std::vector<double> lr, lt, llr, llt;
  for (std::size_t i = radii.size() / 2; i < radii.size(); ++i) {
    if (t_vals[i] > 0.0) {
      lr.push_back(std::log(radii[i]));
      lt.push_back(std::log(t_vals[i]));
    }
    if (t_vals[i] > 1.0) {
      llr.push_back(std::log(radii[i]));
      llt.push_back(std::log(std::log(t_vals[i])));
    }
  }
  OrderEstimates out;
  if (lr.size() < 2) return out;
  double rms = 0.0;
  out.order = std::max(0.0, fit_slope(lr, lt, &rms));
  // log T linear in log r means T is a power of r: finite order, hyper-order 0.
  if (rms > 0.05 && llr.size() >= 2) out.hyper_order = std::max(0.0, fit_slope(llr, llt));
  return out;
}

OrderEstimates order_estimates(const ExpSum& f, std::span<const double> radii) {
  if (radii.size() < 8) throw ParameterError("order estimates need at least 8 radii");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) throw ParameterError("radii must be increasing");
  }
  if (!(radii.front() > 0.0) || radii.back() / radii.front() < 100.0) {
    throw ParameterError("radii must be positive and span a factor of at least 100");
  }
  std::vector<double> t(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) t[i] = characteristic(f, radii[i]);
  return fit_orders(radii, t);
}

CharacteristicProfile characteristic_profile(const ExpSum& f, double r_min, double r_max,
                                             int points, int grid) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) {
    throw ParameterError("profile needs 0 < r_min < r_max and at least 2 points");
  }
  CharacteristicProfile p;
  const double step = std::log(r_max / r_min) / (points - 1);
  for (int k = 0; k < points; ++k) p.radii.push_back(r_min * std::exp(step * k));
  p.radii.back() = r_max;

  for (double r : p.radii) {
    const ProximityResult m = proximity(f, r);
    if (!m.warning.empty()) p.notes.push_back("r = " + std::to_string(r) + ": " + m.warning);
    p.m_vals.push_back(m.value);
    p.T_vals.push_back(m.value);
    if (f.empty()) {
      p.n_counts.push_back(0);
      continue;
    }
    const ZeroCount z = zero_count(f, r);
    if (z.nudged) p.notes.push_back("r = " + std::to_string(r) + ": zero count radius nudged to " +
                                    std::to_string(z.radius));
    p.n_counts.push_back(z.count);
  }
  if (f.empty()) {
    p.N_vals.assign(p.radii.size(), 0.0);
    p.notes.push_back("f is identically zero: counting function undefined, reported as 0");
  } else {
    CountingResult info;
    p.N_vals = counting_sweep(f, p.radii, grid, &info);
    if (info.shifted) {
      p.notes.push_back("f(0) = 0: counting function evaluated for f(z + " +
                        std::to_string(info.offset) + ")");
    }
  }
  const OrderEstimates est = fit_orders(p.radii, p.T_vals);
  p.order_est = est.order;
  p.hyper_order_est = est.hyper_order;
  if (points < 8 || r_max / r_min < 100.0) {
    p.notes.push_back("order estimates need >= 8 radii spanning a factor of 100; values are indicative only");
  }
  return p;
}

}  // namespace expo
