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

#include "expo/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expo/error.hpp"

namespace expo {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool freq_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool freq_close(Complex a, Complex b, double freq_rel) {
  const double ref = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= freq_rel * ref;
}

Tolerance combine(const Tolerance& a, const Tolerance& b) {
  return {std::max(a.freq_rel, b.freq_rel), std::max(a.coeff_rel, b.coeff_rel)};
}

struct Cluster {
  Complex freq;
  PolyC coeff;
  // Weighted frequency accumulator; only consulted once a second term joins.
  Complex weighted_freq;
  double weight = 0.0;
  int members = 0;
};

// One merge pass over terms sorted by frequency. Returns true if anything merged.
bool merge_pass(std::vector<ExpTerm>& terms, double freq_rel) {
  std::vector<Cluster> clusters;
  bool merged = false;
  for (ExpTerm& t : terms) {
    const double w = t.coeff.l1_norm();
    auto hit = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      return freq_close(c.freq, t.freq, freq_rel);
    });
    if (hit == clusters.end()) {
      clusters.push_back({t.freq, std::move(t.coeff), w * t.freq, w, 1});
      continue;
    }
    merged = true;
    hit->coeff = hit->coeff + t.coeff;
    hit->weighted_freq += w * t.freq;
    hit->weight += w;
    ++hit->members;
    hit->freq = hit->weight > 0.0 ? hit->weighted_freq / hit->weight : hit->freq;
  }
  terms.clear();
  for (Cluster& c : clusters) terms.push_back({c.freq, std::move(c.coeff)});
  std::sort(terms.begin(), terms.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return freq_less(a.freq, b.freq); });
  return merged;
}

}  // namespace

ExpSum ExpSum::normalize(std::vector<ExpTerm> raw, Tolerance tol, double scale_hint) {
  double scale = std::max(0.0, scale_hint);
  for (const ExpTerm& t : raw) {
    if (!finite(t.freq)) throw InvalidScalar("non-finite frequency");
    for (const Complex& c : t.coeff.coeffs()) {
      if (!finite(c)) throw InvalidScalar("non-finite coefficient");
    }
    scale = std::max(scale, t.coeff.max_abs());
  }

  std::sort(raw.begin(), raw.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return freq_less(a.freq, b.freq); });
  // Weighted means can drift two clusters into range of each other, so
  // repeat until a pass merges nothing.
  while (merge_pass(raw, tol.freq_rel)) {
  }

  const double threshold = tol.coeff_rel * scale;
  std::vector<ExpTerm> kept;
  kept.reserve(raw.size());
  for (ExpTerm& t : raw) {
    PolyC c = t.coeff.chopped(threshold);
    if (!c.is_zero()) kept.push_back({t.freq, std::move(c)});
  }

  ExpSum out;
  out.terms_ = std::move(kept);
  out.tol_ = tol;
  out.scale_ = scale;
  return out;
}

ExpSum ExpSum::constant(Complex c, Tolerance tol) { return polynomial(PolyC::constant(c), tol); }

ExpSum ExpSum::exponential(Complex c, Complex freq, Tolerance tol) {
  return normalize({{freq, PolyC::constant(c)}}, tol);
}

ExpSum ExpSum::polynomial(PolyC p, Tolerance tol) {
  return normalize({{Complex{}, std::move(p)}}, tol);
}

bool ExpSum::is_polynomial() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && std::abs(terms_[0].freq) <= tol_.freq_rel);
}

PolyC ExpSum::polynomial_part() const {
  for (const ExpTerm& t : terms_) {
    if (std::abs(t.freq) <= tol_.freq_rel) return t.coeff;
  }
  return {};
}

double ExpSum::max_coeff_magnitude() const noexcept {
  double m = 0.0;
  for (const ExpTerm& t : terms_) m = std::max(m, t.coeff.max_abs());
  return m;
}

bool ExpSum::is_zero(double tau) const noexcept {
  return max_coeff_magnitude() <= tau * std::max(1.0, scale_);
}

Complex ExpSum::eval(Complex z) const {
  Complex acc{};
  for (const ExpTerm& t : terms_) acc += t.coeff(z) * std::exp(t.freq * z);
  if (!finite(acc)) throw NonFiniteResult("exponential sum overflowed during evaluation");
  return acc;
}

ScaledValue ExpSum::eval_scaled(Complex z) const noexcept {
  ScaledValue out;
  if (terms_.empty()) return out;
  double shift = -std::numeric_limits<double>::infinity();
  for (const ExpTerm& t : terms_) shift = std::max(shift, (t.freq * z).real());
  out.log_shift = shift;
  for (const ExpTerm& t : terms_) {
    const Complex v = t.coeff(z) * std::exp(t.freq * z - shift);
    out.mantissa += v;
    out.term_mass += std::abs(v);
  }
  return out;
}

double ExpSum::log_abs(Complex z) const noexcept {
  const ScaledValue v = eval_scaled(z);
  const double a = std::abs(v.mantissa);
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return v.log_shift + std::log(a);
}

ExpSum ExpSum::derive() const {
  std::vector<ExpTerm> raw;
  raw.reserve(terms_.size());
  for (const ExpTerm& t : terms_) raw.push_back({t.freq, t.coeff.derivative() + t.freq * t.coeff});
  return normalize(std::move(raw), tol_, scale_);
}

ExpSum ExpSum::shift(Complex c) const {
  std::vector<ExpTerm> raw;
  raw.reserve(terms_.size());
  for (const ExpTerm& t : terms_) {
    raw.push_back({t.freq, std::exp(t.freq * c) * t.coeff.shifted(c)});
  }
  return normalize(std::move(raw), tol_, scale_);
}

ExpSum ExpSum::delta() const { return shift(Complex{1.0}) - *this; }

ExpSum ExpSum::pow(unsigned k) const {
  ExpSum acc = constant(Complex{1.0}, tol_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

ExpSum ExpSum::with_tolerance(Tolerance tol) const {
  return normalize(terms_, tol, scale_);
}

ExpSum ExpSum::operator-() const {
  ExpSum out = *this;
  for (ExpTerm& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ExpSum operator+(const ExpSum& a, const ExpSum& b) {
  std::vector<ExpTerm> raw(a.terms_.begin(), a.terms_.end());
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return ExpSum::normalize(std::move(raw), combine(a.tol_, b.tol_),
                           std::max(a.scale_, b.scale_));
}

ExpSum operator-(const ExpSum& a, const ExpSum& b) { return a + (-b); }

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  std::vector<ExpTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const ExpTerm& x : a.terms_) {
    for (const ExpTerm& y : b.terms_) raw.push_back({x.freq + y.freq, x.coeff * y.coeff});
  }
  return ExpSum::normalize(std::move(raw), combine(a.tol_, b.tol_),
                           std::max(a.scale_, b.scale_));
}

ExpSum operator*(Complex s, const ExpSum& a) {
  std::vector<ExpTerm> raw;
  raw.reserve(a.terms_.size());
  for (const ExpTerm& t : a.terms_) raw.push_back({t.freq, s * t.coeff});
  return ExpSum::normalize(std::move(raw), a.tol_, a.scale_);
}

}  // namespace expo
