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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "expo/classifier.hpp"
#include "expo/fixtures.hpp"
#include "expo/nevanlinna.hpp"
#include "expo/parser.hpp"
#include "expo/riccati.hpp"
#include "test_util.hpp"

namespace {

using namespace expo;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same(const ExpSum& a, const ExpSum& b) { return (a - b).is_zero(1e-9); }

Outcome fixture_certification() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const std::string& name : fixture_names()) {
    const Fixture fx = load_fixture(name);
    const VerificationReport r = verify(fx.params, fx.solution, 1e-9);
    o.require(r.is_solution && r.residual_max <= 1e-9 * r.scale, name + " not certified");
  }
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome binomial_example() {
  Outcome o;
  const Fixture fx = load_fixture("example1");
  const Classification c = classify(fx.params);
  o.require(c.solutions.size() == 3, "expected 3 solutions, got " + std::to_string(c.solutions.size()));
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  const std::vector<std::pair<Complex, Complex>> expected = {{1.0, 1.0}, {w, w * w}, {w * w, w}};
  for (const auto& [e1, e2] : expected) {
    const ExpSum f = ExpSum::exponential(e1, kPi * kI) + ExpSum::exponential(e2, -kPi * kI);
    const auto hits = std::count_if(c.solutions.begin(), c.solutions.end(),
                                    [&](const SolutionCase& s) { return same(s.solution, f); });
    o.require(hits == 1, "missing pair");
  }
  for (const SolutionCase& s : c.solutions) {
    o.require(s.case_label == kBinomialCase, "wrong label");
    o.require(verify(fx.params, s.solution, 1e-9).is_solution, "solution not certified");
  }
  // Brute force: every pair of cube roots, pushed straight through verify.
  std::vector<ExpSum> oracle;
  for (const Complex& e1 : nth_roots(fx.params.p1(), 3)) {
    for (const Complex& e2 : nth_roots(fx.params.p2(), 3)) {
      const ExpSum f = ExpSum::exponential(e1, fx.params.alpha1() / 3.0) +
                       ExpSum::exponential(e2, fx.params.alpha2() / 3.0);
      if (verify(fx.params, f).is_solution) oracle.push_back(f);
    }
  }
  o.require(oracle.size() == c.solutions.size(), "brute force count differs");
  for (const ExpSum& f : oracle) {
    o.require(std::any_of(c.solutions.begin(), c.solutions.end(),
                          [&](const SolutionCase& s) { return same(s.solution, f); }),
              "brute force found " + render(f));
  }
  return o;
}

Outcome monomial_examples() {
  Outcome o;
  const struct {
    const char* fixture;
    const char* label;
    const char* constant;
    Complex freq;
  } cases[] = {{"example2", kMonomialAlpha1Case, "c1", kPi * kI}, {"example3", kMonomialAlpha2Case, "c2", 3.0 * kPi * kI}};
  for (const auto& c : cases) {
    const Fixture fx = load_fixture(c.fixture);
    const Classification cl = classify(fx.params);
    o.require(cl.solutions.size() == 1, std::string(c.fixture) + ": expected one solution");
    if (cl.solutions.size() != 1) continue;
    const SolutionCase& s = cl.solutions[0];
    o.require(s.case_label == c.label, "wrong label");
    o.require(std::abs(s.constants.at(c.constant) - 1.0) <= 1e-9, "constant is not 1");
    o.require(same(s.solution, ExpSum::exponential(1.0, c.freq)), "wrong function");
    o.require(s.max_violation() <= 1e-9, "constraint violation above 1e-9");
  }
  return o;
}

Outcome quadratic_desk_instance() {
  Outcome o;
  const Complex c1 = 1.0, a1 = 2.0 * kPi * kI, a2 = kPi * kI, q = -0.5;
  const Complex p2 = c1 * (std::exp(a1 / 2.0) - 1.0) * q;
  o.require(std::abs(p2 - 1.0) < 1e-12, "hand value of p2");
  const EquationParams params(2, PolyC::constant(q), c1 * c1, p2, a1, a2);
  const Classification cl = classify(params);
  o.require(cl.solutions.size() == 1, "expected one solution");
  if (cl.solutions.size() == 1) {
    const ExpSum f = ExpSum::exponential(c1, a1 / 2.0);
    o.require(same(cl.solutions[0].solution, f), "wrong function");
    o.require(verify(params, cl.solutions[0].solution).is_solution, "not certified");
  }
  return o;
}

Outcome riccati_residues() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  for (int n : {3, 2}) {
    for (int k = 0; k < 20; ++k) {
      const Complex a1 = testing::random_complex(rng, 3.0);
      const Complex a2 = a1 + testing::random_complex(rng, 3.0) + 0.5;
      const RiccatiModel m(n, a1, a2, testing::random_complex(rng, 1.0));
      const ResidueResult r = residue_at_pole(m, 0);
      o.require(std::abs(r.value - 1.0 / n) <= 1e-6, "residue off for n = " + std::to_string(n));
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "took " + std::to_string(dt) + " s");
  return o;
}

Outcome growth_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  const ExpSum f4 = load_fixture("example4").solution;
  const double t = characteristic(f4, 50.0) / 50.0;
  const double n = counting(f4, 50.0).value / 50.0;
  const double m = proximity(parse_expsum("exp(pi*i*z)"), 10.0).value;
  std::ostringstream s;
  s << "T/r=" << t << " N/r=" << n << " m=" << m;
  o.require(t >= 1.9 && t <= 2.1, s.str());
  o.require(n >= 1.9 && n <= 2.1, s.str());
  o.require(m >= 9.99 && m <= 10.01, s.str());
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome binomial_zero_density() {
  Outcome o;
  const Classification c = classify(load_fixture("example1").params);
  o.require(!c.solutions.empty(), "no binomial solutions");
  for (const SolutionCase& s : c.solutions) {
    const double t = characteristic(s.solution, 50.0);
    const double n = counting(s.solution, 50.0).value;
    o.require(std::abs(t - n) <= 0.1 * t, "|T-N|/T too large for " + render(s.solution));
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(8);
  auto close = [](Complex x, Complex y, double ref) { return std::abs(x - y) <= 1e-9 * ref; };

  for (int k = 0; k < 500; ++k) {
    const ExpSum a = testing::random_expsum(rng, 3, 2);
    const ExpSum b = testing::random_expsum(rng, 3, 2);
    const int power = k % 4;
    const ExpSum sum = a + b, prod = a * b, pw = a.pow(power), da = a.derive(), sh = a.shift(1.0),
                 dl = a.delta();
    for (int j = 0; j < 20; ++j) {
      const Complex z = testing::random_point(rng, 2.0);
      const Complex va = a.eval(z), vb = b.eval(z);
      const double ref = 1.0 + std::abs(va) + std::abs(vb);
      o.require(close(sum.eval(z), va + vb, ref), "add homomorphism");
      o.require(close(prod.eval(z), va * vb, ref * ref), "mul homomorphism");
      o.require(close(pw.eval(z), std::pow(va, power), std::pow(ref, power)), "pow homomorphism");
      const Complex vsh = a.eval(z + 1.0);
      o.require(close(sh.eval(z), vsh, ref + std::abs(vsh)), "shift homomorphism");
      o.require(close(dl.eval(z), vsh - va, ref + std::abs(vsh)), "delta homomorphism");
      const double h = 1e-6;
      const Complex fd = (a.eval(z + h) - a.eval(z - h)) / (2.0 * h);
      o.require(std::abs(da.eval(z) - fd) <= 1e-4 * std::max(1.0, std::abs(fd)), "derive homomorphism");
    }
  }
  for (int k = 0; k < 200; ++k) {
    const ExpSum a = testing::random_expsum(rng, 5, 3);
    o.require(!a.empty() && !a.is_zero(kDefaultVerifyTolerance), "Borel independence");
  }
  for (int k = 0; k < 200; ++k) {
    const ExpSum a = testing::random_expsum(rng, 3, 2);
    const ExpSum b = testing::random_expsum(rng, 3, 2);
    o.require((a.shift(1.0).derive() - a.derive().shift(1.0)).is_zero(1e-9), "derive/shift commute");
    const ExpSum lhs = (a * b).delta();
    const ExpSum rhs = a.shift(1.0) * b.delta() + a.delta() * b;
    o.require((lhs - rhs).is_zero(1e-9), "product rule for delta");
  }
  std::vector<double> radii;
  for (int i = 0; i < 10; ++i) radii.push_back(0.5 + 1.5 * i);
  for (int k = 0; k < 20; ++k) {
    const ExpSum f = testing::random_expsum(rng, 3, 1);
    long previous = 0;
    for (double r : radii) {
      const ZeroCount z = zero_count(f, r);
      o.require(z.count >= previous, "zero count decreased");
      o.require(z.nudged || std::abs(z.raw - static_cast<double>(z.count)) <= 1e-3, "winding not integral");
      previous = z.count;
    }
  }
  return o;
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "expo");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

Outcome negative_controls() {
  Outcome o;
  const Classification c = classify(EquationParams(3, PolyC::identity(), 1.0, 1.0, 3.0 * kPi * kI, kPi * kI));
  o.require(!c.q_is_constant && c.solutions.empty(), "nonconstant q produced solutions");
  o.require(run_cli({"classify", "--n", "3", "--q", "1", "--p1", "1", "--p2", "1", "--alpha1", "pi*i",
                     "--alpha2", "pi*i"}) == 2,
            "alpha1 = alpha2 not rejected with exit 2");
  const Classification c4 = classify(load_fixture("example4").params);
  o.require(c4.solutions.empty(), "example4 produced solutions");
  o.require(std::any_of(c4.notes.begin(), c4.notes.end(),
                        [](const std::string& n) { return n.find("N(r,1/f) = S(r,f)") != std::string::npos; }),
            "hypothesis note missing");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"fixture certification", fixture_certification},
      {"binomial classification of example1", binomial_example},
      {"monomial classification of example2/example3", monomial_examples},
      {"quadratic desk instance", quadratic_desk_instance},
      {"Riccati residues", riccati_residues},
      {"growth reproduction", growth_reproduction},
      {"zero density of binomial solutions", binomial_zero_density},
      {"property suites", property_suites},
      {"negative controls", negative_controls},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::printf("%s criterion %zu: %s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
