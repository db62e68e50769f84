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

#include "expo/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "expo/error.hpp"
#include "expo/parser.hpp"

namespace expo {
namespace {

double rel_gap(Complex a, Complex b) {
  const double ref = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / ref;
}

std::string fmt_gap(double g) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << g;
  return s.str();
}

void add_note(std::vector<std::string>* notes, std::string note) {
  if (notes != nullptr) notes->push_back(std::move(note));
}

// Frequency gate |lhs - rhs| relative to max(1, |lhs|, |rhs|).
struct Gate {
  double gap;
  bool open;
  bool near_miss;
};

Gate check_gate(Complex lhs, Complex rhs, const ClassifierOptions& opts) {
  const double ref = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  const double gap = std::abs(lhs - rhs) / ref;
  return {gap, gap <= opts.tau_rel, gap > opts.tau_rel && gap < opts.near_miss_factor * opts.tau_rel};
}

// Candidates of one monomial family: f = c e^{(own_alpha/n) z}, c^n = own_p,
// c (e^{own_alpha/n} - 1) q = other_p, gated on own_alpha = n other_alpha.
void monomial_family(const EquationParams& params, const ClassifierOptions& opts, bool first,
                     std::vector<SolutionCase>& out, std::vector<std::string>* notes) {
  const int n = params.n();
  const Complex own_alpha = first ? params.alpha1() : params.alpha2();
  const Complex other_alpha = first ? params.alpha2() : params.alpha1();
  const Complex own_p = first ? params.p1() : params.p2();
  const Complex other_p = first ? params.p2() : params.p1();
  const std::string own = first ? "1" : "2";
  const std::string other = first ? "2" : "1";
  const std::string gate_name = "alpha" + own + "=n*alpha" + other;

  const Gate gate = check_gate(own_alpha, static_cast<double>(n) * other_alpha, opts);
  if (gate.near_miss) {
    add_note(notes, "near miss: " + gate_name + " fails by relative gap " + fmt_gap(gate.gap));
  }
  if (!gate.open) return;

  const Complex q = params.q().coeff(0);
  const Complex freq = own_alpha / static_cast<double>(n);
  const Complex factor = (std::exp(freq) - 1.0) * q;
  int rejected = 0;
  for (const Complex& c : nth_roots(own_p, n)) {
    const Complex lhs = c * factor;
    const double viol = rel_gap(lhs, other_p);
    if (viol > opts.tau_rel) continue;
    SolutionCase sc;
    sc.case_label = first ? kMonomialAlpha1Case : kMonomialAlpha2Case;
    sc.solution = ExpSum::exponential(c, freq, params.tolerance());
    sc.constants["c" + own] = c;
    sc.constraints_checked = {
        {"c" + own + "^n=p" + own, rel_gap(std::pow(c, n), own_p)},
        {"c" + own + "(exp(alpha" + own + "/n)-1)q=p" + other, viol},
        {gate_name, gate.gap},
    };
    sc.certificate = verify(params, sc.solution, opts.verify_tau);
    if (!sc.certificate.is_solution) {
      ++rejected;
      continue;
    }
    out.push_back(std::move(sc));
  }
  if (rejected > 0) {
    add_note(notes, std::to_string(rejected) + " monomial candidate(s) satisfying the constraints failed certification");
  }
}

bool same_function(const ExpSum& a, const ExpSum& b, double tau) { return (a - b).is_zero(tau); }

}  // namespace

double SolutionCase::max_violation() const noexcept {
  double m = 0.0;
  for (const ConstraintCheck& c : constraints_checked) m = std::max(m, c.violation);
  return m;
}

std::vector<Complex> nth_roots(Complex w, int n) {
  std::vector<Complex> roots;
  if (n <= 0) return roots;
  const double mag = std::pow(std::abs(w), 1.0 / n);
  const double arg = std::arg(w) / n;
  roots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    roots.push_back(std::polar(mag, arg + 2.0 * std::numbers::pi * k / n));
  }
  return roots;
}

std::vector<SolutionCase> monomial_candidates(const EquationParams& params,
                                              const ClassifierOptions& opts,
                                              std::vector<std::string>* notes) {
  std::vector<SolutionCase> out;
  if (!params.q().is_constant()) {
    add_note(notes, "q must be constant for an entire solution with hyper-order < 1 to exist");
    return out;
  }
  monomial_family(params, opts, true, out, notes);
  monomial_family(params, opts, false, out, notes);
  return out;
}

std::vector<SolutionCase> binomial_candidates(const EquationParams& params,
                                              const ClassifierOptions& opts,
                                              std::vector<std::string>* notes) {
  std::vector<SolutionCase> out;
  if (params.n() != 3) {
    add_note(notes, "binomial solutions exist only for n = 3");
    return out;
  }
  if (!params.q().is_constant()) {
    add_note(notes, "q must be constant for an entire solution with hyper-order < 1 to exist");
    return out;
  }

  const Complex a1 = params.alpha1();
  const Complex a2 = params.alpha2();
  const Gate sum_gate = check_gate(a1, -a2, opts);
  const Complex period = std::exp(a1 / 3.0);
  const double period_gap = std::abs(period + 1.0);
  const Gate period_gate{period_gap, period_gap <= opts.tau_rel,
                         period_gap > opts.tau_rel && period_gap < opts.near_miss_factor * opts.tau_rel};
  if (sum_gate.near_miss) {
    add_note(notes, "near miss: alpha1+alpha2=0 fails by relative gap " + fmt_gap(sum_gate.gap));
  }
  if (period_gate.near_miss) {
    add_note(notes, "near miss: exp(alpha1/3)=-1 fails by " + fmt_gap(period_gate.gap));
  }
  if (!sum_gate.open || !period_gate.open) return out;

  const Complex q = params.q().coeff(0);
  struct Assignment {
    Complex p_first, p_second;
    std::string name_first, name_second;
  };
  std::vector<Assignment> assignments = {{params.p1(), params.p2(), "p1", "p2"}};
  if (rel_gap(params.p1(), params.p2()) > opts.tau_rel) {
    assignments.push_back({params.p2(), params.p1(), "p2", "p1"});
  }

  int rejected = 0;
  for (const Assignment& as : assignments) {
    for (const Complex& e1 : nth_roots(as.p_first, 3)) {
      for (const Complex& e2 : nth_roots(as.p_second, 3)) {
        const double viol = rel_gap(3.0 * e1 * e2, 2.0 * q);
        if (viol > opts.tau_rel) continue;
        SolutionCase sc;
        sc.case_label = kBinomialCase;
        sc.solution = ExpSum::exponential(e1, a1 / 3.0, params.tolerance()) +
                      ExpSum::exponential(e2, a2 / 3.0, params.tolerance());
        sc.constants = {{"e1", e1}, {"e2", e2}};
        sc.constraints_checked = {
            {"e1^3=" + as.name_first, rel_gap(e1 * e1 * e1, as.p_first)},
            {"e2^3=" + as.name_second, rel_gap(e2 * e2 * e2, as.p_second)},
            {"3e1e2-2q=0", viol},
            {"alpha1+alpha2=0", sum_gate.gap},
            {"exp(alpha1/3)=-1", period_gap},
        };
        sc.certificate = verify(params, sc.solution, opts.verify_tau);
        if (!sc.certificate.is_solution) {
          ++rejected;
          continue;
        }
        const bool dup = std::any_of(out.begin(), out.end(), [&](const SolutionCase& o) {
          return same_function(o.solution, sc.solution, opts.verify_tau);
        });
        if (!dup) out.push_back(std::move(sc));
      }
    }
  }
  if (rejected > 0) {
    add_note(notes, std::to_string(rejected) +
                        " binomial candidate(s) satisfying 3e1e2=2q failed certification");
  }
  return out;
}

Classification classify(const EquationParams& params, const ClassifierOptions& opts) {
  Classification out{params, params.q().is_constant(), {}, {}};
  const int n = params.n();
  if (n == 3) {
    out.notes.push_back(
        "n = 3: every entire solution with hyper-order < 1 is c1 e^{alpha1 z/3}, "
        "c2 e^{alpha2 z/3} or e1 e^{alpha1 z/3} + e2 e^{alpha2 z/3}");
    const double ref = std::max({1.0, std::abs(params.alpha1()), std::abs(params.alpha2())});
    if (std::abs(params.alpha1() + params.alpha2()) > opts.tau_rel * ref) {
      out.notes.push_back(
          "alpha1 + alpha2 != 0: zero is a Picard exceptional value of every entire "
          "solution, so only monomial forms can occur");
    }
  } else if (n == 2) {
    out.notes.push_back(
        "n = 2: the monomial forms are exhaustive only among solutions with "
        "N(r,1/f) = S(r,f); solutions with many zeros, such as "
        "-2 - sqrt(2)*exp(pi*i*z) + sqrt(2)*exp(-pi*i*z) for the instance "
        "q = -2, p1 = p2 = 2, alpha1 = -alpha2 = 2*pi*i, lie outside that hypothesis");
  } else {
    out.notes.push_back("n >= 4: every entire solution of finite order is a monomial form");
  }

  if (!out.q_is_constant) {
    out.notes.push_back(
        "q is not constant: no entire solution with hyper-order < 1 exists");
    return out;
  }

  out.solutions = monomial_candidates(params, opts, &out.notes);
  if (n == 3) {
    std::vector<SolutionCase> bin = binomial_candidates(params, opts, &out.notes);
    std::move(bin.begin(), bin.end(), std::back_inserter(out.solutions));
  }
  std::stable_sort(out.solutions.begin(), out.solutions.end(),
                   [](const SolutionCase& a, const SolutionCase& b) {
                     if (a.case_label != b.case_label) return a.case_label < b.case_label;
                     return render(a.solution) < render(b.solution);
                   });
  if (out.solutions.empty()) {
    out.notes.push_back("no solution of the predicted forms satisfies this instance");
  }
  out.notes.push_back(
      "the forms above exhaust all entire solutions " +
      std::string(n >= 4 ? "of finite order" : "with hyper-order < 1") +
      std::string(n == 2 ? " satisfying N(r,1/f) = S(r,f)" : "") +
      "; every listed solution was certified by substitution");
  return out;
}

}  // namespace expo
