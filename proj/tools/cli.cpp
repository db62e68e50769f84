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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "expo/classifier.hpp"
#include "expo/error.hpp"
#include "expo/fixtures.hpp"
#include "expo/json_io.hpp"
#include "expo/nevanlinna.hpp"
#include "expo/parser.hpp"
#include "expo/riccati.hpp"

namespace expo::cli {
namespace {

using nlohmann::json;

enum class Format { kJson, kText, kCsv };

struct RunConfig {
  double tol_freq = Tolerance{}.freq_rel;
  double tol_coeff = Tolerance{}.coeff_rel;
  double tol_rel = ClassifierOptions{}.tau_rel;
  std::optional<Format> format;
  std::string out_path;

  Tolerance tolerance() const { return {tol_freq, tol_coeff}; }
};

// Where the instance comes from: a fixture name, a JSON file, or flags.
struct InstanceArgs {
  std::string fixture;
  std::string file;
  std::optional<int> n;
  std::string q, p1, p2, alpha1, alpha2;
};

struct Inputs {
  EquationParams params;
  // Known solution when the instance came from a fixture.
  std::optional<std::string> fixture_f;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_instance_options(CLI::App* sub, InstanceArgs& a) {
  sub->add_option("--instance", a.fixture, "bundled fixture name (example1..example4)");
  sub->add_option("--file", a.file, "instance JSON file, '-' for stdin");
  sub->add_option("--n", a.n, "power on f");
  sub->add_option("--q", a.q, "polynomial q(z)");
  sub->add_option("--p1", a.p1, "constant p1");
  sub->add_option("--p2", a.p2, "constant p2");
  sub->add_option("--alpha1", a.alpha1, "frequency alpha1");
  sub->add_option("--alpha2", a.alpha2, "frequency alpha2");
}

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Inputs load_instance(const InstanceArgs& a, const Tolerance& tol) {
  const int sources = !a.fixture.empty() + !a.file.empty() + a.n.has_value();
  if (sources != 1) {
    throw UsageError("give exactly one of --instance, --file, or the --n/--q/--p1/--p2/--alpha1/--alpha2 flags");
  }
  if (!a.fixture.empty()) {
    Fixture fx = load_fixture(a.fixture, tol);
    return {fx.params, fx.f_text};
  }
  if (!a.file.empty()) {
    std::string text;
    if (a.file == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(a.file);
      if (!in) throw UsageError("cannot open instance file " + a.file);
      text = read_all(in);
    }
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("instance file is not valid JSON: ") + e.what());
    }
    return {params_from_json(j, tol), std::nullopt};
  }
  for (const std::string* s : {&a.q, &a.p1, &a.p2, &a.alpha1, &a.alpha2}) {
    if (s->empty()) throw UsageError("--n requires --q, --p1, --p2, --alpha1 and --alpha2");
  }
  json j = {{"n", *a.n}, {"q", a.q}, {"p1", a.p1}, {"p2", a.p2}, {"alpha1", a.alpha1}, {"alpha2", a.alpha2}};
  return {params_from_json(j, tol), std::nullopt};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

int cmd_classify(const RunConfig& cfg, const InstanceArgs& inst, std::ostream& out) {
  const Inputs in = load_instance(inst, cfg.tolerance());
  ClassifierOptions opts;
  opts.tau_rel = cfg.tol_rel;
  const Classification c = classify(in.params, opts);
  if (format_or(cfg, Format::kJson) == Format::kText) {
    out << "q is constant: " << (c.q_is_constant ? "yes" : "no") << '\n';
    out << "solutions: " << c.solutions.size() << '\n';
    for (const SolutionCase& s : c.solutions) {
      out << "  [" << s.case_label << "] f = " << render(s.solution)
          << "  (max violation " << s.max_violation() << ")\n";
    }
    for (const std::string& n : c.notes) out << "note: " << n << '\n';
  } else {
    emit_json(out, classification_to_json(c));
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const InstanceArgs& inst, const std::string& f_text,
               double tau, std::ostream& out) {
  const Inputs in = load_instance(inst, cfg.tolerance());
  std::string text = f_text;
  if (text.empty()) {
    if (!in.fixture_f) throw UsageError("verify needs --f");
    text = *in.fixture_f;
  }
  const ExpSum f = parse_expsum(text, cfg.tolerance());
  const VerificationReport r = verify(in.params, f, tau);
  if (format_or(cfg, Format::kJson) == Format::kText) {
    out << "is_solution: " << (r.is_solution ? "true" : "false") << '\n'
        << "residual_max: " << r.residual_max << '\n'
        << "scale: " << r.scale << '\n'
        << "residual: " << render(r.residual) << '\n';
  } else {
    emit_json(out, report_to_json(r));
  }
  return r.is_solution ? kOk : kNegative;
}

struct CharArgs {
  std::string f;
  std::string fixture;
  double r_min = 1.0;
  double r_max = 50.0;
  int points = 16;
  int grid = kDefaultCountingGrid;
  std::string summary_path;
};

int cmd_char(const RunConfig& cfg, const CharArgs& a, std::ostream& out, std::ostream& err) {
  std::string text = a.f;
  if (!a.fixture.empty()) {
    if (!text.empty()) throw UsageError("give either --f or --instance, not both");
    text = load_fixture(a.fixture, cfg.tolerance()).f_text;
  }
  if (text.empty()) throw UsageError("char needs --f or --instance");
  const ExpSum f = parse_expsum(text, cfg.tolerance());
  const CharacteristicProfile p = characteristic_profile(f, a.r_min, a.r_max, a.points, a.grid);
  json summary = order_summary_json(p);

  const Format fmt = format_or(cfg, Format::kCsv);
  if (fmt == Format::kJson) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
      rows.push_back({{"r", p.radii[i]}, {"m", p.m_vals[i]}, {"n", p.n_counts[i]},
                      {"N", p.N_vals[i]}, {"T", p.T_vals[i]}});
    }
    summary["rows"] = rows;
    summary["notes"] = p.notes;
    emit_json(out, summary);
    return kOk;
  }

  const auto row = [&](std::size_t i, const char* sep) {
    std::ostringstream s;
    s << std::setprecision(12) << p.radii[i] << sep << p.m_vals[i] << sep << p.n_counts[i] << sep
      << p.N_vals[i] << sep << p.T_vals[i];
    return s.str();
  };
  if (fmt == Format::kCsv) {
    out << "r,m,n,N,T\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i) out << row(i, ",") << '\n';
    if (!a.summary_path.empty()) {
      std::ofstream s(a.summary_path);
      if (!s) throw UsageError("cannot write summary file " + a.summary_path);
      emit_json(s, summary);
    } else {
      err << summary.dump() << '\n';
    }
  } else {
    out << "r\tm\tn\tN\tT\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i) out << row(i, "\t") << '\n';
    out << "order: " << p.order_est << "\nhyper_order: " << p.hyper_order_est << '\n';
    for (const std::string& n : p.notes) out << "note: " << n << '\n';
  }
  return kOk;
}

struct RiccatiArgs {
  int n = 3;
  std::string alpha1, alpha2;
  std::string c = "0";
  long pole_index = 0;
};

int cmd_riccati(const RunConfig& cfg, const RiccatiArgs& a, std::ostream& out) {
  const RiccatiModel model(a.n, parse_complex(a.alpha1), parse_complex(a.alpha2), parse_complex(a.c));
  const ResidueResult res = residue_at_pole(model, a.pole_index);
  const double nearest = std::round(res.value.real());
  const bool integral = std::abs(res.value - Complex{nearest}) <= 1e-6 && nearest >= 1.0;
  const json j = riccati_to_json(model, res, !integral);
  if (format_or(cfg, Format::kJson) == Format::kText) {
    out << "t1: " << j["t1"].get<std::string>() << "\nt2: " << j["t2"].get<std::string>()
        << "\nresidue: " << j["residue"].get<std::string>()
        << "\ncontradiction: " << (integral ? "false" : "true") << '\n';
  } else {
    emit_json(out, j);
  }
  return kOk;
}

int cmd_fixtures(const std::string& name, std::ostream& out) {
  const json doc = json::parse(fixtures_json());
  if (name.empty()) {
    emit_json(out, doc);
    return kOk;
  }
  auto it = doc.find(name);
  if (it == doc.end()) throw UsageError("unknown fixture \"" + name + "\"");
  emit_json(out, *it);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"expo: exact entire solutions of f^n + q(z) delta f = p1 e^{a1 z} + p2 e^{a2 z}"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format_name;
  app.add_option("--tol-freq", cfg.tol_freq, "relative frequency merge tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-coeff", cfg.tol_coeff, "relative coefficient drop tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-rel", cfg.tol_rel, "relative tolerance of classifier gates")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");

  InstanceArgs classify_inst;
  auto* classify_cmd = app.add_subcommand("classify", "list every certified exact solution");
  add_instance_options(classify_cmd, classify_inst);

  InstanceArgs verify_inst;
  std::string verify_f;
  double verify_tau = kDefaultVerifyTolerance;
  auto* verify_cmd = app.add_subcommand("verify", "certify a candidate solution by substitution");
  add_instance_options(verify_cmd, verify_inst);
  verify_cmd->add_option("--f", verify_f, "candidate solution");
  verify_cmd->add_option("--tau", verify_tau, "relative residual tolerance")->check(CLI::PositiveNumber);

  CharArgs char_args;
  auto* char_cmd = app.add_subcommand("char", "sample m(r,f), n(r), N(r,1/f), T(r,f) over radii");
  char_cmd->add_option("--f", char_args.f, "exponential polynomial");
  char_cmd->add_option("--instance", char_args.fixture, "use the known solution of a fixture");
  char_cmd->add_option("--r-min", char_args.r_min, "smallest radius")->check(CLI::PositiveNumber);
  char_cmd->add_option("--r-max", char_args.r_max, "largest radius")->check(CLI::PositiveNumber);
  char_cmd->add_option("--points", char_args.points, "number of radii")->check(CLI::Range(2, 100000));
  char_cmd->add_option("--grid", char_args.grid, "counting grid size")->check(CLI::Range(2, 100000));
  char_cmd->add_option("--summary", char_args.summary_path, "write the JSON summary here (csv format)");

  RiccatiArgs ric;
  auto* ric_cmd = app.add_subcommand("riccati", "residue of the non-constant Riccati branch");
  ric_cmd->add_option("--n", ric.n, "power on f")->check(CLI::Range(1, 1000000));
  ric_cmd->add_option("--alpha1", ric.alpha1, "frequency alpha1")->required();
  ric_cmd->add_option("--alpha2", ric.alpha2, "frequency alpha2")->required();
  ric_cmd->add_option("--C", ric.c, "integration constant");
  ric_cmd->add_option("--pole-index", ric.pole_index, "which pole to circle");

  std::string fixture_name;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "print the bundled reference instances");
  fixtures_cmd->add_option("--name", fixture_name, "print only this fixture");

  std::vector<std::string> argv;
  for (std::size_t i = args.size(); i > 1; --i) argv.push_back(args[i - 1]);
  try {
    app.parse(std::move(argv));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (format_name == "json") cfg.format = Format::kJson;
  if (format_name == "text") cfg.format = Format::kText;
  if (format_name == "csv") cfg.format = Format::kCsv;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kInputError;
    }
    sink = &file;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, classify_inst, *sink);
    if (*verify_cmd) return cmd_verify(cfg, verify_inst, verify_f, verify_tau, *sink);
    if (*char_cmd) return cmd_char(cfg, char_args, *sink, err);
    if (*ric_cmd) return cmd_riccati(cfg, ric, *sink);
    if (*fixtures_cmd) return cmd_fixtures(fixture_name, *sink);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace expo::cli
