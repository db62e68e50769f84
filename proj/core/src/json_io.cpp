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

#include "expo/json_io.hpp"

#include "expo/error.hpp"
#include "expo/parser.hpp"

namespace expo {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParameterError("instance must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParameterError(std::string("instance is missing \"") + key + "\"");
  return *it;
}

std::string expr_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw ParameterError(std::string("\"") + key + "\" must be an expression string");
}

Complex scalar(const json& j, const char* key) {
  try {
    return parse_complex(expr_field(j, key));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.offset(), std::string("in \"") + key + "\": " + e.what());
  }
}

}  // namespace

EquationParams params_from_json(const json& j, Tolerance tol) {
  const json& n = field(j, "n");
  if (!n.is_number_integer()) throw ParameterError("\"n\" must be an integer");
  PolyC q;
  try {
    q = parse_poly(expr_field(j, "q"));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.offset(), std::string("in \"q\": ") + e.what());
  }
  return EquationParams(n.get<int>(), std::move(q), scalar(j, "p1"), scalar(j, "p2"),
                        scalar(j, "alpha1"), scalar(j, "alpha2"), tol);
}

json params_to_json(const EquationParams& p) {
  return {{"n", p.n()},
          {"q", render(p.q())},
          {"p1", render_complex(p.p1())},
          {"p2", render_complex(p.p2())},
          {"alpha1", render_complex(p.alpha1())},
          {"alpha2", render_complex(p.alpha2())}};
}

json classification_to_json(const Classification& c) {
  json solutions = json::array();
  for (const SolutionCase& s : c.solutions) {
    json constants = json::object();
    for (const auto& [name, value] : s.constants) constants[name] = render_complex(value);
    solutions.push_back({{"case", s.case_label},
                         {"f", render(s.solution)},
                         {"constants", constants},
                         {"max_violation", s.max_violation()}});
  }
  return {{"q_is_constant", c.q_is_constant}, {"solutions", solutions}, {"notes", c.notes}};
}

json report_to_json(const VerificationReport& r) {
  return {{"is_solution", r.is_solution},
          {"residual_max", r.residual_max},
          {"scale", r.scale},
          {"tolerance", r.tolerance},
          {"residual", render(r.residual)}};
}

json riccati_to_json(const RiccatiModel& m, const ResidueResult& residue, bool contradiction) {
  return {{"t1", render_complex(m.t1())},
          {"t2", render_complex(m.t2())},
          {"residue", render_complex(residue.value)},
          {"contradiction", contradiction}};
}

json order_summary_json(const CharacteristicProfile& p) {
  return {{"order", p.order_est}, {"hyper_order", p.hyper_order_est}};
}

}  // namespace expo
