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

#include <nlohmann/json.hpp>

#include "expo/classifier.hpp"
#include "expo/equation.hpp"
#include "expo/nevanlinna.hpp"
#include "expo/riccati.hpp"

namespace expo {

// Instance schema:
//   {"n": int, "q": expr, "p1": expr, "p2": expr, "alpha1": expr, "alpha2": expr}
// with expr strings in the expression language. Unknown keys are ignored.
// Throws ParseError for bad expressions and ParameterError for missing keys
// or invalid values.
EquationParams params_from_json(const nlohmann::json& j, Tolerance tol = {});
nlohmann::json params_to_json(const EquationParams& p);

// {"q_is_constant", "solutions": [{"case", "f", "constants", "max_violation"}], "notes"}
nlohmann::json classification_to_json(const Classification& c);
// {"is_solution", "residual_max", "scale", "tolerance", "residual"}
nlohmann::json report_to_json(const VerificationReport& r);
// {"t1", "t2", "residue", "contradiction"}
nlohmann::json riccati_to_json(const RiccatiModel& m, const ResidueResult& residue,
                               bool contradiction);
// {"order", "hyper_order"}
nlohmann::json order_summary_json(const CharacteristicProfile& p);

}  // namespace expo
