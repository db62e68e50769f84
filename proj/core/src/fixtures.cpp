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

#include "expo/fixtures.hpp"

#include <nlohmann/json.hpp>

#include "expo/error.hpp"
#include "expo/json_io.hpp"
#include "expo/parser.hpp"
#include "fixtures_data.hpp"

namespace expo {

std::string_view fixtures_json() { return kFixturesJson; }

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : nlohmann::json::parse(kFixturesJson).items()) names.push_back(name);
  return names;
}

Fixture load_fixture(std::string_view name, Tolerance tol) {
  const auto doc = nlohmann::json::parse(kFixturesJson);
  auto it = doc.find(std::string(name));
  if (it == doc.end()) throw ParameterError("unknown fixture \"" + std::string(name) + "\"");
  const std::string f_text = it->at("f").get<std::string>();
  return Fixture{std::string(name), it->value("description", ""), params_from_json(*it, tol),
                 f_text, parse_expsum(f_text, tol)};
}

}  // namespace expo
