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

#include <string>
#include <string_view>
#include <vector>

#include "expo/equation.hpp"

namespace expo {

// Bundled reference instances with a known exact solution each.
struct Fixture {
  std::string name;
  std::string description;
  EquationParams params;
  std::string f_text;
  ExpSum solution;
};

// The raw bundled fixtures document (data/fixtures.json at build time).
std::string_view fixtures_json();
std::vector<std::string> fixture_names();
// Throws ParameterError for an unknown name.
Fixture load_fixture(std::string_view name, Tolerance tol = {});

}  // namespace expo
