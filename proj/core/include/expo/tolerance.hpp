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

namespace expo {

// Comparison thresholds carried by every ExpSum. Both are relative:
// two frequencies merge when |a - b| <= freq_rel * max(1, |a|, |b|), and a
// coefficient is dropped when |c| <= coeff_rel * scale.
struct Tolerance {
  double freq_rel = 1e-9;
  double coeff_rel = 1e-12;

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

}  // namespace expo
