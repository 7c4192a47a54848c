// Copyright 2026 The cvtl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace cvtl {

/// One line of the golden table: a reference value, the computed value, and the
/// tolerance implied by how it was quoted.
struct GoldenRow {
  std::string quantity;
  /// As quoted, e.g. "1.32" or "2*sqrt(6)/7".
  std::string quoted;
  double reference = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;

  double delta() const;
  bool pass() const;
};

/// Tolerance for a value quoted with `decimals` digits after the point:
/// five units in the last quoted digit.
double quoted_tolerance(int decimals);

/// Tolerance for exact closed forms.
inline constexpr double kExactTol = 1e-9;

/// Recomputes every reference value through the library. Deterministic.
std::vector<GoldenRow> reproduce_table();

}  // namespace cvtl
