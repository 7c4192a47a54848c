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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvtl/symplectic.hpp"

namespace cvtl::check {

enum class ToleranceProfile { kDefault, kStrict };

/// Parses "default" / "strict"; nullopt otherwise.
std::optional<ToleranceProfile> parse_profile(std::string_view name);

/// CVTL_TOL overrides `fallback` when set to a valid profile name.
/// Throws std::invalid_argument if CVTL_TOL holds anything else.
ToleranceProfile profile_from_env(ToleranceProfile fallback);

struct Tolerances {
  double symplectic = 1e-12;
  double decomposition = 1e-10;
  double standard_form_pattern = 1e-8;
  double pipeline = 1e-12;
  double closed_form = 1e-10;
  double oracle_parameter = 1e-4;
  double oracle_value = 1e-6;
  double local_ops_oracle = 1e-5;
  double stationarity = 1e-6;
  double isotropy = 1e-10;
  double minimality = 1e-9;

  /// Strict tightens every tolerance by 1e-2.
  static Tolerances for_profile(ToleranceProfile p);
};

/// Raw-matrix constructors exercised by the symplectic-condition invariant.
/// Replaceable so a corrupted constructor can be injected.
struct Constructors {
  std::function<Mat2(double)> squeezer = [](double r) { return make_squeezer(r).matrix(); };
  std::function<Mat2(double)> phase = [](double u) { return make_phase(u).matrix(); };
  std::function<Mat4(double)> qnd = [](double g) { return make_qnd(g).matrix(); };
  std::function<Mat4(double)> bell_qnd = [](double g) { return make_bell_qnd(g).matrix(); };
  std::function<Mat4(double, double)> beamsplitter = [](double t, double r) {
    return make_beamsplitter(t, r).matrix();
  };
};

struct Outcome {
  /// "<module>.<invariant>"
  std::string id;
  bool passed = false;
  /// Worst observed deviation and the tolerance it was held to.
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  ToleranceProfile profile = ToleranceProfile::kDefault;
  std::uint64_t seed = 0;
  std::vector<Outcome> outcomes;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

struct Options {
  ToleranceProfile profile = ToleranceProfile::kDefault;
  std::uint64_t seed = 20050101;
  Constructors constructors;
};

/// Runs every module invariant. Exceptions inside an invariant are recorded as
/// failures, never propagated.
Report run_invariant_suite(const Options& opts = {});

}  // namespace cvtl::check
