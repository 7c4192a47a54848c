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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvtl/io.hpp"
#include "cvtl/symplectic.hpp"

namespace cvtl::cli {

enum ExitCode : int { kExitOk = 0, kExitNumeric = 1, kExitUsage = 2 };

/// Comma-separated list whose items are decimals, fractions "a/b", or linear
/// ranges "start:stop:count". Throws std::invalid_argument.
std::vector<double> parse_grid(std::string_view text);

enum class BellKind { kQnd, kBeamSplitter, kMatrix };
enum class GainMode { kUnity, kMinV, kMaxT, kScalar };
enum class LocalOpsMode { kNone, kImproved, kOptimal };
enum class Format { kCsv, kJson };

struct SweepSpec {
  std::vector<double> g{1.0};
  std::vector<double> g_prime{1.0};
  BellKind bell = BellKind::kQnd;
  std::optional<SymplecticMat4> matrix;
  GainMode gains = GainMode::kUnity;
  double gx = 1.0;
  double gp = 1.0;
  LocalOpsMode local_ops = LocalOpsMode::kNone;
  Format format = Format::kCsv;
  std::string out;

  /// Throws io::ConfigError on empty grids, non-positive values where they
  /// are required, or incompatible policy combinations.
  void validate() const;
};

/// JSON form of SweepSpec (see docs/config_schema.md). Throws io::ConfigError.
SweepSpec sweep_spec_from_json(std::string_view text);

/// One row per grid point, g outer and g' inner. With a matrix Bell
/// interaction the g' grid is not used and g_prime is NaN.
std::vector<io::SweepRow> run_sweep(const SweepSpec& spec);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvtl::cli
