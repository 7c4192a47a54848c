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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cvtl/metrics.hpp"
#include "cvtl/optimize.hpp"
#include "cvtl/protocol.hpp"

namespace cvtl::io {

/// Malformed or semantically invalid JSON input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// ProtocolConfig as JSON (schema in docs/config_schema.md). Matrices are
/// nested row-major arrays.
std::string protocol_config_to_json(const ProtocolConfig& config);

/// Parses and validates a ProtocolConfig document. Missing s_a / s_b default
/// to the identity and missing gains to unity. Throws ConfigError.
ProtocolConfig protocol_config_from_json(std::string_view text);

/// 4x4 interaction matrix from either a bare nested array or an object with
/// key "R". Throws ConfigError if the matrix is malformed or not symplectic.
SymplecticMat4 bell_matrix_from_json(std::string_view text);

/// Shortest decimal that round-trips, '.' separator regardless of locale.
std::string format_double(double v);
/// Fixed number of significant digits, locale independent.
std::string format_double(double v, int significant_digits);

/// "VTFQ" subset: V < 1/4, T > 1, F > 1/2, and Q when both V and T hold.
/// "-" when no flag is set.
std::string flags_string(const RegimeFlags& flags);

struct SweepRow {
  double g = 0.0;
  double g_prime = 0.0;
  MetricsReport report;
};

/// g,g_prime,Gx,Gp,V,T,F,N,flags
std::string csv_header();
std::string csv_row(const SweepRow& row);
std::string sweep_to_csv(std::span<const SweepRow> rows);
std::string sweep_to_json(std::span<const SweepRow> rows);

std::string metrics_to_json(const MetricsReport& report);

std::string optimum_to_json(const OptimumResult& result);
std::string optima_to_json(std::span<const OptimumResult> results);

}  // namespace cvtl::io
