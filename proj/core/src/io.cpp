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

#include "cvtl/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace cvtl::io {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <int N>
json matrix_json(const Eigen::Matrix<double, N, N>& m) {
  json rows = json::array();
  for (int i = 0; i < N; ++i) {
    json row = json::array();
    for (int j = 0; j < N; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

double number(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw ConfigError(std::string("missing key '") + key + "'");
  }
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string("key '") + key + "' must be a number");
  }
  return v.get<double>();
}

// Accepts [[a, b], [c, d]] or the flat row-major [a, b, c, d].
template <int N>
Eigen::Matrix<double, N, N> matrix_from(const json& j, const char* what) {
  Eigen::Matrix<double, N, N> m;
  auto fail = [&] {
    std::ostringstream os;
    os << what << " must be a " << N << "x" << N
       << " row-major array of numbers";
    throw ConfigError(os.str());
  };
  if (!j.is_array()) fail();
  if (j.size() == static_cast<std::size_t>(N * N) && j.at(0).is_number()) {
    for (int k = 0; k < N * N; ++k) {
      if (!j.at(k).is_number()) fail();
      m(k / N, k % N) = j.at(k).get<double>();
    }
    return m;
  }
  if (j.size() != static_cast<std::size_t>(N)) fail();
  for (int i = 0; i < N; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(N)) fail();
    for (int k = 0; k < N; ++k) {
      if (!row.at(k).is_number()) fail();
      m(i, k) = row.at(k).get<double>();
    }
  }
  return m;
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

json bell_json(const BellInteraction& bell) {
  return std::visit(
      Overloaded{
          [](const BellQnd& q) { return json{{"kind", "qnd"}, {"g_prime", q.g_prime}}; },
          [](const BellBeamSplitter& bs) {
            return json{{"kind", "bs"}, {"T", bs.transmissivity}, {"R", bs.reflectivity}};
          },
          [](const BellGeneric& gen) {
            return json{{"kind", "matrix"}, {"R", matrix_json<4>(gen.matrix.matrix())}};
          },
      },
      bell);
}

json gains_json(const GainPolicy& gains) {
  return std::visit(
      Overloaded{
          [](const UnityGain&) { return json{{"kind", "unity"}}; },
          [](const ScalarGain& s) { return json{{"kind", "scalar"}, {"Gx", s.gx}, {"Gp", s.gp}}; },
          [](const MatrixGain& m) { return json{{"kind", "matrix"}, {"G", matrix_json<2>(m.g)}}; },
      },
      gains);
}

SymplecticMat4 symplectic4_from(const json& j, const char* what) {
  try {
    return SymplecticMat4(matrix_from<4>(j, what), 1e-10);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

BellInteraction bell_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("'bell' must be an object with a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "qnd") return BellQnd{number(j, "g_prime")};
  if (kind == "bs") {
    if (j.contains("g_prime")) return BellBeamSplitter::from_asymmetry(number(j, "g_prime"));
    return BellBeamSplitter{number(j, "T"), number(j, "R")};
  }
  if (kind == "matrix") {
    if (!j.contains("R")) throw ConfigError("matrix Bell interaction needs 'R'");
    return BellGeneric{symplectic4_from(j.at("R"), "bell.R")};
  }
  throw ConfigError("unknown bell kind '" + kind + "' (expected qnd, bs, matrix)");
}

GainPolicy gains_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("'gains' must be an object with a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "unity") return UnityGain{};
  if (kind == "scalar") return ScalarGain{number(j, "Gx"), number(j, "Gp")};
  if (kind == "matrix") {
    if (!j.contains("G")) throw ConfigError("matrix gains need 'G'");
    return MatrixGain{matrix_from<2>(j.at("G"), "gains.G")};
  }
  throw ConfigError("unknown gains kind '" + kind + "' (expected unity, scalar, matrix)");
}

SymplecticMat2 local_op_from(const json& j, const char* what) {
  try {
    return SymplecticMat2(matrix_from<2>(j, what), 1e-10);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

json row_json(const SweepRow& row) {
  const MetricsReport& r = row.report;
  return json{{"g", row.g},
              {"g_prime", row.g_prime},
              {"Gx", r.gx},
              {"Gp", r.gp},
              {"V", r.v},
              {"T", r.t},
              {"F", r.f},
              {"N", r.photon_noise},
              {"flags", flags_string(r.flags)}};
}

json optimum_json(const OptimumResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json out{{"name", r.name},
           {"parameters", std::move(params)},
           {"value", r.value},
           {"method", to_string(r.method)}};
  out["parameter_residual"] = r.parameter_residual ? json(*r.parameter_residual) : json(nullptr);
  out["residual"] = r.value_residual ? json(*r.value_residual) : json(nullptr);
  out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return out;
}

}  // namespace

std::string protocol_config_to_json(const ProtocolConfig& config) {
  const json j{{"g", config.g},
               {"bell", bell_json(config.bell)},
               {"s_a", matrix_json<2>(config.s_a.matrix())},
               {"s_b", matrix_json<2>(config.s_b.matrix())},
               {"gains", gains_json(config.gains)}};
  return j.dump(2);
}

ProtocolConfig protocol_config_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object()) throw ConfigError("protocol config must be a JSON object");
  ProtocolConfig c;
  c.g = number(j, "g");
  if (!j.contains("bell")) throw ConfigError("missing key 'bell'");
  c.bell = bell_from(j.at("bell"));
  if (j.contains("s_a")) c.s_a = local_op_from(j.at("s_a"), "s_a");
  if (j.contains("s_b")) c.s_b = local_op_from(j.at("s_b"), "s_b");
  if (j.contains("gains")) c.gains = gains_from(j.at("gains"));
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  return c;
}

SymplecticMat4 bell_matrix_from_json(std::string_view text) {
  const json j = parse(text);
  if (j.is_object()) {
    if (!j.contains("R")) throw ConfigError("matrix file object needs key 'R'");
    return symplectic4_from(j.at("R"), "R");
  }
  return symplectic4_from(j, "R");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

std::string flags_string(const RegimeFlags& flags) {
  std::string s;
  if (flags.quantum_v) s += 'V';
  if (flags.quantum_t) s += 'T';
  if (flags.quantum_f) s += 'F';
  if (flags.quantum_vt()) s += 'Q';
  return s.empty() ? "-" : s;
}

std::string csv_header() { return "g,g_prime,Gx,Gp,V,T,F,N,flags"; }

std::string csv_row(const SweepRow& row) {
  const MetricsReport& r = row.report;
  std::string s;
  for (double v : {row.g, row.g_prime, r.gx, r.gp, r.v, r.t, r.f, r.photon_noise}) {
    s += format_double(v, 17);
    s += ',';
  }
  s += flags_string(r.flags);
  return s;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out = csv_header() + "\n";
  for (const auto& row : rows) out += csv_row(row) + "\n";
  return out;
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
  json arr = json::array();
  for (const auto& row : rows) arr.push_back(row_json(row));
  return arr.dump(2) + "\n";
}

std::string metrics_to_json(const MetricsReport& r) {
  const json j{{"Gx", r.gx},
               {"Gp", r.gp},
               {"V", r.v},
               {"T", r.t},
               {"F", r.f},
               {"N", r.photon_noise},
               {"flags",
                {{"quantum_V", r.flags.quantum_v},
                 {"quantum_T", r.flags.quantum_t},
                 {"quantum_F", r.flags.quantum_f},
                 {"quantum_VT", r.flags.quantum_vt()}}}};
  return j.dump(2);
}

std::string optimum_to_json(const OptimumResult& result) {
  return optimum_json(result).dump(2);
}

std::string optima_to_json(std::span<const OptimumResult> results) {
  json arr = json::array();
  for (const auto& r : results) arr.push_back(optimum_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace cvtl::io
