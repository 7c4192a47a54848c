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

#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "cvtl/io.hpp"
#include "json.hpp"

namespace cvtl::io {
namespace {

using nlohmann::json;

TEST(ConfigJson, RoundTripQnd) {
  ProtocolConfig c;
  c.g = 1.25;
  c.bell = BellQnd{0.75};
  c.s_a = make_squeezer(0.3);
  c.s_b = make_phase(0.4);
  c.gains = ScalarGain{1.1, 0.6};
  const auto back = protocol_config_from_json(protocol_config_to_json(c));
  EXPECT_EQ(back.g, c.g);
  ASSERT_TRUE(std::holds_alternative<BellQnd>(back.bell));
  EXPECT_EQ(std::get<BellQnd>(back.bell).g_prime, 0.75);
  EXPECT_EQ(back.s_a.matrix(), c.s_a.matrix());
  EXPECT_EQ(back.s_b.matrix(), c.s_b.matrix());
  ASSERT_TRUE(std::holds_alternative<ScalarGain>(back.gains));
  EXPECT_EQ(std::get<ScalarGain>(back.gains).gx, 1.1);
  EXPECT_EQ(std::get<ScalarGain>(back.gains).gp, 0.6);
}

TEST(ConfigJson, RoundTripMatrixVariants) {
  ProtocolConfig c;
  c.g = 0.5;
  c.bell = BellGeneric{make_bell_qnd(1.3)};
  Mat2 gm;
  gm << 1.0, 0.2, -0.1, 0.9;
  c.gains = MatrixGain{gm};
  const auto back = protocol_config_from_json(protocol_config_to_json(c));
  ASSERT_TRUE(std::holds_alternative<BellGeneric>(back.bell));
  EXPECT_EQ(std::get<BellGeneric>(back.bell).matrix.matrix(), make_bell_qnd(1.3).matrix());
  ASSERT_TRUE(std::holds_alternative<MatrixGain>(back.gains));
  EXPECT_EQ(std::get<MatrixGain>(back.gains).g, gm);
}

TEST(ConfigJson, BeamSplitterForms) {
  const auto a = protocol_config_from_json(R"({"g":1,"bell":{"kind":"bs","T":0.6,"R":0.8}})");
  const auto& bs = std::get<BellBeamSplitter>(a.bell);
  EXPECT_EQ(bs.transmissivity, 0.6);
  EXPECT_EQ(bs.reflectivity, 0.8);
  const auto b = protocol_config_from_json(R"({"g":1,"bell":{"kind":"bs","g_prime":2}})");
  const auto& bs2 = std::get<BellBeamSplitter>(b.bell);
  EXPECT_NEAR(bs2.reflectivity / bs2.transmissivity, 2.0, 1e-15);
  EXPECT_NEAR(bs2.reflectivity * bs2.reflectivity + bs2.transmissivity * bs2.transmissivity, 1.0,
              1e-15);
  EXPECT_TRUE(std::holds_alternative<UnityGain>(b.gains));
}

TEST(ConfigJson, Errors) {
  const std::vector<std::string> bad = {
      "not json",
      "[1,2]",
      R"({"bell":{"kind":"qnd","g_prime":1}})",
      R"({"g":"x","bell":{"kind":"qnd","g_prime":1}})",
      R"({"g":1})",
      R"({"g":1,"bell":{"kind":"tele"}})",
      R"({"g":1,"bell":{"kind":"matrix"}})",
      R"({"g":1,"bell":{"kind":"matrix","R":[[1,0],[0,1]]}})",
      R"({"g":1,"bell":{"kind":"matrix","R":[1,0,0,0,0,1,0,0,0,0,2,0,0,0,0,1]}})",
      R"({"g":1,"bell":{"kind":"qnd","g_prime":1},"s_a":[2,0,0,2]})",
      R"({"g":1,"bell":{"kind":"qnd","g_prime":1},"gains":{"kind":"wild"}})",
      R"({"g":1,"bell":{"kind":"qnd","g_prime":1},"gains":{"kind":"matrix"}})",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(protocol_config_from_json(text), ConfigError) << text;
  }
}

TEST(BellMatrixJson, AcceptsBareArrayAndObject) {
  const Mat4 r = make_bell_qnd(0.8).matrix();
  json arr = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) arr.push_back(r(i, j));
  EXPECT_EQ(bell_matrix_from_json(arr.dump()).matrix(), r);
  EXPECT_EQ(bell_matrix_from_json(json{{"R", arr}}.dump()).matrix(), r);
  EXPECT_THROW(bell_matrix_from_json(R"({"Q":[]})"), ConfigError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 2.0 * std::sqrt(6.0) / 7.0, 1e-300, -7.25, 0.0}) {
    const auto s = format_double(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v) << s;
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0, 4), "0.3333");
}

TEST(FormatDouble, SeventeenDigitsRoundTrip) {
  for (double v : {0.1, M_PI, 1.0 / 29.0}) {
    const auto s = format_double(v, 17);
    EXPECT_EQ(std::stod(s), v);
  }
}

TEST(Flags, Letters) {
  EXPECT_EQ(flags_string({}), "-");
  EXPECT_EQ(flags_string({true, false, false}), "V");
  EXPECT_EQ(flags_string({true, true, false}), "VTQ");
  EXPECT_EQ(flags_string({true, true, true}), "VTFQ");
  EXPECT_EQ(flags_string({false, false, true}), "F");
}

std::vector<SweepRow> sample_rows() {
  std::vector<SweepRow> rows;
  for (double gp : {1.0, 4.0 / 3.0}) {
    ProtocolConfig c;
    c.g = 1.0;
    c.bell = BellQnd{gp};
    rows.push_back({1.0, gp, evaluate_metrics(c)});
  }
  return rows;
}

TEST(SweepOutput, CsvAndJsonCarryIdenticalValues) {
  const auto rows = sample_rows();
  const auto csv = sweep_to_csv(rows);
  const auto js = json::parse(sweep_to_json(rows));
  ASSERT_EQ(js.size(), rows.size());

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, csv_header());
  const std::vector<std::string> keys = {"g", "g_prime", "Gx", "Gp", "V", "T", "F", "N"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream cells(line);
    std::string cell;
    for (const auto& k : keys) {
      std::getline(cells, cell, ',');
      EXPECT_EQ(std::stod(cell), js[i][k].get<double>()) << k;
    }
    std::getline(cells, cell, ',');
    EXPECT_EQ(cell, js[i]["flags"].get<std::string>());
  }
  EXPECT_NEAR(js[0]["F"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(js[1]["F"].get<double>(), 2.0 * std::sqrt(6.0) / 7.0, 1e-12);
}

TEST(SweepOutput, EmptySweep) {
  EXPECT_EQ(sweep_to_csv({}), csv_header() + "\n");
  EXPECT_EQ(json::parse(sweep_to_json({})).size(), 0u);
}

TEST(MetricsJson, Fields) {
  const auto rows = sample_rows();
  const auto j = json::parse(metrics_to_json(rows[1].report));
  EXPECT_EQ(j["F"].get<double>(), rows[1].report.f);
  EXPECT_EQ(j["flags"]["quantum_F"].get<bool>(), rows[1].report.flags.quantum_f);
  EXPECT_EQ(j["flags"]["quantum_VT"].get<bool>(), rows[1].report.flags.quantum_vt());
}

TEST(OptimumJson, NullableFields) {
  OptimumResult r;
  r.name = "x";
  r.parameters = {{"a", 1.5}};
  r.value = 2.0;
  auto j = json::parse(optimum_to_json(r));
  EXPECT_EQ(j["method"], "closed_form");
  EXPECT_TRUE(j["residual"].is_null());
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_EQ(j["parameters"]["a"].get<double>(), 1.5);
  r.method = OptimumMethod::kNumericOracle;
  r.value_residual = 1e-9;
  r.seed = 7;
  j = json::parse(optimum_to_json(r));
  EXPECT_EQ(j["residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 7u);
  const std::vector<OptimumResult> both = {r, r};
  EXPECT_EQ(json::parse(optima_to_json(both)).size(), 2u);
}

}  // namespace
}  // namespace cvtl::io
