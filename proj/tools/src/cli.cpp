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

#include "cvtl/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cvtl/check.hpp"
#include "cvtl/errors.hpp"
#include "cvtl/metrics.hpp"
#include "cvtl/optimize.hpp"
#include "cvtl/protocol.hpp"
#include "cvtl/reproduce.hpp"

namespace cvtl::cli {
namespace {

using nlohmann::json;
using io::ConfigError;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(s.substr(0, slash));
    const double den = parse_number(s.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return num / den;
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

void append_item(std::string_view item, std::vector<double>& out) {
  item = trim(item);
  if (item.empty()) throw std::invalid_argument("empty grid item");
  const auto c1 = item.find(':');
  if (c1 == std::string_view::npos) {
    out.push_back(parse_number(item));
    return;
  }
  const auto c2 = item.find(':', c1 + 1);
  if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("range must be start:stop:count, got '" + std::string(item) + "'");
  }
  const double start = parse_number(item.substr(0, c1));
  const double stop = parse_number(item.substr(c1 + 1, c2 - c1 - 1));
  const double count = parse_number(item.substr(c2 + 1));
  if (count < 1 || count != std::floor(count) || count > 1e6) {
    throw std::invalid_argument("range count must be a positive integer, got '" +
                                std::string(item) + "'");
  }
  const int n = static_cast<int>(count);
  for (int i = 0; i < n; ++i) {
    out.push_back(n == 1 ? start : start + (stop - start) * i / (n - 1));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class E>
E parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, E>> table,
             const char* what) {
  std::string allowed;
  for (const auto& [name, value] : table) {
    if (text == name) return value;
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  throw ConfigError(std::string(what) + " must be one of {" + allowed + "}, got '" + text + "'");
}

BellKind parse_bell(const std::string& s) {
  return parse_enum<BellKind>(
      s, {{"qnd", BellKind::kQnd}, {"bs", BellKind::kBeamSplitter}, {"matrix", BellKind::kMatrix},
          {"matrix-file", BellKind::kMatrix}},
      "bell");
}

GainMode parse_gains(const std::string& s) {
  return parse_enum<GainMode>(s,
                              {{"unity", GainMode::kUnity},
                               {"minv", GainMode::kMinV},
                               {"maxt", GainMode::kMaxT},
                               {"scalar", GainMode::kScalar}},
                              "gains");
}

LocalOpsMode parse_local_ops(const std::string& s) {
  return parse_enum<LocalOpsMode>(s,
                                  {{"none", LocalOpsMode::kNone},
                                   {"improved", LocalOpsMode::kImproved},
                                   {"optimal", LocalOpsMode::kOptimal},
                                   {"optimal_general", LocalOpsMode::kOptimal}},
                                  "local-ops");
}

Format parse_format(const std::string& s) {
  return parse_enum<Format>(s, {{"csv", Format::kCsv}, {"json", Format::kJson}}, "format");
}

std::vector<double> grid_from_json(const json& j, const char* key) {
  if (j.is_string()) {
    try {
      return parse_grid(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  }
  if (!j.is_array()) throw ConfigError(std::string(key) + " must be an array or grid string");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) throw ConfigError(std::string(key) + " entries must be numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw ConfigError("cannot write '" + path + "'");
}

double bell_asymmetry(const BellInteraction& bell) {
  if (const auto* q = std::get_if<BellQnd>(&bell)) return q->g_prime;
  if (const auto* b = std::get_if<BellBeamSplitter>(&bell)) {
    return b->reflectivity / b->transmissivity;
  }
  return kNaN;
}

// Shared state of the subcommands, bound to CLI11 options.
struct Args {
  std::string g;
  std::string g_prime;
  std::string bell = "qnd";
  std::string matrix_file;
  std::string gains = "unity";
  double gx = 1.0;
  double gp = 1.0;
  std::string local_ops = "none";
  std::string format;
  std::string out;
  std::string config;
  std::uint64_t seed = 20050101;
  std::string profile;
  std::string target = "all";
  std::string fault;
};

check::ToleranceProfile resolve_profile(const Args& a) {
  if (!a.profile.empty()) {
    const auto p = check::parse_profile(a.profile);
    if (!p) throw ConfigError("profile must be 'default' or 'strict', got '" + a.profile + "'");
    return *p;
  }
  try {
    return check::profile_from_env(check::ToleranceProfile::kDefault);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int cmd_reproduce(const Args& a, std::ostream& out) {
  const auto rows = reproduce_table();
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass();
  std::ostringstream s;
  const std::string fmt = a.format.empty() ? "table" : a.format;
  if (fmt == "table") {
    std::size_t width = 8;
    std::size_t qwidth = 6;
    for (const auto& r : rows) {
      width = std::max(width, r.quantity.size());
      qwidth = std::max(qwidth, r.quoted.size());
    }
    s << std::left << std::setw(static_cast<int>(width)) << "quantity" << "  "
      << std::setw(static_cast<int>(qwidth)) << "quoted" << "  " << std::setw(16) << "computed" << "  " << std::setw(16) << "|delta|"
      << "  " << std::setw(10) << "tolerance" << "  result\n";
    for (const auto& r : rows) {
      s << std::setw(static_cast<int>(width)) << r.quantity << "  "
        << std::setw(static_cast<int>(qwidth)) << r.quoted
        << "  " << std::setw(16) << io::format_double(r.computed, 9) << "  " << std::setw(16)
        << io::format_double(r.delta(), 9) << "  " << std::setw(10)
        << io::format_double(r.tolerance, 9) << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    int passed = 0;
    for (const auto& r : rows) passed += r.pass() ? 1 : 0;
    s << passed << "/" << rows.size() << " rows pass\n";
  } else if (fmt == "csv") {
    s << "quantity,quoted,reference,computed,delta,tolerance,pass\n";
    for (const auto& r : rows) {
      s << '"' << r.quantity << "\"," << '"' << r.quoted << "\","
        << io::format_double(r.reference, 17) << ',' << io::format_double(r.computed, 17) << ','
        << io::format_double(r.delta(), 17) << ',' << io::format_double(r.tolerance, 17) << ','
        << (r.pass() ? "true" : "false") << "\n";
    }
  } else if (fmt == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"quantity", r.quantity},
                   {"quoted", r.quoted},
                   {"reference", r.reference},
                   {"computed", r.computed},
                   {"delta", r.delta()},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass()}});
    }
    s << j.dump(2) << "\n";
  } else {
    throw ConfigError("reproduce format must be table, csv or json, got '" + fmt + "'");
  }
  emit(s.str(), a.out, out);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_sweep(const Args& a, const CLI::App& sub, std::ostream& out) {
  const bool has_config = !a.config.empty();
  SweepSpec spec;
  std::optional<ProtocolConfig> single;
  if (has_config) {
    const std::string text = read_file(a.config);
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(a.config + ": " + e.what());
    }
    if (j.is_object() && j.contains("bell") && j.at("bell").is_object()) {
      single = io::protocol_config_from_json(text);
      for (const char* flag : {"--g", "--g-prime", "--bell", "--matrix-file", "--gains", "--gx",
                               "--gp", "--local-ops"}) {
        if (sub.count(flag) > 0) {
          throw ConfigError(std::string(flag) + " cannot be combined with a ProtocolConfig file");
        }
      }
    } else {
      spec = sweep_spec_from_json(text);
    }
  }
  if (!single) {
    try {
      if (sub.count("--g") > 0) spec.g = parse_grid(a.g);
      if (sub.count("--g-prime") > 0) spec.g_prime = parse_grid(a.g_prime);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (sub.count("--bell") > 0) spec.bell = parse_bell(a.bell);
    if (sub.count("--matrix-file") > 0) {
      spec.matrix = io::bell_matrix_from_json(read_file(a.matrix_file));
      if (sub.count("--bell") == 0) spec.bell = BellKind::kMatrix;
    }
    if (sub.count("--gains") > 0) spec.gains = parse_gains(a.gains);
    if (sub.count("--gx") > 0) spec.gx = a.gx;
    if (sub.count("--gp") > 0) spec.gp = a.gp;
    if (sub.count("--local-ops") > 0) spec.local_ops = parse_local_ops(a.local_ops);
  }
  if (!a.format.empty()) spec.format = parse_format(a.format);
  if (!a.out.empty()) spec.out = a.out;

  std::vector<io::SweepRow> rows;
  if (single) {
    single->validate();
    rows.push_back({single->g, bell_asymmetry(single->bell), evaluate_metrics(*single)});
  } else {
    spec.validate();
    rows = run_sweep(spec);
  }
  emit(spec.format == Format::kCsv ? io::sweep_to_csv(rows) : io::sweep_to_json(rows), spec.out,
       out);
  return kExitOk;
}

int cmd_optimize(const Args& a, const CLI::App& sub, std::ostream& out) {
  std::vector<double> gs{0.5, 1.0, 2.5};
  std::vector<double> gps{0.7, 1.0, 1.64};
  try {
    if (sub.count("--g") > 0) gs = parse_grid(a.g);
    if (sub.count("--g-prime") > 0) gps = parse_grid(a.g_prime);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (gs.empty() || gps.empty()) throw ConfigError("optimize needs non-empty g and g' grids");
  for (double v : gs) {
    if (!(v > 0.0)) throw ConfigError("optimize needs g > 0");
  }
  for (double v : gps) {
    if (!(v > 0.0)) throw ConfigError("optimize needs g' > 0");
  }
  const bool all = a.target == "all";
  if (!all && a.target != "gains" && a.target != "gprime" && a.target != "local-ops") {
    throw ConfigError("target must be one of {gains, gprime, local-ops, all}");
  }
  const auto tol = check::Tolerances::for_profile(resolve_profile(a));

  std::vector<OptimumResult> results;
  bool ok = true;
  auto check_pair = [&](const OptimumResult& r, double ptol, double vtol) {
    if (r.parameter_residual && !(*r.parameter_residual <= ptol)) ok = false;
    if (r.value_residual && !(*r.value_residual <= vtol)) ok = false;
  };
  if (all || a.target == "gains") {
    for (double g : gs) {
      for (double gp : gps) {
        for (auto obj : {GainObjective::kMinV, GainObjective::kMaxT}) {
          results.push_back(oracle_gain_search(g, gp, obj));
          check_pair(results.back(), tol.oracle_parameter, tol.oracle_value);
        }
      }
    }
  }
  if (all || a.target == "gprime") {
    for (double g : gs) {
      results.push_back(oracle_gprime_search(g));
      check_pair(results.back(), tol.oracle_parameter, tol.oracle_value);
      results.push_back(optimal_gprime_fidelity(g));
    }
  }
  if (all || a.target == "local-ops") {
    LocalOpsSearchOptions o;
    o.seed = a.seed;
    for (double g : gs) {
      const auto [ta, tc] = tms_parameters(qnd_equivalent_kappa(g));
      results.push_back(oracle_local_ops_search(ta, tc, o));
      check_pair(results.back(), tol.oracle_parameter, tol.local_ops_oracle);
    }
  }

  const Format fmt = a.format.empty() ? Format::kJson : parse_format(a.format);
  std::ostringstream s;
  if (fmt == Format::kJson) {
    s << io::optima_to_json(results) << "\n";
  } else {
    s << "name,method,value,parameter_residual,residual,parameters\n";
    for (const auto& r : results) {
      std::string params;
      for (const auto& [k, v] : r.parameters) {
        params += (params.empty() ? "" : ";") + k + "=" + io::format_double(v, 17);
      }
      s << r.name << ',' << to_string(r.method) << ',' << io::format_double(r.value, 17) << ','
        << (r.parameter_residual ? io::format_double(*r.parameter_residual, 17) : "") << ','
        << (r.value_residual ? io::format_double(*r.value_residual, 17) : "") << ",\"" << params
        << "\"\n";
    }
  }
  emit(s.str(), a.out, out);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_check(const Args& a, std::ostream& out, std::ostream& err) {
  check::Options opts;
  opts.profile = resolve_profile(a);
  opts.seed = a.seed;
  if (!a.fault.empty()) {
    if (a.fault != "symplectic") throw ConfigError("unknown fault '" + a.fault + "'");
    opts.constructors.squeezer = [](double r) {
      Mat2 m = make_squeezer(r).matrix();
      m(0, 0) *= 1.001;
      return m;
    };
  }
  const auto report = check::run_invariant_suite(opts);
  const std::string fmt = a.format.empty() ? "table" : a.format;
  std::ostringstream s;
  if (fmt == "table") {
    for (const auto& o : report.outcomes) {
      s << (o.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << o.id
        << " worst=" << std::setw(16) << io::format_double(o.worst, 9)
        << " tol=" << std::setw(10) << io::format_double(o.tolerance, 9) << "  " << o.detail
        << "\n";
    }
    s << report.passed() << " passed, " << report.failed() << " failed (profile "
      << (report.profile == check::ToleranceProfile::kStrict ? "strict" : "default") << ", seed "
      << report.seed << ")\n";
  } else if (fmt == "json") {
    json j;
    j["profile"] = report.profile == check::ToleranceProfile::kStrict ? "strict" : "default";
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    j["outcomes"] = json::array();
    for (const auto& o : report.outcomes) {
      j["outcomes"].push_back({{"id", o.id},
                               {"passed", o.passed},
                               {"worst", o.worst},
                               {"tolerance", o.tolerance},
                               {"detail", o.detail}});
    }
    s << j.dump(2) << "\n";
  } else {
    throw ConfigError("check format must be table or json, got '" + fmt + "'");
  }
  emit(s.str(), a.out, out);
  for (const auto& o : report.outcomes) {
    if (!o.passed) err << "invariant failed: " << o.id << " (" << o.detail << ")\n";
  }
  return report.ok() ? kExitOk : kExitNumeric;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    append_item(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos), out);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void SweepSpec::validate() const {
  if (g.empty()) throw ConfigError("g grid is empty");
  for (double v : g) {
    if (!std::isfinite(v) || v < 0.0) throw ConfigError("g values must be finite and >= 0");
  }
  if (bell == BellKind::kMatrix) {
    if (!matrix) throw ConfigError("matrix Bell interaction needs a matrix");
  } else {
    if (g_prime.empty()) throw ConfigError("g' grid is empty");
    for (double v : g_prime) {
      if (!std::isfinite(v) || v <= 0.0) throw ConfigError("g' values must be finite and > 0");
    }
  }
  const bool closed_form_gains = gains == GainMode::kMinV || gains == GainMode::kMaxT;
  if (closed_form_gains || local_ops == LocalOpsMode::kImproved) {
    if (bell == BellKind::kMatrix) {
      throw ConfigError("minv/maxt gains and improved local ops need a qnd or bs Bell stage");
    }
    for (double v : g) {
      if (!(v > 0.0)) throw ConfigError("minv/maxt gains and improved local ops need g > 0");
    }
  }
  if (closed_form_gains && local_ops != LocalOpsMode::kNone) {
    throw ConfigError("minv/maxt gains are defined without local operations");
  }
  if (gains == GainMode::kScalar &&
      !(std::isfinite(gx) && std::isfinite(gp) && gx != 0.0 && gp != 0.0)) {
    throw ConfigError("scalar gains must be finite and non-zero");
  }
}

SweepSpec sweep_spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep spec: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("sweep spec must be a JSON object");
  SweepSpec s;
  auto str = [&](const char* key) {
    if (!j.at(key).is_string()) throw ConfigError(std::string(key) + " must be a string");
    return j.at(key).get<std::string>();
  };
  auto num = [&](const char* key) {
    if (!j.at(key).is_number()) throw ConfigError(std::string(key) + " must be a number");
    return j.at(key).get<double>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "g") {
      s.g = grid_from_json(value, "g");
    } else if (key == "g_prime") {
      s.g_prime = grid_from_json(value, "g_prime");
    } else if (key == "bell") {
      s.bell = parse_bell(str("bell"));
    } else if (key == "matrix") {
      s.matrix = io::bell_matrix_from_json(value.dump());
    } else if (key == "gains") {
      s.gains = parse_gains(str("gains"));
    } else if (key == "gx") {
      s.gx = num("gx");
    } else if (key == "gp") {
      s.gp = num("gp");
    } else if (key == "local_ops") {
      s.local_ops = parse_local_ops(str("local_ops"));
    } else if (key == "format") {
      s.format = parse_format(str("format"));
    } else if (key == "out") {
      s.out = str("out");
    } else {
      throw ConfigError("unknown sweep spec key '" + key + "'");
    }
  }
  if (s.matrix && !j.contains("bell")) s.bell = BellKind::kMatrix;
  s.validate();
  return s;
}

std::vector<io::SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> gps =
      spec.bell == BellKind::kMatrix ? std::vector<double>{kNaN} : spec.g_prime;
  std::vector<io::SweepRow> rows;
  rows.reserve(spec.g.size() * gps.size());
  for (double g : spec.g) {
    for (double gp : gps) {
      ProtocolConfig cfg;
      cfg.g = g;
      switch (spec.bell) {
        case BellKind::kQnd:
          cfg.bell = BellQnd{gp};
          break;
        case BellKind::kBeamSplitter:
          cfg.bell = BellBeamSplitter::from_asymmetry(gp);
          break;
        case BellKind::kMatrix:
          cfg.bell = BellGeneric{*spec.matrix};
          break;
      }
      switch (spec.local_ops) {
        case LocalOpsMode::kNone:
          break;
        case LocalOpsMode::kImproved: {
          const auto ops = improved_squeezers(g, gp);
          cfg.s_a = ops.s_a;
          cfg.s_b = ops.s_b;
          break;
        }
        case LocalOpsMode::kOptimal: {
          const auto ops = optimal_local_ops(shared_state_qnd(g), bell_matrix(cfg.bell));
          cfg.s_a = ops.s_a;
          cfg.s_b = ops.s_b;
          break;
        }
      }
      switch (spec.gains) {
        case GainMode::kUnity:
          break;
        case GainMode::kScalar:
          cfg.gains = ScalarGain{spec.gx, spec.gp};
          break;
        case GainMode::kMinV: {
          const auto p = gains_min_v(g, gp);
          cfg.gains = ScalarGain{p.gx, p.gp};
          break;
        }
        case GainMode::kMaxT: {
          const auto p = gains_max_t(g, gp);
          cfg.gains = ScalarGain{p.gx, p.gp};
          break;
        }
      }
      rows.push_back({g, gp, evaluate_metrics(cfg)});
    }
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-variable teleportation with QND entanglement", "cvtl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cvtl 0.1.0");
  Args a;

  auto* reproduce = app.add_subcommand("reproduce", "Golden table of reference values");
  auto* sweep = app.add_subcommand("sweep", "Metrics over a (g, g') grid");
  auto* optimize = app.add_subcommand("optimize", "Closed-form optima against numeric oracles");
  auto* chk = app.add_subcommand("check", "Run the invariant suite");

  for (auto* sub : {reproduce, sweep, optimize, chk}) {
    sub->add_option("--format", a.format, "Output format");
    sub->add_option("--out", a.out, "Output path (default stdout)");
  }
  for (auto* sub : {sweep, optimize}) {
    sub->add_option("--g", a.g, "Entangling strengths: list, a/b fractions, start:stop:count");
    sub->add_option("--g-prime", a.g_prime, "Bell-stage asymmetries, same grammar as --g");
  }
  sweep->add_option("--bell", a.bell, "qnd, bs or matrix-file");
  sweep->add_option("--matrix-file", a.matrix_file, "JSON file with a 4x4 interaction matrix");
  sweep->add_option("--gains", a.gains, "unity, minv, maxt or scalar");
  sweep->add_option("--gx", a.gx, "x gain for --gains scalar");
  sweep->add_option("--gp", a.gp, "p gain for --gains scalar");
  sweep->add_option("--local-ops", a.local_ops, "none, improved or optimal");
  sweep->add_option("--config", a.config, "ProtocolConfig or SweepSpec JSON file");
  optimize->add_option("--target", a.target, "gains, gprime, local-ops or all");
  for (auto* sub : {optimize, chk}) {
    sub->add_option("--seed", a.seed, "Seed for randomized searches");
    sub->add_option("--profile", a.profile, "Tolerance profile: default or strict");
  }
  chk->add_option("--inject-fault", a.fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reproduce) return cmd_reproduce(a, out);
    if (*sweep) return cmd_sweep(a, *sweep, out);
    if (*optimize) return cmd_optimize(a, *optimize, out);
    return cmd_check(a, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularBellMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace cvtl::cli
