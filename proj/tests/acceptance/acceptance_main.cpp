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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvtl/covariance.hpp"
#include "cvtl/metrics.hpp"
#include "cvtl/optimize.hpp"
#include "cvtl/protocol.hpp"
#include "cvtl/random.hpp"
#include "cvtl/reproduce.hpp"
#include "cvtl/symplectic.hpp"
#include "oracles.hpp"

namespace {

using namespace cvtl;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

Verdict golden_table() {
  Verdict v;
  int n = 0;
  for (const auto& row : reproduce_table()) {
    ++n;
    v.require(row.pass(), row.quantity + " computed " + fmt(row.computed) + " vs " + row.quoted +
                              " (|d|=" + fmt(row.delta()) + " > " + fmt(row.tolerance) + ")");
  }
  if (v.pass) v.detail = std::to_string(n) + " rows";
  return v;
}

Verdict gains_vs_oracle() {
  Verdict v;
  double worst_p = 0, worst_v = 0;
  for (double g : {0.5, 1.0, 2.5}) {
    for (double h : {0.7, 1.0, 1.64}) {
      for (auto obj : {GainObjective::kMinV, GainObjective::kMaxT}) {
        const auto r = oracle_gain_search(g, h, obj);
        worst_p = std::max(worst_p, r.parameter_residual.value_or(INFINITY));
        worst_v = std::max(worst_v, r.value_residual.value_or(INFINITY));
      }
    }
  }
  v.require(worst_p < 1e-4, "parameter residual " + fmt(worst_p));
  v.require(worst_v < 1e-6, "objective residual " + fmt(worst_v));
  if (v.pass) v.detail = "18 cases, worst " + fmt(worst_p) + " / " + fmt(worst_v);
  return v;
}

Verdict local_ops_theorem() {
  Verdict v;
  double worst_oracle = 0, worst_pipe = 0;
  for (double kappa : {0.0, 0.25, 0.5, 1.0}) {
    const auto [a, c] = tms_parameters(kappa);
    const auto r = oracle_local_ops_search(a, c);
    worst_oracle = std::max(worst_oracle, std::abs(r.value - std::exp(-2 * kappa)));
  }
  for (double g : {0.5, 1.0, 2.5}) {
    const auto shared = shared_state_qnd(g);
    const auto ops = optimal_local_ops(shared, make_bell_qnd(1.0));
    const auto res = run_protocol(shared, BellQnd{1.0}, ops.s_a, ops.s_b, UnityGain{});
    const double expected = 2 * (std::sqrt(shared.a().determinant()) -
                                 std::sqrt(std::abs(shared.c().determinant())));
    worst_pipe = std::max(worst_pipe, std::abs(photon_noise(res.noise) - expected));
  }
  v.require(worst_oracle <= 1e-5, "oracle minimum off by " + fmt(worst_oracle));
  v.require(worst_pipe <= 1e-10, "pipeline noise off by " + fmt(worst_pipe));
  if (v.pass) v.detail = "worst " + fmt(worst_oracle) + " / " + fmt(worst_pipe);
  return v;
}

Verdict pipeline_consistency() {
  Verdict v;
  double worst = 0, worst_bs = 0;
  const std::vector<double> grid = {0.3, 0.5, 1.0, 1.7, 2.5};
  for (double g : grid) {
    for (double h : {0.4, 0.7, 1.0, 4.0 / 3.0, 1.64, 3.0}) {
      for (auto [gx, gp] : {std::pair{1.0, 1.0}, {0.8, 1.2}, {1.5, 0.4}}) {
        ProtocolConfig c;
        c.g = g;
        c.bell = BellQnd{h};
        c.gains = ScalarGain{gx, gp};
        const auto res = run_protocol(c);
        const auto q = added_noise_qnd_scalar(g, h, gx, gp);
        worst = std::max({worst, std::abs(res.noise.var_x() - q.var_x),
                          std::abs(res.noise.var_p() - q.var_p),
                          std::abs(res.noise.two_n()(0, 1))});
      }
      ProtocolConfig c;
      c.g = g;
      c.bell = BellQnd{h};
      const auto qnd = run_protocol(c);
      worst = std::max(worst, std::abs(evaluate_metrics(qnd).f - qnd_fidelity(g, h)));
      c.bell = BellBeamSplitter::from_asymmetry(h);
      const auto bs = run_protocol(c);
      worst_bs = std::max(worst_bs, (bs.noise.two_n() - qnd.noise.two_n()).cwiseAbs().maxCoeff());
    }
    ProtocolConfig hk;
    hk.g = g;
    hk.bell = BellQnd{g};
    worst = std::max(worst, std::abs(evaluate_metrics(hk).f - hk_fidelity(g)));
    ProtocolConfig imp;
    imp.g = g;
    imp.bell = BellQnd{1.0};
    const auto ops = improved_squeezers(g, 1.0);
    imp.s_a = ops.s_a;
    imp.s_b = ops.s_b;
    worst = std::max(worst, std::abs(evaluate_metrics(imp).f - improved_fidelity(g)));
  }
  v.require(worst <= 1e-10, "formula vs pipeline " + fmt(worst));
  v.require(worst_bs <= 1e-12, "BS vs QND 2N " + fmt(worst_bs));
  if (v.pass) v.detail = "worst " + fmt(worst) + ", BS/QND " + fmt(worst_bs);
  return v;
}

Verdict symplectic_suite() {
  Verdict v;
  std::mt19937_64 rng(20050101);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  double worst_con = 0, worst_bm = 0, worst_sigma = 0, worst_sf = 0;
  for (int i = 0; i < 1000; ++i) {
    const double r = u(rng), t = u(rng), gq = u(rng);
    worst_con = std::max({worst_con, testing::symplectic_residual(make_squeezer(r).matrix()),
                          testing::symplectic_residual(make_phase(t).matrix()),
                          testing::symplectic_residual(make_qnd(gq).matrix()),
                          testing::symplectic_residual(make_bell_qnd(gq).matrix())});
    const auto s = random_symplectic2(rng, 1.5);
    const auto f = bloch_messiah_2x2(s);
    worst_bm = std::max(worst_bm, (f.compose().matrix() - s.matrix()).cwiseAbs().maxCoeff() /
                                      std::max(1.0, s.matrix().cwiseAbs().maxCoeff()));
    if (f.r < 0) worst_bm = INFINITY;

    const auto bell = random_bell_interaction(rng);
    const auto yz = extract_yz(bell);
    const Mat2 sigma = sigma_matrix(yz.y, yz.z).matrix();
    worst_sigma =
        std::max(worst_sigma, testing::symplectic_residual(sigma) /
                                  std::max(1.0, std::pow(sigma.cwiseAbs().maxCoeff(), 2)));

    const double g = 0.05 + 3.0 * (i % 50) / 49.0;
    const auto state = shared_state_qnd(g).transformed(
        direct_sum(random_symplectic2(rng), random_symplectic2(rng)));
    const auto sf = two_mode_standard_form(state);
    const Mat4 w = sf.v_tms;
    Mat4 pattern;
    pattern << sf.a, 0, -sf.c, 0, 0, sf.a, 0, sf.c, -sf.c, 0, sf.a, 0, 0, sf.c, 0, sf.a;
    const Mat4 m = direct_sum(sf.m_a, sf.m_b).matrix();
    const Mat4 back = m * state.matrix() * m.transpose();
    worst_sf = std::max({worst_sf, (w - pattern).cwiseAbs().maxCoeff(),
                         (back - pattern).cwiseAbs().maxCoeff()});
  }
  v.require(worst_con <= 1e-12, "constructor defect " + fmt(worst_con));
  v.require(worst_bm <= 1e-10, "Bloch-Messiah round trip " + fmt(worst_bm));
  v.require(worst_sigma <= 1e-10, "Sigma defect " + fmt(worst_sigma));
  v.require(worst_sf <= 1e-8, "standard form pattern " + fmt(worst_sf));
  if (v.pass) {
    v.detail = "1000 samples, worst " + fmt(worst_con) + " / " + fmt(worst_bm) + " / " +
               fmt(worst_sigma) + " / " + fmt(worst_sf);
  }
  return v;
}

Verdict stationarity() {
  Verdict v;
  const double h = 1e-5;
  double worst = 0;
  for (double g : {0.5, 1.0, 2.5}) {
    for (double gp : {0.7, 1.0, 1.64}) {
      const auto mv = gains_min_v(g, gp);
      const auto mt = gains_max_t(g, gp);
      worst = std::max(
          {worst,
           std::abs(testing::derivative([&](double x) { return gain_objective_v(g, gp, x, mv.gp); },
                                        mv.gx, h)),
           std::abs(testing::derivative([&](double y) { return gain_objective_v(g, gp, mv.gx, y); },
                                        mv.gp, h)),
           std::abs(testing::derivative([&](double x) { return gain_objective_t(g, gp, x, mt.gp); },
                                        mt.gx, h)),
           std::abs(testing::derivative([&](double y) { return gain_objective_t(g, gp, mt.gx, y); },
                                        mt.gp, h))});
    }
    const double opt = optimal_gprime(g);
    worst = std::max(
        {worst, std::abs(testing::derivative([&](double x) { return t_max(g, x); }, opt, h)),
         std::abs(testing::derivative([&](double x) { return t_at_v_min(g, x); }, opt, h))});
  }
  v.require(worst < 1e-6, "gradient " + fmt(worst));
  if (v.pass) v.detail = "max |grad| " + fmt(worst);
  return v;
}

Verdict quantum_witnesses() {
  Verdict v;
  for (double g : {0.01, 0.1, 0.5, 1.0, 2.0}) {
    ProtocolConfig c;
    c.g = g;
    c.bell = BellQnd{g + 1};
    const double f = evaluate_metrics(c).f;
    v.require(f > 0.5, "F(" + fmt(g) + ", g+1) = " + fmt(f));
  }
  const double g_star = 1.27202;
  for (double g = 0.05; g <= 5.0; g += 0.01) {
    if (std::abs(g - g_star) < 1e-5) continue;
    const bool below = v_at_t_max(g) < 0.25;
    v.require(below == (g > g_star), "V_Tmax at g=" + fmt(g));
  }
  v.require(v_at_t_max(g_star + 1e-5) < 0.25 && v_at_t_max(g_star - 1e-5) > 0.25,
            "threshold bracket");
  double v0 = INFINITY;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double gx = 0.01 * std::pow(1000.0, i / 199.0);
      const double gp = 0.01 * std::pow(1000.0, j / 199.0);
      ProtocolConfig c;
      c.g = 0.0;
      c.bell = BellQnd{1.0};
      c.gains = ScalarGain{gx, gp};
      const auto res = run_protocol(c);
      v0 = std::min(v0, cond_var_product(res.noise.var_x(), res.noise.var_p()));
    }
  }
  v.require(v0 >= 0.25 - 1e-12, "g=0 grid reached V=" + fmt(v0));
  if (v.pass) v.detail = "min V at g=0 over 200x200 gains: " + fmt(v0);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 golden table", golden_table},
      {"2 closed-form gains vs oracle", gains_vs_oracle},
      {"3 photon-noise minimization", local_ops_theorem},
      {"4 pipeline consistency", pipeline_consistency},
      {"5 symplectic property suite", symplectic_suite},
      {"6 stationarity", stationarity},
      {"7 quantum-regime witnesses", quantum_witnesses},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failed;
    std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
