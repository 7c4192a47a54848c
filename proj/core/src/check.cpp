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

#include "cvtl/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "cvtl/covariance.hpp"
#include "cvtl/metrics.hpp"
#include "cvtl/optimize.hpp"
#include "cvtl/protocol.hpp"
#include "cvtl/random.hpp"

namespace cvtl::check {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double max_rel_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

const std::vector<double>& g_grid() {
  static const std::vector<double> v{0.5, 1.0, 2.5};
  return v;
}

const std::vector<double>& gprime_grid() {
  static const std::vector<double> v{0.7, 1.0, 1.64};
  return v;
}

class Suite {
 public:
  Suite(const Options& opts)
      : opts_(opts), tol_(Tolerances::for_profile(opts.profile)), rng_(opts.seed) {}

  Report run() {
    report_.profile = opts_.profile;
    report_.seed = opts_.seed;

    guarded("symplectic_core.symplectic_condition", tol_.symplectic,
            [&] { return symplectic_condition(); });
    guarded("symplectic_core.bloch_messiah_roundtrip", tol_.decomposition,
            [&] { return bloch_messiah_roundtrip(); });
    guarded("symplectic_core.standard_form_qnd_family", tol_.decomposition,
            [&] { return standard_form_family(); });
    guarded("symplectic_core.standard_form_pattern", tol_.standard_form_pattern,
            [&] { return standard_form_pattern(); });
    guarded("symplectic_core.uncertainty_preserved", 1e-10,
            [&] { return uncertainty_preserved(); });
    guarded("symplectic_core.bs_qnd_yz_equivalence", tol_.pipeline,
            [&] { return bs_qnd_yz(); });

    guarded("protocol_engine.sigma_symplectic", tol_.decomposition,
            [&] { return sigma_symplectic(); });
    guarded("protocol_engine.scalar_vs_matrix", tol_.pipeline,
            [&] { return scalar_vs_matrix(); });
    guarded("protocol_engine.bs_qnd_noise_equivalence", tol_.pipeline,
            [&] { return bs_qnd_noise(); });
    guarded("protocol_engine.unity_first_moments", tol_.decomposition,
            [&] { return unity_first_moments(); });
    guarded("protocol_engine.noise_psd", 1e-10, [&] { return noise_psd(); });
    guarded("protocol_engine.sigma_compensation", tol_.decomposition,
            [&] { return sigma_compensation(); });

    guarded("metrics.fidelity_routes", tol_.pipeline, [&] { return fidelity_routes(); });
    guarded("metrics.fcoh_identity", tol_.pipeline, [&] { return fcoh_identity(); });
    guarded("metrics.closed_form_fidelities", tol_.closed_form,
            [&] { return closed_form_fidelities(); });
    guarded("metrics.g_plus_one_witness", 0.0, [&] { return g_plus_one_witness(); });
    guarded("metrics.classical_bound_g0", 0.0, [&] { return classical_bound(); });
    guarded("metrics.value_ranges", 0.0, [&] { return value_ranges(); });
    guarded("metrics.gprime_argmax_shift", tol_.oracle_parameter,
            [&] { return gprime_argmax_shift(); });

    guarded("optimize.closed_form_gain_values", tol_.closed_form,
            [&] { return closed_form_gain_values(); });
    guarded("optimize.gain_oracle_parameters", tol_.oracle_parameter,
            [&] { return gain_oracles(true); });
    guarded("optimize.gain_oracle_values", tol_.oracle_value,
            [&] { return gain_oracles(false); });
    guarded("optimize.gprime_oracle", tol_.oracle_parameter,
            [&] { return gprime_oracle(); });
    guarded("optimize.stationarity_gains", tol_.stationarity,
            [&] { return stationarity_gains(); });
    guarded("optimize.stationarity_gprime", tol_.stationarity,
            [&] { return stationarity_gprime(); });
    guarded("optimize.noise_bloch_messiah_form", tol_.closed_form,
            [&] { return noise_bm_form(); });
    guarded("optimize.noise_hessian", tol_.stationarity * 10.0,
            [&] { return noise_hessian(); });
    guarded("optimize.local_ops_oracle", tol_.local_ops_oracle,
            [&] { return local_ops_oracle(); });
    guarded("optimize.local_ops_minimizer_shape", 1e-3,
            [&] { return local_ops_shape(); });
    guarded("optimize.local_ops_pipeline", tol_.closed_form,
            [&] { return local_ops_pipeline(); });
    guarded("optimize.local_ops_isotropy", tol_.isotropy, [&] { return isotropy(); });
    guarded("optimize.improved_squeezers", tol_.closed_form,
            [&] { return improved(); });
    guarded("optimize.tms_minimality", tol_.minimality, [&] { return tms_minimality(); });
    return report_;
  }

 private:
  struct Measured {
    double worst = 0.0;
    std::string detail;
  };

  template <class F>
  void guarded(const char* id, double tol, F&& body) {
    Outcome o;
    o.id = id;
    o.tolerance = tol;
    try {
      Measured m = body();
      o.worst = m.worst;
      o.detail = std::move(m.detail);
      o.passed = std::isfinite(m.worst) && m.worst <= tol;
    } catch (const std::exception& e) {
      o.worst = kInf;
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    report_.outcomes.push_back(std::move(o));
  }

  Measured symplectic_condition() {
    const Constructors& k = opts_.constructors;
    Measured m;
    auto take = [&](double d, const std::string& what) {
      if (!(d <= m.worst) ) {
        m.worst = std::isfinite(d) ? d : kInf;
        m.detail = "worst at " + what;
      }
    };
    for (double r : {-3.0, -1.0, 0.0, 0.5, std::log(2.0), 3.0}) {
      take(symplectic_defect(k.squeezer(r)), "squeezer r=" + std::to_string(r));
    }
    for (double u : {0.0, std::numbers::pi / 2, 1.0, -2.5}) {
      take(symplectic_defect(k.phase(u)), "phase u=" + std::to_string(u));
    }
    for (double g : {0.5, 1.0, 2.5}) {
      take(symplectic_defect(k.qnd(g)), "qnd g=" + std::to_string(g));
    }
    for (double g : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
      take(symplectic_defect(k.bell_qnd(g)), "bell qnd g'=" + std::to_string(g));
    }
    for (auto [t, r] : {std::pair{1.0, 0.0}, std::pair{0.6, 0.8},
                        std::pair{std::sqrt(0.5), std::sqrt(0.5)}}) {
      take(symplectic_defect(k.beamsplitter(t, r)),
           "beam splitter T=" + std::to_string(t));
    }
    if (m.detail.empty()) m.detail = "all constructors";
    return m;
  }

  Measured bloch_messiah_roundtrip() {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> squeeze(-3.0, 3.0);
    Measured m{0.0, "1000 random P(a)S(r)P(b)"};
    for (int i = 0; i < 1000; ++i) {
      const SymplecticMat2 s =
          make_phase(angle(rng_)) * make_squeezer(squeeze(rng_)) * make_phase(angle(rng_));
      const BlochMessiahFactors f = bloch_messiah_2x2(s);
      if (f.r < 0.0) return {kInf, "negative squeezing returned"};
      m.worst = std::max(m.worst, (f.compose().matrix() - s.matrix()).cwiseAbs().maxCoeff());
    }
    return m;
  }

  Measured standard_form_family() {
    Measured m{0.0, "e^(-2 kappa) vs sqrt(1+g^2)-g, g in {0.1,0.5,1,2.5,5}"};
    for (double g : {0.1, 0.5, 1.0, 2.5, 5.0}) {
      const auto sf = two_mode_standard_form(shared_state_qnd(g));
      m.worst = std::max(m.worst,
                         std::abs(std::exp(-2.0 * sf.kappa) - (std::hypot(1.0, g) - g)));
      m.worst = std::max(m.worst, std::abs(sf.a * sf.a - sf.c * sf.c - 0.25));
    }
    return m;
  }

  Measured standard_form_pattern() {
    Measured m{0.0, "QND family g in {0.1,0.5,1,2.5,5} x 200 random local-op orbits"};
    auto pattern_error = [](const StandardFormResult& sf) {
      Mat4 expected;
      // clang-format off
      expected << sf.a, 0, -sf.c, 0,
                  0, sf.a, 0, sf.c,
                  -sf.c, 0, sf.a, 0,
                  0, sf.c, 0, sf.a;
      // clang-format on
      return (sf.v_tms - expected).cwiseAbs().maxCoeff();
    };
    for (double g : {0.1, 0.5, 1.0, 2.5, 5.0}) {
      const auto v = shared_state_qnd(g);
      m.worst = std::max(m.worst, pattern_error(two_mode_standard_form(v)));
      for (int i = 0; i < 200; ++i) {
        const auto local = direct_sum(random_symplectic2(rng_), random_symplectic2(rng_));
        m.worst = std::max(m.worst, pattern_error(two_mode_standard_form(v.transformed(local))));
      }
    }
    return m;
  }

  Measured uncertainty_preserved() {
    Measured m{0.0, "-min eig of MVM^T + i Omega/2 over 200 random (M, V)"};
    std::uniform_real_distribution<double> gdist(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
      const auto v = shared_state_qnd(gdist(rng_)).transformed(random_symplectic4(rng_));
      m.worst = std::max(m.worst, -uncertainty_margin(v.matrix()));
    }
    return m;
  }

  Measured bs_qnd_yz() {
    Measured m{0.0, "Y^-1 Z of BS(T,R) vs QND(g'=R/T)"};
    for (double gp : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
      const auto bs = extract_yz(bell_matrix(BellBeamSplitter::from_asymmetry(gp)));
      const auto qnd = extract_yz(make_bell_qnd(gp));
      m.worst = std::max(m.worst, max_rel_diff(bs.y.inverse() * bs.z, qnd.y.inverse() * qnd.z));
    }
    return m;
  }

  Measured sigma_symplectic() {
    Measured m{0.0, "defect / max|Sigma_ij|^2 over 1000 random Bell interactions"};
    for (int i = 0; i < 1000; ++i) {
      const auto yz = extract_yz(random_bell_interaction(rng_));
      const Mat2 sigma = pauli_z() * yz.y.inverse() * yz.z;
      const double scale = std::max(1.0, sigma.cwiseAbs2().maxCoeff());
      m.worst = std::max(m.worst, symplectic_defect(sigma) / scale);
    }
    return m;
  }

  Measured scalar_vs_matrix() {
    Measured m{0.0, "g in {0.1,1,2.5}, g' in {0.5,1,4/3,2}, unity/minV/maxT gains"};
    for (double g : {0.1, 1.0, 2.5}) {
      for (double gp : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
        for (GainPair gains : {GainPair{1.0, 1.0}, gains_min_v(g, gp), gains_max_t(g, gp)}) {
          ProtocolConfig cfg;
          cfg.g = g;
          cfg.bell = BellQnd{gp};
          cfg.gains = ScalarGain{gains.gx, gains.gp};
          const auto res = run_protocol(cfg);
          const auto sc = added_noise_qnd_scalar(g, gp, gains.gx, gains.gp);
          m.worst = std::max({m.worst, rel_diff(res.noise.var_x(), sc.var_x),
                              rel_diff(res.noise.var_p(), sc.var_p)});
        }
      }
    }
    return m;
  }

  Measured bs_qnd_noise() {
    Measured m{0.0, "2N for BS(R/T=g') vs QND(g'), unity and scalar gains"};
    for (double g : {0.1, 1.0, 2.5}) {
      for (double gp : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
        for (GainPolicy gains : {GainPolicy{UnityGain{}}, GainPolicy{ScalarGain{0.7, 1.3}}}) {
          ProtocolConfig a;
          a.g = g;
          a.bell = BellQnd{gp};
          a.gains = gains;
          a.s_a = random_symplectic2(rng_);
          a.s_b = random_symplectic2(rng_);
          ProtocolConfig b = a;
          b.bell = BellBeamSplitter::from_asymmetry(gp);
          m.worst = std::max(m.worst, max_rel_diff(run_protocol(a).noise.two_n(),
                                                   run_protocol(b).noise.two_n()));
        }
      }
    }
    return m;
  }

  Measured unity_first_moments() {
    Measured m{0.0, "|Y^-1 Y - I| over 200 random Bell interactions"};
    for (int i = 0; i < 200; ++i) {
      const SymplecticMat4 r = random_bell_interaction(rng_);
      const auto yz = extract_yz(r);
      m.worst = std::max(m.worst,
                         (gain_matrix(yz.y, UnityGain{}) * yz.y - Mat2::Identity())
                             .cwiseAbs()
                             .maxCoeff());
      const auto res = run_protocol(shared_state_qnd(1.0), BellGeneric{r},
                                    SymplecticMat2(), SymplecticMat2(), UnityGain{});
      if (res.first_moment_map != Mat2::Identity()) return {kInf, "first-moment map not I"};
    }
    return m;
  }

  Measured noise_psd() {
    Measured m{0.0, "-min eig of 2N and asymmetry over 300 random configs"};
    std::uniform_real_distribution<double> gdist(0.0, 3.0);
    std::uniform_real_distribution<double> gain(-2.0, 2.0);
    for (int i = 0; i < 300; ++i) {
      GainPolicy policy = UnityGain{};
      if (i % 3 == 1) policy = ScalarGain{gain(rng_), gain(rng_)};
      if (i % 3 == 2) {
        Mat2 gm;
        gm << gain(rng_), gain(rng_), gain(rng_), gain(rng_);
        policy = MatrixGain{gm};
      }
      const auto res = run_protocol(shared_state_qnd(gdist(rng_)),
                                    BellGeneric{random_bell_interaction(rng_)},
                                    random_symplectic2(rng_), random_symplectic2(rng_), policy);
      const Mat2& n = res.noise.two_n();
      Eigen::SelfAdjointEigenSolver<Mat2> es(n, Eigen::EigenvaluesOnly);
      m.worst = std::max({m.worst, -es.eigenvalues().minCoeff(), std::abs(n(0, 1) - n(1, 0))});
    }
    return m;
  }

  Measured sigma_compensation() {
    Measured m{0.0, "S_A = Sigma^-1: relative 2N error vs EPR-sum covariance, per unit cond(Y)"};
    std::uniform_real_distribution<double> gdist(0.1, 3.0);
    Eigen::Matrix<double, 2, 4> epr;
    epr << 1, 0, 1, 0, 0, 1, 0, -1;
    for (int i = 0; i < 100; ++i) {
      const SymplecticMat4 r = random_bell_interaction(rng_);
      const auto yz = extract_yz(r);
      const SymplecticMat2 s_a = sigma_matrix(yz.y, yz.z).inverse();
      const SymplecticMat2 s_b = random_symplectic2(rng_);
      const auto shared = shared_state_qnd(gdist(rng_));
      const auto res = run_protocol(shared, BellGeneric{r}, s_a, s_b, UnityGain{});
      const Mat4 vb = shared.transformed(direct_sum(SymplecticMat2(), s_b)).matrix();
      const Mat2 cov = epr * vb * epr.transpose();
      const Mat2 expected = pauli_z() * cov * pauli_z();
      const double cond = yz.y.norm() * yz.y.inverse().norm();
      m.worst = std::max(m.worst, max_rel_diff(res.noise.two_n(), expected) / cond);
    }
    return m;
  }

  Measured fidelity_routes() {
    Measured m{0.0, "F(<X^2>,<P^2>) vs 1/sqrt(det(V_in+V_out)) for diagonal 2N"};
    for (double g : {0.1, 0.5, 1.0, 2.5}) {
      for (double gp : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
        ProtocolConfig cfg;
        cfg.g = g;
        cfg.bell = BellQnd{gp};
        const auto res = run_protocol(cfg);
        const double f1 = fidelity_uncorrelated(res.noise.var_x(), res.noise.var_p());
        const double f2 = fidelity_gaussian(0.5 * Mat2::Identity(), res.v_out);
        const double f3 = fidelity_coherent(res.noise);
        m.worst = std::max({m.worst, std::abs(f1 - f2), std::abs(f1 - f3)});
      }
    }
    return m;
  }

  Measured fcoh_identity() {
    Measured m{0.0, "1/sqrt(1+2TrN+4detN) vs 1/sqrt(det(I+2N)), 500 random PSD N"};
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      Mat2 l;
      l << nd(rng_), nd(rng_), nd(rng_), nd(rng_);
      const Mat2 two_n = l * l.transpose();
      const AddedNoiseMatrix noise(two_n);
      const double direct = 1.0 / std::sqrt((Mat2::Identity() + two_n).determinant());
      m.worst = std::max(m.worst, std::abs(fidelity_coherent(noise) - direct));
    }
    return m;
  }

  Measured closed_form_fidelities() {
    Measured m{0.0, "pipeline vs F(g,g'), F_HK, F_S over g, g' grids"};
    for (double g : {0.1, 0.5, 1.0, 2.5, 5.0}) {
      for (double gp : {0.5, 1.0, 4.0 / 3.0, 2.0, g}) {
        ProtocolConfig cfg;
        cfg.g = g;
        cfg.bell = BellBeamSplitter::from_asymmetry(gp);
        m.worst = std::max(m.worst, std::abs(evaluate_metrics(cfg).f - qnd_fidelity(g, gp)));
      }
      ProtocolConfig hk;
      hk.g = g;
      hk.bell = BellQnd{g};
      m.worst = std::max(m.worst, std::abs(evaluate_metrics(hk).f - hk_fidelity(g)));
      ProtocolConfig imp = hk;
      imp.bell = BellQnd{1.0};
      const auto ops = improved_squeezers(g, 1.0);
      imp.s_a = ops.s_a;
      imp.s_b = ops.s_b;
      m.worst = std::max(m.worst, std::abs(evaluate_metrics(imp).f - improved_fidelity(g)));
      m.worst = std::max(m.worst,
                         std::abs(improved_fidelity(g) - epr_fidelity(qnd_equivalent_kappa(g))));
    }
    return m;
  }

  Measured g_plus_one_witness() {
    for (double g : {0.01, 0.1, 0.5, 1.0, 2.0}) {
      ProtocolConfig cfg;
      cfg.g = g;
      cfg.bell = BellQnd{g + 1.0};
      const double f = evaluate_metrics(cfg).f;
      if (!(f > kClassicalF) || !(qnd_fidelity(g, g + 1.0) > kClassicalF)) {
        return {1.0, "F(g, g+1) <= 1/2 at g=" + std::to_string(g)};
      }
    }
    return {0.0, "F(g, g+1) > 1/2 for g in {0.01,0.1,0.5,1,2}"};
  }

  Measured classical_bound() {
    const int n = 200;
    const double lo = std::log(0.01);
    const double step = (std::log(10.0) - lo) / (n - 1);
    for (double gp : {0.5, 1.0, 2.0}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double v = gain_objective_v(0.0, gp, std::exp(lo + i * step), std::exp(lo + j * step));
          if (v < kClassicalV) return {1.0, "V < 1/4 at g=0"};
        }
      }
    }
    return {0.0, "g=0: V >= 1/4 on 200x200 gain grid, g' in {0.5,1,2}"};
  }

  Measured value_ranges() {
    for (double g : {0.0, 0.1, 1.0, 2.5, 5.0}) {
      for (double gp : {0.5, 1.0, 2.0}) {
        for (GainPair gains : {GainPair{1.0, 1.0}, GainPair{0.3, 3.0}, GainPair{4.0, 0.2}}) {
          ProtocolConfig cfg;
          cfg.g = g;
          cfg.bell = BellQnd{gp};
          cfg.gains = ScalarGain{gains.gx, gains.gp};
          const auto r = evaluate_metrics(cfg);
          if (!(r.v >= 0.0 && r.t > 0.0 && r.t <= 2.0 && r.f > 0.0 && r.f <= 1.0 &&
                r.photon_noise >= 0.0)) {
            return {1.0, "metric out of range at g=" + std::to_string(g)};
          }
        }
      }
    }
    return {0.0, "V >= 0, T in (0,2], F in (0,1], N >= 0"};
  }

  Measured gprime_argmax_shift() {
    const auto best = optimal_gprime_fidelity(1.0);
    if (!(best.value > qnd_fidelity(1.0, 1.0))) return {kInf, "F(1, g'*) <= F(1, 1)"};
    return {std::abs(best.parameter("g_prime") - 4.0 / 3.0), "argmax_g' F(1, g') vs 4/3"};
  }

  Measured closed_form_gain_values() {
    Measured m{0.0, "V, T at closed-form gains vs V_min, T_Vmin, T_max, V_Tmax"};
    for (double g : g_grid()) {
      for (double gp : {0.5, 0.7, 1.0, 1.64, 2.0}) {
        const auto mv = gains_min_v(g, gp);
        const auto mt = gains_max_t(g, gp);
        m.worst = std::max({m.worst,
                            rel_diff(gain_objective_v(g, gp, mv.gx, mv.gp), v_min(g)),
                            rel_diff(gain_objective_t(g, gp, mv.gx, mv.gp), t_at_v_min(g, gp)),
                            rel_diff(gain_objective_t(g, gp, mt.gx, mt.gp), t_max(g, gp)),
                            rel_diff(gain_objective_v(g, gp, mt.gx, mt.gp), v_at_t_max(g))});
      }
      const double h = optimal_gprime(g);
      m.worst = std::max({m.worst, rel_diff(t_at_v_min(g, h), t_v_min_opt(g)),
                          rel_diff(t_max(g, h), t_max_opt(g))});
    }
    return m;
  }

  Measured gain_oracles(bool parameters) {
    Measured m{0.0, parameters ? "max parameter residual, 9 cases x {min_V, max_T}"
                               : "max objective residual, 9 cases x {min_V, max_T}"};
    for (double g : g_grid()) {
      for (double gp : gprime_grid()) {
        for (auto obj : {GainObjective::kMinV, GainObjective::kMaxT}) {
          const auto r = oracle_gain_search(g, gp, obj);
          m.worst = std::max(m.worst, parameters ? *r.parameter_residual : *r.value_residual);
        }
      }
    }
    return m;
  }

  Measured gprime_oracle() {
    Measured m{0.0, "argmax_g' T_max vs (1+g^2)^(1/4)"};
    for (double g : g_grid()) {
      const auto r = oracle_gprime_search(g);
      m.worst = std::max(m.worst, *r.parameter_residual);
      if (*r.value_residual > tol_.oracle_value) return {kInf, "T_max,opt value mismatch"};
    }
    return m;
  }

  Measured stationarity_gains() {
    Measured m{0.0, "|Richardson central-difference gradient| (h = 1e-5) of V and T at closed-form gains"};
    const double h = 1e-5;
    auto grad = [h](const std::function<double(double, double)>& f, double x, double y) {
      auto dx = [&](double s) { return (f(x + s, y) - f(x - s, y)) / (2 * s); };
      auto dy = [&](double s) { return (f(x, y + s) - f(x, y - s)) / (2 * s); };
      return std::max(std::abs((4 * dx(h / 2) - dx(h)) / 3), std::abs((4 * dy(h / 2) - dy(h)) / 3));
    };
    for (double g : g_grid()) {
      for (double gp : gprime_grid()) {
        const auto mv = gains_min_v(g, gp);
        const auto mt = gains_max_t(g, gp);
        const double gv =
            grad([&](double x, double y) { return gain_objective_v(g, gp, x, y); }, mv.gx, mv.gp);
        const double gt =
            grad([&](double x, double y) { return gain_objective_t(g, gp, x, y); }, mt.gx, mt.gp);
        m.worst = std::max({m.worst, gv, gt});
      }
    }
    return m;
  }

  Measured stationarity_gprime() {
    Measured m{0.0, "|dT_Vmin/dg'| and |dT_max/dg'| at g'_opt"};
    const double h = 1e-5;
    for (double g : {0.5, 1.0, 1.5, 2.5, 5.0}) {
      const double x = optimal_gprime(g);
      const double d1 = (t_at_v_min(g, x + h) - t_at_v_min(g, x - h)) / (2 * h);
      const double d2 = (t_max(g, x + h) - t_max(g, x - h)) / (2 * h);
      m.worst = std::max({m.worst, std::abs(d1), std::abs(d2)});
    }
    return m;
  }

  Measured noise_bm_form() {
    Measured m{0.0, "trace form vs Bloch-Messiah form, 500 random parameter sets"};
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> squeeze(-1.5, 1.5);
    std::uniform_real_distribution<double> kdist(0.0, 1.5);
    const Mat2 s3 = pauli_z();
    for (int i = 0; i < 500; ++i) {
      const auto [a, c] = tms_parameters(kdist(rng_));
      const double ra = squeeze(rng_), rb = squeeze(rng_);
      const double al = angle(rng_), be = angle(rng_), ga = angle(rng_), de = angle(rng_);
      const SymplecticMat2 st_a = make_phase(al) * make_squeezer(ra) * make_phase(be);
      const SymplecticMat2 s_b = make_phase(ga) * make_squeezer(rb) * make_phase(de);
      const double trace_form =
          noise_standard_form(a, c, SymplecticMat2(s3 * st_a.matrix() * s3, 1e-9), s_b);
      const double bm_form = noise_bloch_messiah(a, c, ra, rb, al + be - ga - de, al - be - ga + de);
      m.worst = std::max(m.worst, rel_diff(trace_form, bm_form));
    }
    return m;
  }

  Measured noise_hessian() {
    Measured m{0.0, "finite-difference Hessian of N' at r+=0, t+=0 vs 2(2a-c), 2c, 0"};
    const double h = 1e-4;
    for (double kappa : {0.25, 0.5, 1.0}) {
      const auto [a, c] = tms_parameters(kappa);
      auto n = [&](double r, double t) { return noise_boundary(a, c, r, t); };
      const double f0 = n(0, 0);
      const double a11 = (n(h, 0) - 2 * f0 + n(-h, 0)) / (h * h);
      const double a22 = (n(0, h) - 2 * f0 + n(0, -h)) / (h * h);
      const double a12 = (n(h, h) - n(h, -h) - n(-h, h) + n(-h, -h)) / (4 * h * h);
      m.worst = std::max({m.worst, rel_diff(a11, 2 * (2 * a - c)), rel_diff(a22, 2 * c),
                          std::abs(a12)});
    }
    return m;
  }

  Measured local_ops_oracle() {
    Measured m{0.0, "6-parameter search minimum vs e^(-2 kappa), kappa in {0,0.25,0.5,1}"};
    for (double kappa : {0.0, 0.25, 0.5, 1.0}) {
      const auto [a, c] = tms_parameters(kappa);
      LocalOpsSearchOptions o;
      o.seed = opts_.seed;
      const auto r = oracle_local_ops_search(a, c, o);
      m.worst = std::max({m.worst, *r.value_residual, std::abs(r.value - std::exp(-2 * kappa))});
      shapes_.push_back(r);
    }
    return m;
  }

  Measured local_ops_shape() {
    if (shapes_.empty()) return {kInf, "oracle did not run"};
    Measured m{0.0, "|r_A|, |r_B| and |theta_+| (c > 0) at the oracle minimizer"};
    for (const auto& r : shapes_) {
      m.worst = std::max({m.worst, std::abs(r.parameter("r_A")), std::abs(r.parameter("r_B"))});
      if (r.parameter("c") > 0.0) m.worst = std::max(m.worst, std::abs(r.parameter("theta_plus")));
    }
    return m;
  }

  std::vector<std::pair<CovarianceMatrix2Mode, SymplecticMat4>> local_ops_cases() {
    std::vector<std::pair<CovarianceMatrix2Mode, SymplecticMat4>> cases;
    for (double g : g_grid()) {
      for (double gp : gprime_grid()) {
        cases.emplace_back(shared_state_qnd(g), make_bell_qnd(gp));
        cases.emplace_back(shared_state_qnd(g),
                           bell_matrix(BellBeamSplitter::from_asymmetry(gp)));
      }
      cases.emplace_back(shared_state_qnd(g).transformed(
                             direct_sum(random_symplectic2(rng_), random_symplectic2(rng_))),
                         random_bell_interaction(rng_));
    }
    return cases;
  }

  Measured local_ops_pipeline() {
    Measured m{0.0, "pipeline N at S_A = Sigma^-1 m_A, S_B = m_B vs 2(sqrt det A - sqrt|det C|)"};
    for (const auto& [v, r] : local_ops_cases()) {
      const auto ops = optimal_local_ops(v, r);
      const auto res = run_protocol(v, BellGeneric{r}, ops.s_a, ops.s_b, UnityGain{});
      const double expected =
          2.0 * (std::sqrt(v.a().determinant()) - std::sqrt(std::abs(v.c().determinant())));
      m.worst = std::max(m.worst, std::abs(photon_noise(res.noise) - expected));
    }
    return m;
  }

  Measured isotropy() {
    Measured m{0.0, "|2N - N_min I| at the optimal local operations"};
    for (const auto& [v, r] : local_ops_cases()) {
      const auto ops = optimal_local_ops(v, r);
      const auto res = run_protocol(v, BellGeneric{r}, ops.s_a, ops.s_b, UnityGain{});
      m.worst = std::max(m.worst, (res.noise.two_n() - ops.noise_min * Mat2::Identity())
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    return m;
  }

  Measured improved() {
    Measured m{0.0, "<X'^2> = <P'^2> = sqrt(1+g^2) - g and N = N_min with improved squeezers"};
    for (double g : g_grid()) {
      for (double gp : gprime_grid()) {
        ProtocolConfig cfg;
        cfg.g = g;
        cfg.bell = BellQnd{gp};
        const auto ops = improved_squeezers(g, gp);
        cfg.s_a = ops.s_a;
        cfg.s_b = ops.s_b;
        const auto res = run_protocol(cfg);
        const double expected = std::hypot(1.0, g) - g;
        const auto opt = optimal_local_ops(shared_state_qnd(g), make_bell_qnd(gp));
        m.worst = std::max({m.worst, std::abs(res.noise.var_x() - expected),
                            std::abs(res.noise.var_p() - expected),
                            std::abs(photon_noise(res.noise) - opt.noise_min)});
      }
    }
    return m;
  }

  Measured tms_minimality() {
    Measured m{0.0, "max(e^(-2 kappa) - EPR-sum variance) over 50 random local ops"};
    Eigen::Matrix<double, 2, 4> epr;
    epr << 1, 0, 1, 0, 0, 1, 0, -1;
    for (double kappa : {0.25, 0.5, 1.0}) {
      const auto [a, c] = tms_parameters(kappa);
      Mat4 tms;
      // clang-format off
      tms << a, 0, -c, 0,
             0, a, 0, c,
             -c, 0, a, 0,
             0, c, 0, a;
      // clang-format on
      const CovarianceMatrix2Mode v(tms);
      for (int i = 0; i < 50; ++i) {
        const auto w = v.transformed(direct_sum(random_symplectic2(rng_, 1.5),
                                                random_symplectic2(rng_, 1.5)));
        const double total = 0.5 * (epr * w.matrix() * epr.transpose()).trace();
        m.worst = std::max(m.worst, std::exp(-2 * kappa) - total);
      }
    }
    return m;
  }

  Options opts_;
  Tolerances tol_;
  std::mt19937_64 rng_;
  Report report_;
  std::vector<OptimumResult> shapes_;
};

}  // namespace

std::optional<ToleranceProfile> parse_profile(std::string_view name) {
  if (name == "default") return ToleranceProfile::kDefault;
  if (name == "strict") return ToleranceProfile::kStrict;
  return std::nullopt;
}

ToleranceProfile profile_from_env(ToleranceProfile fallback) {
  const char* env = std::getenv("CVTL_TOL");
  if (env == nullptr || *env == '\0') return fallback;
  const auto p = parse_profile(env);
  if (!p) {
    throw std::invalid_argument(std::string("CVTL_TOL must be 'default' or 'strict', got '") +
                                env + "'");
  }
  return *p;
}

Tolerances Tolerances::for_profile(ToleranceProfile p) {
  Tolerances t;
  if (p == ToleranceProfile::kStrict) {
    for (double* v : {&t.symplectic, &t.decomposition, &t.standard_form_pattern, &t.pipeline,
                      &t.closed_form, &t.oracle_parameter, &t.oracle_value,
                      &t.local_ops_oracle, &t.stationarity, &t.isotropy, &t.minimality}) {
      *v *= 1e-2;
    }
  }
  return t;
}

int Report::passed() const {
  return static_cast<int>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.passed; }));
}

int Report::failed() const { return static_cast<int>(outcomes.size()) - passed(); }

Report run_invariant_suite(const Options& opts) { return Suite(opts).run(); }

}  // namespace cvtl::check
