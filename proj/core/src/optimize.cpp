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

#include "cvtl/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cvtl/metrics.hpp"
#include "cvtl/search.hpp"

namespace cvtl {
namespace {

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    throw std::invalid_argument(os.str());
  }
}

// Noise in terms of s~A = s3 sA s3 directly.
double noise_from_tilde(double a, double c, const Mat2& st_a, const Mat2& sb) {
  return 0.5 * a * (st_a * st_a.transpose() + sb * sb.transpose()).trace() -
         c * (st_a * sb.transpose()).trace();
}

double wrap_angle(double u) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::remainder(u, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  return w;
}

}  // namespace

const char* to_string(OptimumMethod m) {
  switch (m) {
    case OptimumMethod::kClosedForm:
      return "closed_form";
    case OptimumMethod::kNumericOracle:
      return "numeric_oracle";
  }
  return "unknown";
}

const char* to_string(GainObjective o) {
  switch (o) {
    case GainObjective::kMinV:
      return "min_V";
    case GainObjective::kMaxT:
      return "max_T";
  }
  return "unknown";
}

double OptimumResult::parameter(const std::string& key) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return v;
  }
  throw std::out_of_range("optimum has no parameter '" + key + "'");
}

double gain_objective_v(double g, double g_prime, double gx, double gp) {
  const auto n = added_noise_qnd_scalar(g, g_prime, gx, gp);
  return cond_var_product(n.var_x, n.var_p);
}

double gain_objective_t(double g, double g_prime, double gx, double gp) {
  const auto n = added_noise_qnd_scalar(g, g_prime, gx, gp);
  return signal_transfer(gx, gp, n.var_x, n.var_p);
}

GainPair gains_min_v(double g, double g_prime) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  return {g / g_prime, g * g_prime / (1.0 + g * g)};
}

GainPair gains_max_t(double g, double g_prime) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  return {(1.0 + g * g) / (g * g_prime), g_prime / g};
}

double v_min(double g) { return 1.0 / (4.0 * (1.0 + g * g)); }

double t_at_v_min(double g, double g_prime) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  const double g2 = g * g;
  const double h2 = g_prime * g_prime;
  const double num = h2 * (g2 - (std::sqrt(5.0) + 1.0) / 2.0) *
                     (g2 + (std::sqrt(5.0) - 1.0) / 2.0);
  return 1.0 + num / ((g2 + h2) * (1.0 + g2 + g2 * h2));
}

double t_max(double g, double g_prime) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  const double g2 = g * g;
  const double h2 = g_prime * g_prime;
  return 1.0 + g2 * h2 / ((1.0 + h2) * (1.0 + g2 + h2));
}

double v_at_t_max(double g) {
  require_positive(g, "g");
  const double g2 = g * g;
  return 0.25 * (1.0 / g2 + 1.0 / (g2 * g2));
}

double optimal_gprime(double g) { return std::pow(1.0 + g * g, 0.25); }

double t_v_min_opt(double g) {
  const double g2 = g * g;
  return 2.0 * g2 / (g2 + std::sqrt(1.0 + g2));
}

double t_max_opt(double g) {
  const double s = std::sqrt(1.0 + g * g);
  return 2.0 * s / (1.0 + s);
}

double compensating_squeeze(double g, double g_prime) {
  require_positive(g_prime, "g'");
  return std::log(optimal_gprime(g) / g_prime);
}

double vt_quantum_threshold() { return std::sqrt((std::sqrt(5.0) + 1.0) / 2.0); }

double hk_quantum_threshold() { return std::sqrt(3.0 / 10.0); }

OptimumResult optimal_gprime_fidelity(double g, const GprimeSearchOptions& opts) {
  require_positive(g, "g");
  const auto best = search::bracket_and_minimize(
      [g](double h) { return -qnd_fidelity(g, h); }, opts.lo, opts.hi,
      opts.grid_points, /*log_spaced=*/true, {opts.tol, 500});
  OptimumResult r;
  r.name = "optimal_gprime_fidelity";
  r.parameters = {{"g", g}, {"g_prime", best.x}};
  r.value = -best.fx;
  r.method = OptimumMethod::kNumericOracle;
  return r;
}

OptimumResult oracle_gprime_search(double g, const GprimeSearchOptions& opts) {
  require_positive(g, "g");
  const auto best = search::bracket_and_minimize(
      [g](double h) { return -t_max(g, h); }, opts.lo, opts.hi,
      opts.grid_points, /*log_spaced=*/true, {opts.tol, 500});
  OptimumResult r;
  r.name = "optimal_gprime";
  r.parameters = {{"g", g}, {"g_prime", best.x}};
  r.value = -best.fx;
  r.method = OptimumMethod::kNumericOracle;
  r.parameter_residual = std::abs(best.x - optimal_gprime(g));
  r.value_residual = std::abs(r.value - t_max_opt(g));
  return r;
}

LocalOps improved_squeezers(double g, double g_prime) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  const double a = optimal_gprime(g);
  return {SymplecticMat2(Eigen::Vector2d(a / g_prime, g_prime / a).asDiagonal()),
          SymplecticMat2(Eigen::Vector2d(1.0 / a, a).asDiagonal())};
}

OptimalLocalOps optimal_local_ops(const CovarianceMatrix2Mode& shared,
                                  const SymplecticMat4& bell) {
  const StandardFormResult sf = two_mode_standard_form(shared);
  const BellMatrices yz = extract_yz(bell);
  const SymplecticMat2 sigma = sigma_matrix(yz.y, yz.z);
  OptimalLocalOps out;
  out.s_a = sigma.inverse() * sf.m_a;
  out.s_b = sf.m_b;
  out.noise_min = sf.epr_variance();
  out.standard_form = sf;
  return out;
}

double noise_standard_form(double a, double c, const SymplecticMat2& s_a,
                           const SymplecticMat2& s_b) {
  if (!(std::isfinite(a) && std::isfinite(c) && a >= 0.5 - 1e-12 && c >= 0.0 &&
        std::abs(a * a - c * c - 0.25) <= 1e-9 * std::max(1.0, a * a))) {
    std::ostringstream os;
    os << "standard-form parameters need a >= 1/2, c >= 0, a^2 - c^2 = 1/4; "
       << "got a=" << a << " c=" << c;
    throw std::invalid_argument(os.str());
  }
  const Mat2 s3 = pauli_z();
  return noise_from_tilde(a, c, s3 * s_a.matrix() * s3, s_b.matrix());
}

double noise_bloch_messiah(double a, double c, double r_a, double r_b,
                           double theta_plus, double theta_minus) {
  const double cp = std::cosh(r_a + r_b);
  const double cm = std::cosh(r_a - r_b);
  return 2.0 * a * cp * cm -
         c * ((cp + cm) * std::cos(theta_plus) + (cp - cm) * std::cos(theta_minus));
}

double noise_boundary(double a, double c, double r_plus, double theta_plus) {
  const double ch = std::cosh(r_plus);
  return 2.0 * ch * (a * ch - c * std::cos(theta_plus));
}

std::pair<double, double> tms_parameters(double kappa) {
  return {0.5 * std::cosh(2.0 * kappa), 0.5 * std::sinh(2.0 * kappa)};
}

OptimumResult oracle_gain_search(double g, double g_prime,
                                 GainObjective objective,
                                 const GainSearchOptions& opts) {
  require_positive(g, "g");
  require_positive(g_prime, "g'");
  if (opts.grid < 2 || !(opts.lo > 0.0 && opts.hi > opts.lo)) {
    throw std::invalid_argument("gain search needs a >= 2 point grid on 0 < lo < hi");
  }
  const double sign = objective == GainObjective::kMinV ? 1.0 : -1.0;
  auto cost = [&](double gx, double gp) {
    const double val = objective == GainObjective::kMinV
                           ? gain_objective_v(g, g_prime, gx, gp)
                           : gain_objective_t(g, g_prime, gx, gp);
    return sign * val;
  };

  const double log_lo = std::log(opts.lo);
  const double step = (std::log(opts.hi) - log_lo) / (opts.grid - 1);
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd x0(2);
  for (int i = 0; i < opts.grid; ++i) {
    const double lx = log_lo + i * step;
    for (int j = 0; j < opts.grid; ++j) {
      const double lp = log_lo + j * step;
      const double v = cost(std::exp(lx), std::exp(lp));
      if (v < best) {
        best = v;
        x0 << lx, lp;
      }
    }
  }

  search::NelderMeadOptions nm;
  nm.initial_step = step;
  nm.f_tol = 1e-16;
  nm.x_tol = 1e-11;
  const auto refined = search::nelder_mead(
      [&](const Eigen::VectorXd& lg) { return cost(std::exp(lg(0)), std::exp(lg(1))); },
      x0, nm);

  const double gx = std::exp(refined.x(0));
  const double gp = std::exp(refined.x(1));
  const GainPair closed = objective == GainObjective::kMinV
                              ? gains_min_v(g, g_prime)
                              : gains_max_t(g, g_prime);

  OptimumResult r;
  r.name = std::string("oracle_gain_search/") + to_string(objective);
  r.parameters = {{"g", g}, {"g_prime", g_prime}, {"Gx", gx}, {"Gp", gp}};
  r.value = sign * refined.fx;
  r.method = OptimumMethod::kNumericOracle;
  r.parameter_residual =
      std::max(std::abs(gx - closed.gx), std::abs(gp - closed.gp));
  r.value_residual = std::abs(sign * cost(closed.gx, closed.gp) - r.value);
  return r;
}

OptimumResult oracle_local_ops_search(double a, double c,
                                      const LocalOpsSearchOptions& opts) {
  if (opts.starts < 1) throw std::invalid_argument("need at least one start");
  // Validates (a, c).
  (void)noise_standard_form(a, c, SymplecticMat2(), SymplecticMat2());
  // x = (r_A, r_B, alpha, beta, gamma, delta), parametrizing s~A and sB.
  auto noise = [&](const Eigen::VectorXd& x) {
    const SymplecticMat2 st_a =
        make_phase(x(2)) * make_squeezer(x(0)) * make_phase(x(3));
    const SymplecticMat2 s_b =
        make_phase(x(4)) * make_squeezer(x(1)) * make_phase(x(5));
    return noise_from_tilde(a, c, st_a.matrix(), s_b.matrix());
  };

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> squeeze(-opts.r_range, opts.r_range);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  search::NelderMeadOptions nm;
  nm.initial_step = 0.3;
  nm.f_tol = 1e-15;
  nm.x_tol = 1e-9;
  nm.max_evaluations = 40000;

  search::VectorMinimum best;
  best.fx = std::numeric_limits<double>::infinity();
  for (int s = 0; s < opts.starts; ++s) {
    Eigen::VectorXd x0(6);
    x0 << squeeze(rng), squeeze(rng), angle(rng), angle(rng), angle(rng),
        angle(rng);
    auto m = search::nelder_mead(noise, x0, nm);
    if (m.fx < best.fx) best = std::move(m);
  }

  const Eigen::VectorXd& x = best.x;
  OptimumResult r;
  r.name = "oracle_local_ops_search";
  r.parameters = {{"a", a},
                  {"c", c},
                  {"r_A", x(0)},
                  {"r_B", x(1)},
                  {"theta_plus", wrap_angle(x(2) + x(3) - x(4) - x(5))},
                  {"theta_minus", wrap_angle(x(2) - x(3) - x(4) + x(5))}};
  r.value = best.fx;
  r.method = OptimumMethod::kNumericOracle;
  r.value_residual = std::abs(best.fx - 2.0 * (a - c));
  r.seed = opts.seed;
  return r;
}

}  // namespace cvtl
